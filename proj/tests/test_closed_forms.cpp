#include <doctest.h>

#include "mop/closed_forms.hpp"
#include "mop/moments.hpp"
#include "mop/solver.hpp"

using namespace mop;

TEST_CASE("hermite and charlier closed forms") {
    const auto herm = FamilySpec::hermite({Rational(1), Rational(-1)});
    const auto h = closed_form_coefficients(herm, MultiIndex({2, 1}));
    CHECK(h.a == std::vector<Rational>{Rational(1), Rational(1, 2)});
    CHECK(h.b == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});

    const auto charl = FamilySpec::charlier({Rational(1), Rational(2)});
    const auto c = closed_form_coefficients(charl, MultiIndex({1, 1}));
    CHECK(c.a == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(c.b == std::vector<Rational>{Rational(3), Rational(4)});
}

TEST_CASE("laguerre1 closed form and classical r=1 reduction") {
    const auto single = FamilySpec::laguerre1({Rational(1, 2)});
    const auto s = closed_form_coefficients(single, MultiIndex({3}));
    CHECK(s.a == std::vector<Rational>{Rational(21, 2)}); // n(n+alpha) = 3 * 7/2
    CHECK(s.b == std::vector<Rational>{Rational(15, 2)}); // 2n+alpha+1

    // fixture values frozen from the moment oracle
    const auto fixture = FamilySpec::laguerre1({Rational(1, 2), Rational(5, 3)});
    const auto f = closed_form_coefficients(fixture, MultiIndex({2, 1}));
    CHECK(f.a == std::vector<Rational>{Rational(-25), Rational(104, 3)});
    CHECK(f.b == std::vector<Rational>{Rational(13, 2), Rational(20, 3)});

    CHECK(closed_form_coefficients(fixture, MultiIndex({0, 2})).a[0] == Rational(0));
}

TEST_CASE("laguerre2 closed form") {
    const auto spec = FamilySpec::laguerre2(Rational(0), {Rational(1), Rational(2)});
    const auto c = closed_form_coefficients(spec, MultiIndex({1, 1}));
    CHECK(c.a == std::vector<Rational>{Rational(2), Rational(1, 2)});
    CHECK(c.b == std::vector<Rational>{Rational(9, 2), Rational(3)});

    // r = 1, c = 1 recovers the classical monic Laguerre coefficients
    const Rational alpha(1, 2);
    const auto single = FamilySpec::laguerre2(alpha, {Rational(1)});
    for (int n = 0; n <= 6; ++n) {
        const auto cc = closed_form_coefficients(single, MultiIndex({n}));
        CHECK(cc.a[0] == Rational(n) * (Rational(n) + alpha));
        CHECK(cc.b[0] == Rational(2 * n) + alpha + Rational(1));
    }
}

TEST_CASE("jacobi-pineiro closed form, r=1 Legendre value") {
    const auto leg = FamilySpec::jacobi_pineiro({Rational(0)}, Rational(0));
    const auto c = closed_form_coefficients(leg, MultiIndex({1}));
    CHECK(c.a == std::vector<Rational>{Rational(1, 12)});

    // fixture a values frozen from the moment oracle
    const auto fixture = FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(1, 3)}, Rational(1, 3));
    const auto f = closed_form_coefficients(fixture, MultiIndex({1, 1}));
    CHECK(f.a == std::vector<Rational>{Rational(42336, 168751), Rational(-510, 2783)});
}

TEST_CASE("jp delta: closed form, partial fractions, and frozen values") {
    const auto leg = FamilySpec::jacobi_pineiro({Rational(0)}, Rational(0));
    CHECK(jp_delta(leg, MultiIndex({1})) == Rational(-1, 2));
    CHECK(jp_delta_partial_fraction(leg, MultiIndex({2})) == Rational(-1));
    CHECK(jp_delta(leg, MultiIndex({0})) == Rational(0));
    CHECK(jp_delta_partial_fraction(leg, MultiIndex({0})) == Rational(0));

    // r=2, alpha=(1/2,1/3), beta=0, n=(1,1): equals the subleading
    // coefficient of the moment-solved polynomial (frozen: -1)
    const auto two = FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(1, 3)}, Rational(0));
    CHECK(jp_delta(two, MultiIndex({1, 1})) == Rational(-1));
    const MopSolver solver(build_moments(two, 10));
    CHECK(jp_delta(two, MultiIndex({1, 1})) ==
          solver.type2(MultiIndex({1, 1})).subleading());

    // fixture deltas frozen from the aux-polynomial oracle
    const auto fixture = FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(1, 3)}, Rational(1, 3));
    CHECK(jp_delta(fixture, MultiIndex({2, 1})) == Rational(-68, 49));
    CHECK(jp_delta(fixture, MultiIndex({3, 2})) == Rational(-2767, 1219));
    for (const auto& n : enumerate_box({3, 3})) {
        CHECK(jp_delta(fixture, n) == jp_delta_partial_fraction(fixture, n));
    }
}

TEST_CASE("laguerre1 sum identity") {
    const auto single = FamilySpec::laguerre1({Rational(1, 2)});
    CHECK(laguerre1_sum_identity(single, MultiIndex({0})) == Rational(0));
    CHECK(laguerre1_sum_identity(single, MultiIndex({3})) == Rational(21, 2));

    const auto fixture = FamilySpec::laguerre1({Rational(1, 2), Rational(5, 3)});
    CHECK(laguerre1_sum_identity(fixture, MultiIndex({2, 1})) == Rational(29, 3));
    for (const auto& n : enumerate_box({4, 4})) {
        const auto c = closed_form_coefficients(fixture, n);
        CHECK(laguerre1_sum_identity(fixture, n) == c.a[0] + c.a[1]);
    }
}

TEST_CASE("jp sum identity equals the coefficient sum") {
    const auto leg = FamilySpec::jacobi_pineiro({Rational(0)}, Rational(0));
    CHECK(jp_sum_identity(leg, MultiIndex({0})) == Rational(0));
    CHECK(jp_sum_identity(leg, MultiIndex({1})) == Rational(1, 12));

    const auto fixture = FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(1, 3)}, Rational(1, 3));
    CHECK(jp_sum_identity(fixture, MultiIndex({1, 1})) == Rational(125526, 1856261));
    for (const auto& n : enumerate_box({3, 3})) {
        const auto c = closed_form_coefficients(fixture, n);
        CHECK(jp_sum_identity(fixture, n) == c.a[0] + c.a[1]);
    }
}

TEST_CASE("residue identity: sum of param/node' residues is |n|") {
    const auto lag = FamilySpec::laguerre1({Rational(1, 2), Rational(5, 3)});
    const auto jp = FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(1, 3)}, Rational(1, 3));
    for (const auto& n : enumerate_box({3, 3})) {
        CHECK(aux_residue_sum(lag, n) == Rational(n.size()));
        CHECK(aux_residue_sum(jp, n) == Rational(n.size()));
    }
}

TEST_CASE("laguerre1 a coefficients agree with the residue form") {
    const auto spec = FamilySpec::laguerre1({Rational(1, 2), Rational(5, 3)});
    for (const auto& n : enumerate_box({3, 3})) {
        const auto aux = AuxPolynomials::build(spec, n);
        const auto c = closed_form_coefficients(spec, n);
        for (int j = 1; j <= 2; ++j) {
            const Rational node = Rational(n[j]) + spec.per_measure()[static_cast<std::size_t>(j - 1)];
            const Rational via_residue =
                node * aux.param_poly.evaluate(node) / aux.node_poly.derivative_at(node);
            CHECK(via_residue == c.a[static_cast<std::size_t>(j - 1)]);
        }
    }
}

TEST_CASE("closed forms reject unsupported input") {
    const auto herm = FamilySpec::hermite({Rational(1)});
    CHECK_THROWS_AS(jp_delta(herm, MultiIndex({1})), UnsupportedFamily);
    CHECK_THROWS_AS(laguerre1_sum_identity(herm, MultiIndex({1})), UnsupportedFamily);
    CHECK_THROWS_AS(jp_sum_identity(herm, MultiIndex({1})), UnsupportedFamily);
    CHECK_THROWS_AS(aux_residue_sum(herm, MultiIndex({1})), UnsupportedFamily);
    CHECK_THROWS_AS(closed_form_coefficients(herm, MultiIndex({1, 1})), DimensionMismatch);
}
