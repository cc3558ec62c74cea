#include <doctest.h>

#include <random>

#include "mop/bivariate.hpp"
#include "mop/rational.hpp"
#include "mop/rational_matrix.hpp"

using namespace mop;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = 1 + static_cast<long>(rng() % 9);
    return Rational(num, den);
}

// Independent oracle: cofactor expansion along the first row.
Rational cofactor_determinant(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Rational term = m.at(0, j) * cofactor_determinant(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

TEST_CASE("rational parsing and canonical serialization") {
    CHECK(Rational::parse("3/2").str() == "3/2");
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("determinant of small hand-checked matrices") {
    RationalMatrix one(1, 1);
    one.at(0, 0) = Rational(1);
    CHECK(determinant(one) == Rational(1));

    // oracle: cofactor expansion of [[1,1],[1,2]] = 1*2 - 1*1 = 1
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(1);
    m.at(1, 1) = Rational(2);
    CHECK(cofactor_determinant(m) == Rational(1));
    CHECK(determinant(m) == Rational(1));

    RationalMatrix perm(2, 2);
    perm.at(0, 1) = Rational(1);
    perm.at(1, 0) = Rational(1);
    CHECK(determinant(perm) == Rational(-1));

    CHECK(determinant(RationalMatrix(0, 0)) == Rational(1));
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion up to size 4") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_rational(rng);
        }
        CHECK(determinant(m) == cofactor_determinant(m));
    }
}

TEST_CASE("solve on small hand-checked systems") {
    const auto id = RationalMatrix::identity(2);
    const auto sol = solve(id, {Rational(3, 2), Rational(-1)});
    CHECK(sol == std::vector<Rational>{Rational(3, 2), Rational(-1)});

    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(1);
    m.at(1, 1) = Rational(2);
    const auto x = solve(m, {Rational(0), Rational(1)});
    CHECK(x == std::vector<Rational>{Rational(-1), Rational(1)});
    // substitution oracle
    CHECK(multiply(m, x) == std::vector<Rational>{Rational(0), Rational(1)});

    RationalMatrix rank1(2, 2);
    rank1.at(0, 0) = Rational(1);
    rank1.at(0, 1) = Rational(1);
    rank1.at(1, 0) = Rational(2);
    rank1.at(1, 1) = Rational(2);
    CHECK_THROWS_AS(solve(rank1, {Rational(1), Rational(0)}), SingularMatrix);

    CHECK_THROWS_AS(solve(m, {Rational(1)}), DimensionMismatch);
}

TEST_CASE("solve(m, m v) = v on random nonsingular matrices") {
    std::mt19937_64 rng(4321);
    int done = 0;
    while (done < 60) {
        const std::size_t n = 1 + rng() % 5;
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_rational(rng);
        }
        if (determinant(m).is_zero()) continue;
        std::vector<Rational> v(n);
        for (auto& e : v) e = random_rational(rng);
        CHECK(solve(m, multiply(m, v)) == v);
        ++done;
    }
}

TEST_CASE("bivariate polynomials compare exactly in canonical form") {
    // x*y vs x*y
    BivariatePolynomial xy;
    xy.add_term(1, 1, Rational(1));
    BivariatePolynomial xy2;
    xy2.add_term(1, 1, Rational(1));
    CHECK(xy == xy2);

    // x - y vs -(y - x)
    BivariatePolynomial x_minus_y;
    x_minus_y.add_term(1, 0, Rational(1));
    x_minus_y.add_term(0, 1, Rational(-1));
    BivariatePolynomial y_minus_x;
    y_minus_x.add_term(0, 1, Rational(1));
    y_minus_x.add_term(1, 0, Rational(-1));
    y_minus_x.scale(Rational(-1));
    CHECK(x_minus_y == y_minus_x);

    // explicit zero terms are pruned
    BivariatePolynomial x_only;
    x_only.add_term(1, 0, Rational(1));
    BivariatePolynomial x_plus_zero_y;
    x_plus_zero_y.add_term(1, 0, Rational(1));
    x_plus_zero_y.add_term(0, 1, Rational(0));
    CHECK(x_only == x_plus_zero_y);
    x_plus_zero_y.add_term(0, 1, Rational(2));
    x_plus_zero_y.add_term(0, 1, Rational(-2));
    CHECK(x_only == x_plus_zero_y);
}

TEST_CASE("bivariate arithmetic and degrees") {
    const BivariatePolynomial p = BivariatePolynomial::in_x({Rational(1), Rational(2)}); // 1 + 2x
    const BivariatePolynomial q = BivariatePolynomial::in_y({Rational(0), Rational(1)}); // y
    const BivariatePolynomial prod = p * q; // y + 2xy
    CHECK(prod.degree_x() == 1);
    CHECK(prod.degree_y() == 1);

    // (x - y)(x + y) = x^2 - y^2
    BivariatePolynomial x_plus_y;
    x_plus_y.add_term(1, 0, Rational(1));
    x_plus_y.add_term(0, 1, Rational(1));
    const BivariatePolynomial diff_sq = x_plus_y.times_x_minus_y();
    BivariatePolynomial expected;
    expected.add_term(2, 0, Rational(1));
    expected.add_term(0, 2, Rational(-1));
    CHECK(diff_sq == expected);

    CHECK((p - p).is_zero());
    CHECK(BivariatePolynomial().degree_x() == -1);
}
