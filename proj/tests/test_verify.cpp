#include <doctest.h>

#include <random>

#include "mop/closed_forms.hpp"
#include "mop/moments.hpp"
#include "mop/verify.hpp"

using namespace mop;

namespace {

const FamilySpec kCharlier = FamilySpec::charlier({Rational(1), Rational(2)});
const FamilySpec kHermite = FamilySpec::hermite({Rational(1), Rational(-1)});

bool all_pass_no_skips(const VerificationReport& r) {
    return r.pass() && r.skipped_count() == 0;
}

} // namespace

TEST_CASE("pde r2 passes on charlier and hermite closed-form fields") {
    for (const auto& spec : {kCharlier, kHermite}) {
        const auto field = CoefficientField::from_closed_form(spec, {5, 5});
        const auto report = check_pde_r2(field, {4, 4});
        CHECK(report.pass());
        // boundary skips only at n = 0 / m = 0
        for (const auto& rec : report.checks()) {
            if (rec.status == CheckStatus::skipped) {
                CHECK(((rec.name == "a-ratio" && rec.indices[0][1] == 0) ||
                       (rec.name == "b-ratio" && rec.indices[0][2] == 0)));
            }
        }
    }
}

TEST_CASE("pde r2 flags a mutated coefficient with a witness") {
    auto field = CoefficientField::from_closed_form(kCharlier, {5, 5});
    NnCoefficients mutated = field.at(MultiIndex({2, 2}));
    mutated.a[0] = Rational(99);
    field.set(MultiIndex({2, 2}), mutated);
    const auto report = check_pde_r2(field, {4, 4});
    CHECK_FALSE(report.pass());
    std::size_t fails = 0;
    for (const auto& rec : report.checks()) {
        if (rec.status == CheckStatus::fail) {
            ++fails;
            CHECK(!rec.witness.empty());
            // every failing instance touches (2,2)
            const auto& n = rec.indices[0];
            CHECK(std::abs(n[1] - 2) <= 1);
            CHECK(std::abs(n[2] - 2) <= 1);
        }
    }
    CHECK(fails > 0);
}

TEST_CASE("pde general agrees verdict-for-verdict with pde r2 at r = 2") {
    const auto field = CoefficientField::from_closed_form(kCharlier, {4, 4});
    const auto r2 = check_pde_r2(field, {3, 3});
    const auto general = check_pde_general(field, {3, 3});
    CHECK(r2.pass() == general.pass());
    CHECK(all_pass_no_skips(r2) == all_pass_no_skips(general));

    auto mutated_field = field;
    NnCoefficients mutated = mutated_field.at(MultiIndex({1, 1}));
    mutated.b[1] += Rational(1, 7);
    mutated_field.set(MultiIndex({1, 1}), mutated);
    CHECK_FALSE(check_pde_r2(mutated_field, {3, 3}).pass());
    CHECK_FALSE(check_pde_general(mutated_field, {3, 3}).pass());
}

TEST_CASE("pde general passes for r = 3 families") {
    const auto lag2 = FamilySpec::laguerre2(Rational(1, 2), {Rational(1), Rational(2), Rational(3)});
    const auto field = CoefficientField::from_closed_form(lag2, {3, 3, 3});
    CHECK(check_pde_general(field, {2, 2, 2}).pass());
}

TEST_CASE("pde general passes on a jacobi-pineiro field") {
    const auto jp = FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(5, 3)}, Rational(1, 3));
    const auto field = CoefficientField::from_closed_form(jp, {4, 4});
    CHECK(check_pde_general(field, {3, 3}).pass());
}

TEST_CASE("differential check: exact triple agreement on fixtures") {
    for (const auto& spec : {kHermite, kCharlier}) {
        const MopSolver solver(build_moments(spec, required_moment_depth({5, 5})));
        const auto report = differential_check(spec, solver, {5, 5});
        CHECK(all_pass_no_skips(report));
    }
    const auto lag1 = FamilySpec::laguerre1({Rational(1, 2), Rational(5, 3)});
    const MopSolver solver(build_moments(lag1, required_moment_depth({4, 4})));
    CHECK(all_pass_no_skips(differential_check(lag1, solver, {4, 4})));
    CHECK(all_pass_no_skips(check_family_identities(lag1, {4, 4})));
}

TEST_CASE("biorthogonality report covers the three-case pattern") {
    const MopSolver solver(build_moments(kCharlier, required_moment_depth({3, 3})));
    const auto report = check_biorthogonality(solver, {3, 3});
    CHECK(report.pass());
    bool found_pair = false;
    for (const auto& rec : report.checks()) {
        if (rec.indices[0] == MultiIndex({2, 1}) && rec.indices[1] == MultiIndex({1, 1})) {
            found_pair = true;
            CHECK(rec.status == CheckStatus::pass);
        }
    }
    CHECK(found_pair);
}

TEST_CASE("generation consistency and type1 recurrences pass on the fixture") {
    const auto field = CoefficientField::from_closed_form(kCharlier, {4, 4});
    CHECK(all_pass_no_skips(check_generation_consistency(field, {3, 3})));

    const MopSolver solver(build_moments(kCharlier, required_moment_depth({3, 3})));
    CHECK(all_pass_no_skips(check_type1_recurrences(solver, {3, 3})));
}

TEST_CASE("generation consistency flags a perturbed field") {
    auto field = CoefficientField::from_closed_form(kCharlier, {2, 2});
    NnCoefficients mutated = field.at(MultiIndex({0, 0}));
    mutated.b[0] += Rational(1);
    field.set(MultiIndex({0, 0}), mutated);
    const auto report = check_generation_consistency(field, {2, 2});
    CHECK_FALSE(report.pass());
}

TEST_CASE("negative controls: single mutations are detected by pde or generation") {
    struct Mutation {
        MultiIndex index;
        bool mutate_a;
        int direction;
    };
    const std::vector<Mutation> mutations{
        {MultiIndex({2, 2}), true, 1},
        {MultiIndex({1, 2}), false, 2},
        {MultiIndex({0, 0}), false, 1},
        {MultiIndex({3, 1}), true, 2},
    };
    for (const auto& m : mutations) {
        auto field = CoefficientField::from_closed_form(kCharlier, {4, 4});
        NnCoefficients c = field.at(m.index);
        auto& slot = m.mutate_a ? c.a[static_cast<std::size_t>(m.direction - 1)]
                                : c.b[static_cast<std::size_t>(m.direction - 1)];
        slot += Rational(1, 3);
        if (m.mutate_a && m.index[m.direction] == 0) continue; // would violate the field invariant
        field.set(m.index, c);
        const bool pde_catches = !check_pde_r2(field, {3, 3}).pass();
        const bool generation_catches = !check_generation_consistency(field, {3, 3}).pass();
        CHECK((pde_catches || generation_catches));
    }
}

TEST_CASE("cd check passes with all paths and with seeded sampling") {
    const MopSolver solver(build_moments(kCharlier, required_moment_depth({2, 2})));
    CHECK(all_pass_no_skips(check_cd(solver, {2, 2}, 20, 0)));
    CHECK(all_pass_no_skips(check_cd(solver, {2, 2}, 2, 7))); // sampled
}

TEST_CASE("family identities pass on the jacobi-pineiro fixture") {
    const auto jp = FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(1, 3)}, Rational(1, 3));
    CHECK(all_pass_no_skips(check_family_identities(jp, {3, 3})));
    CHECK(check_family_identities(kHermite, {3, 3}).checks().empty());
}

TEST_CASE("identities hold for arbitrary normal moment tables, not just families") {
    // Random rational tables stand in for generic (possibly signed)
    // measure systems; the biorthogonality pattern, both coefficient
    // routes, the per-weight recurrences and the CD identity are algebraic
    // consequences of normality alone.
    std::mt19937_64 rng(20240817);
    int successful = 0;
    int attempts = 0;
    while (successful < 5 && attempts < 25) {
        ++attempts;
        std::vector<std::vector<Rational>> rows(2);
        for (auto& row : rows) {
            row.push_back(Rational(1 + static_cast<long>(rng() % 3)));
            for (int k = 1; k <= 11; ++k) {
                row.push_back(Rational(static_cast<long>(rng() % 19) - 9,
                                       1 + static_cast<long>(rng() % 4)));
            }
        }
        const MopSolver solver(MomentTable(2, 11, std::move(rows)));
        try {
            const std::vector<int> box{2, 2};
            for (const auto& n : enumerate_box(box)) {
                const auto oracle = solver.oracle_coefficients(n);
                CHECK(solver.determinant_coefficients_r2(n).coefficients == oracle);
                for (int j = 1; j <= 2; ++j) {
                    CHECK(solver.b_from_pairing(n, j) == oracle.b[static_cast<std::size_t>(j - 1)]);
                }
            }
            CHECK(check_biorthogonality(solver, box).pass());
            CHECK(check_type1_recurrences(solver, box).pass());
            CHECK(check_cd(solver, box, 20, 0).pass());
            const auto field = CoefficientField::from_oracle(solver, box);
            CHECK(check_pde_r2(field, {1, 1}).pass());
            const auto polys = generate_along_box(field, box);
            for (const auto& [n, p] : polys) CHECK(p == solver.type2(n));
            ++successful;
        } catch (const NonNormalIndex&) {
            continue; // degenerate draw; try another table
        }
    }
    CHECK(successful == 5);
}

TEST_CASE("reports serialize deterministically with stable ordering") {
    const auto field = CoefficientField::from_closed_form(kCharlier, {3, 3});
    const auto a = check_pde_r2(field, {2, 2});
    const auto b = check_pde_r2(field, {2, 2});
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));

    const auto j = a.to_json();
    CHECK(j["status"] == "pass");
    REQUIRE(j["checks"].is_array());
    CHECK(j["checks"].size() == a.checks().size());

    // a failing report carries overall status fail
    auto mutated_field = field;
    NnCoefficients c = mutated_field.at(MultiIndex({1, 1}));
    c.b[0] += Rational(1);
    mutated_field.set(MultiIndex({1, 1}), c);
    const auto bad = check_pde_r2(mutated_field, {2, 2});
    CHECK(bad.to_json()["status"] == "fail");
}
