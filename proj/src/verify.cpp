#include "mop/verify.hpp"

#include <algorithm>

#include "mop/christoffel_darboux.hpp"
#include "mop/closed_forms.hpp"

namespace mop {

namespace {

std::string eq_witness(const Rational& lhs, const Rational& rhs) {
    return "lhs = " + lhs.str() + ", rhs = " + rhs.str();
}

void record_equals(VerificationReport& report, std::string name, std::vector<MultiIndex> indices,
                   const Rational& lhs, const Rational& rhs) {
    if (lhs == rhs) {
        report.add_pass(std::move(name), std::move(indices));
    } else {
        report.add_fail(std::move(name), std::move(indices), eq_witness(lhs, rhs));
    }
}

std::string coeff_witness(const NnCoefficients& lhs, const NnCoefficients& rhs) {
    auto fmt = [](const NnCoefficients& c) {
        std::string s = "a=(";
        for (std::size_t i = 0; i < c.a.size(); ++i) s += (i ? "," : "") + c.a[i].str();
        s += "), b=(";
        for (std::size_t i = 0; i < c.b.size(); ++i) s += (i ? "," : "") + c.b[i].str();
        return s + ")";
    };
    return fmt(lhs) + " vs " + fmt(rhs);
}

} // namespace

int required_moment_depth(const std::vector<int>& limits) {
    int sum = 0;
    int max_limit = 0;
    for (int l : limits) {
        sum += l + 1;
        max_limit = std::max(max_limit, l + 1);
    }
    return sum + max_limit + 2;
}

VerificationReport check_pde_r2(const CoefficientField& field, const std::vector<int>& limits) {
    if (field.dimension() != 2 || limits.size() != 2) {
        throw NotBivariate("the four bivariate compatibility equations need r = 2");
    }
    const auto a1 = [&](const MultiIndex& n) { return field.at(n).a[0]; };
    const auto a2 = [&](const MultiIndex& n) { return field.at(n).a[1]; };
    const auto c = [&](const MultiIndex& n) { return field.at(n).b[0]; };
    const auto d = [&](const MultiIndex& n) { return field.at(n).b[1]; };

    VerificationReport report;
    for (const MultiIndex& n : enumerate_box(limits)) {
        const MultiIndex up1 = n.step_up(1);
        const MultiIndex up2 = n.step_up(2);

        record_equals(report, "b-difference-symmetry", {n}, d(up1) - d(n), c(up2) - c(n));
        record_equals(report, "a-sum-difference", {n},
                      a2(up1) - a2(up2) + a1(up1) - a1(up2),
                      d(up1) * c(n) - d(n) * c(up2));

        // The two ratio equations, cross-multiplied; at the lattice boundary the
        // shifted-down term does not exist and both sides degenerate to 0.
        if (n[1] == 0) {
            report.add_skip("a-ratio", {n}, "a_{n,m} = 0 at the n = 0 boundary");
        } else {
            const MultiIndex dn1 = n.step_down(1);
            record_equals(report, "a-ratio", {n},
                          a1(up2) * (c(dn1) - d(dn1)), a1(n) * (c(n) - d(n)));
        }
        if (n[2] == 0) {
            report.add_skip("b-ratio", {n}, "b_{n,m} = 0 at the m = 0 boundary");
        } else {
            const MultiIndex dn2 = n.step_down(2);
            record_equals(report, "b-ratio", {n},
                          a2(up1) * (c(dn2) - d(dn2)), a2(n) * (c(n) - d(n)));
        }
    }
    report.sort_records();
    return report;
}

VerificationReport check_pde_general(const CoefficientField& field, const std::vector<int>& limits) {
    if (field.dimension() < 2) {
        throw InvalidParameters("the compatibility equations need r >= 2");
    }
    if (static_cast<int>(limits.size()) != field.dimension()) {
        throw DimensionMismatch("box dimension vs field dimension");
    }
    const int r = field.dimension();
    VerificationReport report;
    for (const MultiIndex& n : enumerate_box(limits)) {
        for (int i = 1; i <= r; ++i) {
            for (int j = 1; j <= r; ++j) {
                if (i == j) continue;
                const std::string pair = "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
                const MultiIndex up_i = n.step_up(i);
                const MultiIndex up_j = n.step_up(j);
                const auto& cn = field.at(n);
                const auto& ci = field.at(up_i);
                const auto& cj = field.at(up_j);

                record_equals(report, "b-difference-symmetry" + pair, {n},
                              ci.b[static_cast<std::size_t>(j - 1)] - cn.b[static_cast<std::size_t>(j - 1)],
                              cj.b[static_cast<std::size_t>(i - 1)] - cn.b[static_cast<std::size_t>(i - 1)]);

                Rational sum_j_up, sum_i_up;
                for (int k = 0; k < r; ++k) {
                    sum_j_up += cj.a[static_cast<std::size_t>(k)];
                    sum_i_up += ci.a[static_cast<std::size_t>(k)];
                }
                record_equals(report, "a-sum-difference" + pair, {n}, sum_j_up - sum_i_up,
                              cj.b[static_cast<std::size_t>(i - 1)] * cn.b[static_cast<std::size_t>(j - 1)] -
                                  cn.b[static_cast<std::size_t>(i - 1)] * ci.b[static_cast<std::size_t>(j - 1)]);

                if (n[i] == 0) {
                    report.add_skip("a-ratio" + pair, {n}, "a_{n,i} = 0 at the n_i = 0 boundary");
                } else {
                    const auto& cdown = field.at(n.step_down(i));
                    record_equals(report, "a-ratio" + pair, {n},
                                  cn.a[static_cast<std::size_t>(i - 1)] *
                                      (cn.b[static_cast<std::size_t>(j - 1)] - cn.b[static_cast<std::size_t>(i - 1)]),
                                  cj.a[static_cast<std::size_t>(i - 1)] *
                                      (cdown.b[static_cast<std::size_t>(j - 1)] - cdown.b[static_cast<std::size_t>(i - 1)]));
                }
            }
        }
    }
    report.sort_records();
    return report;
}

VerificationReport differential_check(const FamilySpec& spec, const MopSolver& solver,
                                      const std::vector<int>& limits) {
    VerificationReport report;
    for (const MultiIndex& n : enumerate_box(limits)) {
        const NnCoefficients oracle = solver.oracle_coefficients(n);
        const NnCoefficients closed = closed_form_coefficients(spec, n);
        if (oracle == closed) {
            report.add_pass("closed-vs-oracle", {n});
        } else {
            report.add_fail("closed-vs-oracle", {n}, coeff_witness(closed, oracle));
        }

        if (solver.r() == 2) {
            const DeterminantCoefficientsR2 det = solver.determinant_coefficients_r2(n);
            if (det.coefficients == oracle) {
                report.add_pass("determinant-vs-oracle", {n});
            } else {
                report.add_fail("determinant-vs-oracle", {n},
                                coeff_witness(det.coefficients, oracle));
            }
            record_equals(report, "d-minus-c", {n}, det.d_minus_c, oracle.b[1] - oracle.b[0]);
        }

        bool pairing_ok = true;
        std::string witness;
        for (int j = 1; j <= solver.r(); ++j) {
            const Rational via_pairing = solver.b_from_pairing(n, j);
            if (via_pairing != oracle.b[static_cast<std::size_t>(j - 1)]) {
                pairing_ok = false;
                witness = "direction " + std::to_string(j) + ": " +
                          eq_witness(via_pairing, oracle.b[static_cast<std::size_t>(j - 1)]);
                break;
            }
        }
        if (pairing_ok) {
            report.add_pass("b-pairing-vs-delta", {n});
        } else {
            report.add_fail("b-pairing-vs-delta", {n}, witness);
        }
    }
    report.sort_records();
    return report;
}

VerificationReport check_biorthogonality(const MopSolver& solver, const std::vector<int>& limits) {
    VerificationReport report;
    const auto box = enumerate_box(limits);
    for (const MultiIndex& n : box) {
        for (const MultiIndex& m : box) {
            const Rational pairing = solver.biorthogonality_pairing(n, m);
            if (m.componentwise_leq(n)) {
                record_equals(report, "biorthogonality", {n, m}, pairing, Rational(0));
            } else if (n.size() <= m.size() - 2) {
                record_equals(report, "biorthogonality", {n, m}, pairing, Rational(0));
            } else if (m.size() == n.size() + 1) {
                record_equals(report, "biorthogonality", {n, m}, pairing, Rational(1));
            } else {
                report.add_skip("biorthogonality", {n, m}, "pair matches none of the three cases");
            }
        }
    }
    report.sort_records();
    return report;
}

VerificationReport check_generation_consistency(const CoefficientField& field,
                                                const std::vector<int>& limits) {
    VerificationReport report;
    try {
        const auto polys = generate_along_box(field, limits);
        for (const auto& [n, p] : polys) {
            report.add_pass("generation-consistency", {n});
        }
        // Three-neighbor difference identity wherever both up-neighbors
        // stay inside the generated box.
        const int r = field.dimension();
        for (const auto& [n, p] : polys) {
            for (int j = 1; j <= r; ++j) {
                for (int k = j + 1; k <= r; ++k) {
                    if (n[j] >= limits[static_cast<std::size_t>(j - 1)] ||
                        n[k] >= limits[static_cast<std::size_t>(k - 1)]) {
                        continue;
                    }
                    const std::string name =
                        "neighbor-difference(j=" + std::to_string(j) + ",k=" + std::to_string(k) + ")";
                    if (neighbor_difference_identity(field, polys, n, j, k)) {
                        report.add_pass(name, {n});
                    } else {
                        report.add_fail(name, {n}, "three-neighbor relation violated");
                    }
                }
            }
        }
    } catch (const InconsistentField& e) {
        report.add_fail("generation-consistency", {MultiIndex::zero(field.dimension())}, e.what());
    }
    report.sort_records();
    return report;
}

VerificationReport check_type1_recurrences(const MopSolver& solver, const std::vector<int>& limits) {
    VerificationReport report;
    for (const MultiIndex& n : enumerate_box(limits)) {
        if (n.size() < 1) continue;
        for (int k = 1; k <= solver.r(); ++k) {
            if (n[k] < 1) continue;
            const std::string name = "type1-recurrence(k=" + std::to_string(k) + ")";
            if (type1_recurrence_check(solver, n, k)) {
                report.add_pass(name, {n});
            } else {
                report.add_fail(name, {n}, "per-weight type I recurrence violated");
            }
        }
    }
    report.sort_records();
    return report;
}

VerificationReport check_cd(const MopSolver& solver, const std::vector<int>& limits,
                            std::size_t max_paths, std::uint64_t seed) {
    VerificationReport report;
    for (const MultiIndex& n : enumerate_box(limits)) {
        const auto paths = monotone_paths(n, max_paths, seed);
        bool all_ok = true;
        std::string witness;
        for (const auto& path : paths) {
            if (!cd_identity_check(solver, n, path)) {
                all_ok = false;
                witness = "failing path with steps (";
                for (std::size_t i = 0; i < path.steps().size(); ++i) {
                    witness += (i ? "," : "") + std::to_string(path.steps()[i]);
                }
                witness += ")";
                break;
            }
        }
        const std::string name = "cd-identity(paths=" + std::to_string(paths.size()) + ")";
        if (all_ok) {
            report.add_pass(name, {n});
        } else {
            report.add_fail(name, {n}, witness);
        }
    }
    report.sort_records();
    return report;
}

VerificationReport check_family_identities(const FamilySpec& spec, const std::vector<int>& limits) {
    VerificationReport report;
    if (spec.family() != Family::laguerre1 && spec.family() != Family::jacobi_pineiro) {
        return report;
    }
    for (const MultiIndex& n : enumerate_box(limits)) {
        const NnCoefficients closed = closed_form_coefficients(spec, n);
        Rational coefficient_sum;
        for (const auto& a : closed.a) coefficient_sum += a;

        record_equals(report, "residue-identity", {n}, aux_residue_sum(spec, n),
                      Rational(n.size()));
        if (spec.family() == Family::laguerre1) {
            record_equals(report, "sum-identity", {n}, laguerre1_sum_identity(spec, n),
                          coefficient_sum);
        } else {
            record_equals(report, "delta-forms", {n}, jp_delta(spec, n),
                          jp_delta_partial_fraction(spec, n));
            record_equals(report, "jp-sum-identity", {n}, jp_sum_identity(spec, n),
                          coefficient_sum);
        }
    }
    report.sort_records();
    return report;
}

} // namespace mop
