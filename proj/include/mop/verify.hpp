#pragma once

#include <cstdint>
#include <vector>

#include "mop/coefficient_field.hpp"
#include "mop/report.hpp"
#include "mop/solver.hpp"

namespace mop {

/// Moment depth that comfortably covers every check this module runs over
/// a box (the field ring adds one step in each coordinate; the deepest
/// consumers are the oracle's b route and the CD type I solves).
int required_moment_depth(const std::vector<int>& limits);

/// The r = 2 compatibility (partial difference) equations, checked exactly
/// at every base point of the box. Writing c = b_{.,1}, d = b_{.,2},
/// a = a_{.,1}, b = a_{.,2}:
///   b-difference-symmetry: d_{n+1,m} - d_{n,m} = c_{n,m+1} - c_{n,m}
///   a-sum-difference:      b_{n+1,m} - b_{n,m+1} + a_{n+1,m} - a_{n,m+1}
///                            = d_{n+1,m} c_{n,m} - d_{n,m} c_{n,m+1}
///   a-ratio:  a_{n,m+1} (c-d)_{n-1,m} = a_{n,m} (c-d)_{n,m}  [skipped at n=0]
///   b-ratio:  b_{n+1,m} (c-d)_{n,m-1} = b_{n,m} (c-d)_{n,m}  [skipped at m=0]
/// Ratio equations are cross-multiplied so everything stays in ring
/// arithmetic. The field must cover the box plus one ring.
VerificationReport check_pde_r2(const CoefficientField& field, const std::vector<int>& limits);

/// The general compatibility equations for every ordered pair (i, j), i != j:
///   b-difference-symmetry: b_{n+e_i,j} - b_{n,j} = b_{n+e_j,i} - b_{n,i}
///   a-sum-difference: sum_k a_{n+e_j,k} - sum_k a_{n+e_i,k}
///                       = b_{n+e_j,i} b_{n,j} - b_{n,i} b_{n+e_i,j}
///   a-ratio: a_{n,i} (b_{n,j} - b_{n,i}) = a_{n+e_j,i} (b_{n-e_i,j} - b_{n-e_i,i})
///            [skipped at n_i = 0]
VerificationReport check_pde_general(const CoefficientField& field, const std::vector<int>& limits);

/// Oracle vs closed forms at every index of the box: a and b agree exactly;
/// for r = 2 additionally the pure determinant route agrees and its
/// d - c expression equals b_2 - b_1; and b from the pairing route equals b
/// from delta differences.
VerificationReport differential_check(const FamilySpec& spec, const MopSolver& solver,
                                      const std::vector<int>& limits);

/// The biorthogonality pairing <P_n, Q_m> over all pairs in the box:
/// 0 when m <= n componentwise, 0 when |n| <= |m|-2, 1 when |m| = |n|+1;
/// pairs matching no case are recorded as skipped.
VerificationReport check_biorthogonality(const MopSolver& solver, const std::vector<int>& limits);

/// Type II generation along the box (every applicable step direction must
/// agree) plus the three-neighbor difference identity for every pair.
VerificationReport check_generation_consistency(const CoefficientField& field,
                                                const std::vector<int>& limits);

/// The type I recurrence identity per direction with n_k >= 1, per weight.
VerificationReport check_type1_recurrences(const MopSolver& solver, const std::vector<int>& limits);

/// The CD identity at every index of the box, over all monotone paths when
/// their count is <= max_paths, otherwise over max_paths seeded paths.
VerificationReport check_cd(const MopSolver& solver, const std::vector<int>& limits,
                            std::size_t max_paths, std::uint64_t seed);

/// Family-specific identities: the Laguerre I coefficient-sum identity;
/// the two Jacobi-Pineiro delta forms and the coefficient-sum closed form;
/// the residue identity sum_j param/node' = |n| for both families. Empty
/// report for families with no extra identities.
VerificationReport check_family_identities(const FamilySpec& spec, const std::vector<int>& limits);

} // namespace mop
