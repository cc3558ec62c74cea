#pragma once

#include "mop/bivariate.hpp"
#include "mop/family.hpp"
#include "mop/multi_index.hpp"
#include "mop/solver.hpp"

namespace mop {

/// Double-precision evaluation of the reduced weights w_j(x)/kappa_j,
/// consistent with the reduction constants baked into build_moments.
class WeightEvaluator {
public:
    explicit WeightEvaluator(FamilySpec spec);

    const FamilySpec& spec() const { return spec_; }

    /// w_j(x) divided by the measure's reduction constant. Throws
    /// DomainError outside the weight's support (x < 0 for Laguerre,
    /// x outside [0,1] for Jacobi-Pineiro, non-integer or negative x for
    /// Charlier).
    double weight(int j, double x) const;

private:
    FamilySpec spec_;
};

/// The type I nearest-neighbor recurrence (one relation per direction k),
///   x Q_n = Q_{n-e_k} + b_{n-e_k,k} Q_n + sum_j a_{n,j} Q_{n+e_j},
/// verified as r exact per-weight polynomial identities. Preconditions
/// |n| >= 1 and n_k >= 1 are enforced with InvalidParameters (a violation
/// is a caller error, not a failed check).
bool type1_recurrence_check(const MopSolver& solver, const MultiIndex& n, int k);

/// The Christoffel-Darboux identity along a monotone path from the origin
/// to n,
///   (x-y) sum_i P_{n_i}(x) Q_{n_{i+1}}(y)
///     = P_n(x) Q_n(y) - sum_j a_{n,j} P_{n-e_j}(x) Q_{n+e_j}(y),
/// verified per weight as an exact bivariate polynomial identity (the
/// weights are linearly independent over polynomials, so the r coefficient
/// identities are equivalent to the functional identity).
bool cd_identity_check(const MopSolver& solver, const MultiIndex& n, const LatticePath& path);

/// The per-weight right-hand side of the CD identity divided by (x - y),
/// i.e. the exact bivariate kernel sum_i P_{n_i}(x) A_{n_{i+1},j}(y).
/// Mostly a building block for tests; path independence makes the result
/// the same for every monotone path to n.
BivariatePolynomial cd_kernel_component(const MopSolver& solver, const MultiIndex& n,
                                        const LatticePath& path, int j);

/// Numeric CD kernel sum_i P_{n_i}(x) Q_{n_{i+1}}(y) with Q expanded
/// through the weight evaluator. Exact coefficients are converted to
/// double only at the final evaluation. Off the diagonal the value is
/// computed from the closed right-hand side divided by (x-y); at x = y the
/// left-hand sum is used directly (the two agree by the verified
/// identity).
double cd_kernel_eval(const MopSolver& solver, const FamilySpec& spec, const MultiIndex& n,
                      const LatticePath& path, double x, double y);

} // namespace mop
