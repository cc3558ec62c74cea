#pragma once

#include <map>
#include <shared_mutex>

#include "mop/moments.hpp"
#include "mop/multi_index.hpp"
#include "mop/polynomials.hpp"
#include "mop/rational_matrix.hpp"

namespace mop {

/// Determinant-route output for r = 2: the coefficients plus the
/// determinant expression for d_{n,m} - c_{n,m} (= b_{(n,m),2} - b_{(n,m),1}).
struct DeterminantCoefficientsR2 {
    NnCoefficients coefficients;
    Rational d_minus_c;
};

/// Moment-matrix engine: assembles mixed moment matrices, solves for both
/// polynomial types, and derives nearest-neighbor coefficients. This is
/// the oracle path everything else is checked against.
///
/// Type II and type I solutions are memoized per index. The memo is a
/// concurrent-read, exclusive-write cache; results are deterministic
/// regardless of interleaving because every entry is a pure function of
/// the table.
class MopSolver {
public:
    explicit MopSolver(MomentTable table) : table_(std::move(table)) {}

    const MomentTable& table() const { return table_; }
    int r() const { return table_.r(); }

    /// The |n| x |n| mixed moment matrix M_n: block j contributes n_j
    /// columns, and column i of block j (0-based) holds
    /// (nu^(j)_i, nu^(j)_{i+1}, ..., nu^(j)_{i+|n|-1})^T.
    RationalMatrix moment_matrix(const MultiIndex& n) const;

    /// det M_n, with det of the 0x0 matrix defined as 1. Cached.
    Rational moment_determinant(const MultiIndex& n) const;

    /// The monic type II polynomial P_n (degree |n|). The linear system has
    /// matrix M_n^T; a singular system raises NonNormalIndex naming n.
    MonicPolynomial type2(const MultiIndex& n) const;

    /// The type I vector (A_{n,1},...,A_{n,r}) normalized so the pairing
    /// with x^{|n|-1} is 1. Raises EmptyIndex for |n| = 0 (Q_0 = 0).
    TypeOneVector type1(const MultiIndex& n) const;

    /// Coefficients of A_{n,j} for one weight; empty (zero polynomial) when
    /// n_j = 0 or |n| = 0.
    std::vector<Rational> type1_component(const MultiIndex& n, int j) const;

    /// a_{n,j} as the exact ratio of the pairings <x^{n_j} P_n>_j and
    /// <x^{n_j-1} P_{n-e_j}>_j (with a_{n,j} = 0 when n_j = 0), and
    /// b_{n,j} = delta_n - delta_{n+e_j}.
    /// The b route solves at the up-neighbors, so the table must hold
    /// moments up to degree |n| + max_j n_j + 1.
    NnCoefficients oracle_coefficients(const MultiIndex& n) const;

    /// r = 2 only: coefficients from moment determinants alone
    /// (a from det M ratios, b from second-coefficient differences), plus
    /// the determinant formula for d - c. Throws NotBivariate for r != 2,
    /// NonNormalIndex when a needed det M vanishes.
    DeterminantCoefficientsR2 determinant_coefficients_r2(const MultiIndex& n) const;

    /// r = 2 only: the subleading coefficient of P_n computed as
    /// -det(M-hat)/det(M), where M-hat is M with its last row replaced by
    /// the next moment row.
    Rational second_coefficient(const MultiIndex& n) const;

    /// The biorthogonality pairing <P_n, Q_m> evaluated exactly through
    /// moment sums; 0 by convention when |m| = 0.
    Rational biorthogonality_pairing(const MultiIndex& n, const MultiIndex& m) const;

    /// b_{n,j} via the pairing <x P_n, Q_{n+e_j}>, kept as a cross-check
    /// against the delta-difference route.
    Rational b_from_pairing(const MultiIndex& n, int j) const;

private:
    void require_dimension(const MultiIndex& n) const;

    MomentTable table_;
    mutable std::shared_mutex mutex_;
    mutable std::map<MultiIndex, MonicPolynomial> type2_cache_;
    mutable std::map<MultiIndex, TypeOneVector> type1_cache_;
    mutable std::map<MultiIndex, Rational> det_cache_;
};

// One-shot convenience wrappers over a temporary solver.
RationalMatrix moment_matrix(const MomentTable& table, const MultiIndex& n);
MonicPolynomial type2_polynomial(const MomentTable& table, const MultiIndex& n);
TypeOneVector type1_vector(const MomentTable& table, const MultiIndex& n);
NnCoefficients oracle_coefficients(const MomentTable& table, const MultiIndex& n);

} // namespace mop
