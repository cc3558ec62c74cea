#include "mop/solver.hpp"

#include <mutex>

namespace mop {

void MopSolver::require_dimension(const MultiIndex& n) const {
    if (n.dimension() != table_.r()) {
        throw DimensionMismatch("multi-index dimension " + std::to_string(n.dimension()) +
                                " vs table with r = " + std::to_string(table_.r()));
    }
}

RationalMatrix MopSolver::moment_matrix(const MultiIndex& n) const {
    require_dimension(n);
    const int N = n.size();
    RationalMatrix M(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    std::size_t col = 0;
    for (int j = 1; j <= table_.r(); ++j) {
        for (int i = 0; i < n[j]; ++i, ++col) {
            for (int l = 0; l < N; ++l) {
                M.at(static_cast<std::size_t>(l), col) = table_.moment(j, i + l);
            }
        }
    }
    return M;
}

Rational MopSolver::moment_determinant(const MultiIndex& n) const {
    {
        std::shared_lock lock(mutex_);
        auto it = det_cache_.find(n);
        if (it != det_cache_.end()) return it->second;
    }
    Rational det = determinant(moment_matrix(n));
    std::unique_lock lock(mutex_);
    return det_cache_.try_emplace(n, std::move(det)).first->second;
}

MonicPolynomial MopSolver::type2(const MultiIndex& n) const {
    require_dimension(n);
    {
        std::shared_lock lock(mutex_);
        auto it = type2_cache_.find(n);
        if (it != type2_cache_.end()) return it->second;
    }
    const int N = n.size();
    std::vector<Rational> coeffs;
    if (N == 0) {
        coeffs = {Rational(1)};
    } else {
        // Rows (j, l): sum_k p_k nu^(j)_{k+l} = -nu^(j)_{|n|+l}; the matrix
        // is M_n transposed.
        RationalMatrix A(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
        std::vector<Rational> rhs(static_cast<std::size_t>(N));
        std::size_t row = 0;
        for (int j = 1; j <= table_.r(); ++j) {
            for (int l = 0; l < n[j]; ++l, ++row) {
                for (int k = 0; k < N; ++k) {
                    A.at(row, static_cast<std::size_t>(k)) = table_.moment(j, k + l);
                }
                rhs[row] = -table_.moment(j, N + l);
            }
        }
        try {
            coeffs = solve(A, rhs);
        } catch (const SingularMatrix&) {
            throw NonNormalIndex("multi-index " + n.str() + " is not normal (type II system singular)");
        }
        coeffs.push_back(Rational(1));
    }
    MonicPolynomial p(std::move(coeffs));
    std::unique_lock lock(mutex_);
    return type2_cache_.try_emplace(n, std::move(p)).first->second;
}

TypeOneVector MopSolver::type1(const MultiIndex& n) const {
    require_dimension(n);
    if (n.size() == 0) {
        throw EmptyIndex("type I vector undefined at the zero index (Q_0 = 0)");
    }
    {
        std::shared_lock lock(mutex_);
        auto it = type1_cache_.find(n);
        if (it != type1_cache_.end()) return it->second;
    }
    const int N = n.size();
    // Rows l = 0..|n|-1 over columns (j, k): the matrix is M_n itself; the
    // right-hand side is the normalization e_{|n|-1}.
    RationalMatrix A = moment_matrix(n);
    std::vector<Rational> rhs(static_cast<std::size_t>(N));
    rhs.back() = Rational(1);
    std::vector<Rational> x;
    try {
        x = solve(A, rhs);
    } catch (const SingularMatrix&) {
        throw NonNormalIndex("multi-index " + n.str() + " is not normal (type I system singular)");
    }
    TypeOneVector v;
    v.polys.resize(static_cast<std::size_t>(table_.r()));
    std::size_t pos = 0;
    for (int j = 1; j <= table_.r(); ++j) {
        auto& pj = v.polys[static_cast<std::size_t>(j - 1)];
        pj.assign(x.begin() + static_cast<std::ptrdiff_t>(pos),
                  x.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(n[j])));
        pos += static_cast<std::size_t>(n[j]);
    }
    std::unique_lock lock(mutex_);
    return type1_cache_.try_emplace(n, std::move(v)).first->second;
}

std::vector<Rational> MopSolver::type1_component(const MultiIndex& n, int j) const {
    if (n.size() == 0) return {};
    return type1(n).polys.at(static_cast<std::size_t>(j - 1));
}

namespace {

/// sum_k p_k nu^(j)_{k+shift}: the exact realization of
/// integral x^shift-weighted moment sums against one measure.
Rational dot_with_moments(const std::vector<Rational>& p, const MomentTable& table, int j,
                          int shift) {
    Rational acc;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        acc += p[k] * table.moment(j, static_cast<int>(k) + shift);
    }
    return acc;
}

} // namespace

NnCoefficients MopSolver::oracle_coefficients(const MultiIndex& n) const {
    require_dimension(n);
    const MonicPolynomial pn = type2(n);
    NnCoefficients out;
    out.a.resize(static_cast<std::size_t>(table_.r()));
    out.b.resize(static_cast<std::size_t>(table_.r()));
    for (int j = 1; j <= table_.r(); ++j) {
        if (n[j] == 0) {
            out.a[static_cast<std::size_t>(j - 1)] = Rational(0);
            continue;
        }
        const MonicPolynomial pd = type2(n.step_down(j));
        const Rational num = dot_with_moments(pn.coefficients(), table_, j, n[j]);
        const Rational den = dot_with_moments(pd.coefficients(), table_, j, n[j] - 1);
        if (den.is_zero()) {
            throw NonNormalIndex("multi-index " + n.str() +
                                 " is not normal (vanishing pairing below, direction " +
                                 std::to_string(j) + ")");
        }
        out.a[static_cast<std::size_t>(j - 1)] = num / den;
    }
    const Rational delta = pn.subleading();
    for (int j = 1; j <= table_.r(); ++j) {
        out.b[static_cast<std::size_t>(j - 1)] = delta - type2(n.step_up(j)).subleading();
    }
    return out;
}

DeterminantCoefficientsR2 MopSolver::determinant_coefficients_r2(const MultiIndex& n) const {
    require_dimension(n);
    if (table_.r() != 2) {
        throw NotBivariate("determinant coefficients need r = 2, table has r = " +
                           std::to_string(table_.r()));
    }
    const auto det_checked = [this](const MultiIndex& m) {
        Rational d = moment_determinant(m);
        if (d.is_zero()) {
            throw NonNormalIndex("multi-index " + m.str() + " is not normal (det M = 0)");
        }
        return d;
    };
    const Rational d0 = det_checked(n);
    const Rational d0sq = d0 * d0;

    NnCoefficients out;
    out.a.resize(2);
    out.b.resize(2);
    for (int j = 1; j <= 2; ++j) {
        if (n[j] == 0) {
            out.a[static_cast<std::size_t>(j - 1)] = Rational(0); // a_{0,m} = 0 convention
        } else {
            out.a[static_cast<std::size_t>(j - 1)] =
                det_checked(n.step_up(j)) * det_checked(n.step_down(j)) / d0sq;
        }
        // c_{n,m} (j=1) and d_{n,m} (j=2) as differences of second coefficients.
        out.b[static_cast<std::size_t>(j - 1)] = second_coefficient(n) - second_coefficient(n.step_up(j));
    }
    const Rational d_minus_c = d0 * det_checked(n.step_up(1).step_up(2)) /
                               (det_checked(n.step_up(1)) * det_checked(n.step_up(2)));
    return DeterminantCoefficientsR2{std::move(out), d_minus_c};
}

Rational MopSolver::second_coefficient(const MultiIndex& n) const {
    require_dimension(n);
    if (table_.r() != 2) {
        throw NotBivariate("second-coefficient matrix formula needs r = 2");
    }
    const int N = n.size();
    if (N == 0) return Rational(0); // P_0 = 1 has no subleading term
    const Rational det_m = moment_determinant(n);
    if (det_m.is_zero()) {
        throw NonNormalIndex("multi-index " + n.str() + " is not normal (det M = 0)");
    }
    RationalMatrix hat = moment_matrix(n);
    std::size_t col = 0;
    for (int j = 1; j <= table_.r(); ++j) {
        for (int i = 0; i < n[j]; ++i, ++col) {
            hat.at(static_cast<std::size_t>(N - 1), col) = table_.moment(j, i + N);
        }
    }
    return -determinant(hat) / det_m;
}

Rational MopSolver::biorthogonality_pairing(const MultiIndex& n, const MultiIndex& m) const {
    require_dimension(n);
    require_dimension(m);
    if (m.size() == 0) return Rational(0); // Q_0 = 0
    const MonicPolynomial pn = type2(n);
    const TypeOneVector am = type1(m);
    Rational acc;
    for (int j = 1; j <= table_.r(); ++j) {
        const auto& aj = am.polys[static_cast<std::size_t>(j - 1)];
        for (std::size_t k = 0; k < aj.size(); ++k) {
            if (aj[k].is_zero()) continue;
            acc += aj[k] * dot_with_moments(pn.coefficients(), table_, j, static_cast<int>(k));
        }
    }
    return acc;
}

Rational MopSolver::b_from_pairing(const MultiIndex& n, int j) const {
    require_dimension(n);
    const MonicPolynomial pn = type2(n);
    const TypeOneVector a_up = type1(n.step_up(j));
    Rational acc;
    for (int i = 1; i <= table_.r(); ++i) {
        const auto& ai = a_up.polys[static_cast<std::size_t>(i - 1)];
        for (std::size_t k = 0; k < ai.size(); ++k) {
            if (ai[k].is_zero()) continue;
            // <x P_n, A_{n+e_j,i} w_i>: the extra x shifts every moment by one.
            acc += ai[k] * dot_with_moments(pn.coefficients(), table_, i, static_cast<int>(k) + 1);
        }
    }
    return acc;
}

RationalMatrix moment_matrix(const MomentTable& table, const MultiIndex& n) {
    return MopSolver(table).moment_matrix(n);
}

MonicPolynomial type2_polynomial(const MomentTable& table, const MultiIndex& n) {
    return MopSolver(table).type2(n);
}

TypeOneVector type1_vector(const MomentTable& table, const MultiIndex& n) {
    return MopSolver(table).type1(n);
}

NnCoefficients oracle_coefficients(const MomentTable& table, const MultiIndex& n) {
    return MopSolver(table).oracle_coefficients(n);
}

} // namespace mop
