#pragma once

#include <vector>

#include "mop/rational.hpp"

namespace mop {

/// Small dense-coefficient helpers shared by the recurrence and kernel
/// code. Vectors hold coefficients lowest degree first; trailing zeros are
/// allowed in intermediates.
namespace poly {

using Coeffs = std::vector<Rational>;

/// (x - b) * p.
Coeffs mul_linear(const Coeffs& p, const Rational& b);
/// x * p.
Coeffs mul_x(const Coeffs& p);
/// acc += s * p (resizing acc as needed).
void add_scaled(Coeffs& acc, const Coeffs& p, const Rational& s);
/// Drops trailing zero coefficients.
Coeffs trimmed(Coeffs p);
bool equal(const Coeffs& p, const Coeffs& q);
Rational eval(const Coeffs& p, const Rational& x);
double eval_double(const Coeffs& p, double x);

} // namespace poly

/// Monic polynomial in one variable over the rationals: coefficients
/// lowest degree first, leading coefficient fixed to 1.
class MonicPolynomial {
public:
    static MonicPolynomial one() { return MonicPolynomial({Rational(1)}); }
    /// Monic polynomial with the given roots.
    static MonicPolynomial from_roots(const std::vector<Rational>& roots);

    explicit MonicPolynomial(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// The subleading coefficient delta: coefficient of x^{degree-1},
    /// 0 for degree 0.
    Rational subleading() const;

    Rational evaluate(const Rational& x) const { return poly::eval(coeffs_, x); }
    Rational derivative_at(const Rational& x) const;

    friend bool operator==(const MonicPolynomial& a, const MonicPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const MonicPolynomial& a, const MonicPolynomial& b) {
        return !(a == b);
    }

private:
    std::vector<Rational> coeffs_;
};

/// Type I vector (A_{n,1},...,A_{n,r}): polys[j-1] holds the n_j
/// coefficients of A_{n,j} (degree <= n_j - 1), empty when n_j = 0.
struct TypeOneVector {
    std::vector<std::vector<Rational>> polys;

    friend bool operator==(const TypeOneVector& a, const TypeOneVector& b) = default;
};

/// The 2r nearest-neighbor recurrence coefficients attached to one
/// multi-index: x P_n = P_{n+e_k} + b_k P_n + sum_j a_j P_{n-e_j}.
struct NnCoefficients {
    std::vector<Rational> a;
    std::vector<Rational> b;

    friend bool operator==(const NnCoefficients& x, const NnCoefficients& y) = default;
};

} // namespace mop
