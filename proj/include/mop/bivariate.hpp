#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mop/rational.hpp"

namespace mop {

/// Sparse exact polynomial in two variables (x, y). Zero coefficients are
/// never stored, so equality of the term maps is equality of polynomials.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;

    /// p(x) viewed as a bivariate polynomial (coefficients lowest degree first).
    static BivariatePolynomial in_x(const std::vector<Rational>& coeffs);
    /// p(y), likewise.
    static BivariatePolynomial in_y(const std::vector<Rational>& coeffs);

    void add_term(int deg_x, int deg_y, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    /// Largest x-exponent (resp. y-exponent) over all terms; -1 for the zero
    /// polynomial.
    int degree_x() const;
    int degree_y() const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);

    BivariatePolynomial& scale(const Rational& c);
    /// (x - y) * this.
    BivariatePolynomial times_x_minus_y() const;

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return !(a == b);
    }

    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

} // namespace mop
