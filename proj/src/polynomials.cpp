#include "mop/polynomials.hpp"

namespace mop {
namespace poly {

Coeffs mul_linear(const Coeffs& p, const Rational& b) {
    Coeffs out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k + 1] += p[k];
        out[k] -= b * p[k];
    }
    return out;
}

Coeffs mul_x(const Coeffs& p) {
    Coeffs out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p[k];
    return out;
}

void add_scaled(Coeffs& acc, const Coeffs& p, const Rational& s) {
    if (p.size() > acc.size()) acc.resize(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) acc[k] += s * p[k];
}

Coeffs trimmed(Coeffs p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

bool equal(const Coeffs& p, const Coeffs& q) {
    return trimmed(p) == trimmed(q);
}

Rational eval(const Coeffs& p, const Rational& x) {
    Rational acc;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

double eval_double(const Coeffs& p, double x) {
    double acc = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k].to_double();
    return acc;
}

} // namespace poly

MonicPolynomial::MonicPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.back() != Rational(1)) {
        throw InvalidParameters("monic polynomial needs leading coefficient 1");
    }
}

MonicPolynomial MonicPolynomial::from_roots(const std::vector<Rational>& roots) {
    poly::Coeffs c{Rational(1)};
    for (const Rational& r : roots) c = poly::mul_linear(c, r);
    return MonicPolynomial(std::move(c));
}

Rational MonicPolynomial::subleading() const {
    if (degree() == 0) return Rational(0);
    return coeffs_[static_cast<std::size_t>(degree()) - 1];
}

Rational MonicPolynomial::derivative_at(const Rational& x) const {
    Rational acc;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
        acc = acc * x + Rational(static_cast<long>(k)) * coeffs_[k];
    }
    return acc;
}

} // namespace mop
