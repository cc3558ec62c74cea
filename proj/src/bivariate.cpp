#include "mop/bivariate.hpp"

#include <algorithm>

namespace mop {

BivariatePolynomial BivariatePolynomial::in_x(const std::vector<Rational>& coeffs) {
    BivariatePolynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        p.add_term(static_cast<int>(k), 0, coeffs[k]);
    }
    return p;
}

BivariatePolynomial BivariatePolynomial::in_y(const std::vector<Rational>& coeffs) {
    BivariatePolynomial p;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        p.add_term(0, static_cast<int>(k), coeffs[k]);
    }
    return p;
}

void BivariatePolynomial::add_term(int deg_x, int deg_y, const Rational& c) {
    if (c.is_zero()) return;
    const auto key = std::make_pair(deg_x, deg_y);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int BivariatePolynomial::degree_x() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

int BivariatePolynomial::degree_y() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return out;
}

BivariatePolynomial& BivariatePolynomial::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

BivariatePolynomial BivariatePolynomial::times_x_minus_y() const {
    BivariatePolynomial out;
    for (const auto& [key, c] : terms_) {
        out.add_term(key.first + 1, key.second, c);
        out.add_term(key.first, key.second + 1, -c);
    }
    return out;
}

} // namespace mop
