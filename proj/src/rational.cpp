#include "mop/rational.hpp"

#include <cctype>
#include <ostream>

namespace mop {

namespace {

bool valid_integer_token(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw DivisionByZero("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    if (!valid_integer_token(num_part, true)) {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_part), 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        const std::string_view den_part = text.substr(slash + 1);
        if (!valid_integer_token(den_part, false)) {
            throw ParseError("invalid rational '" + std::string(text) + "'");
        }
        den = mpz_class(std::string(den_part), 10);
        if (den == 0) throw ParseError("invalid rational '" + std::string(text) + "': zero denominator");
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

} // namespace mop
