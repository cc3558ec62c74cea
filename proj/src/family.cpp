#include "mop/family.hpp"

namespace mop {

std::string family_name(Family f) {
    switch (f) {
        case Family::hermite: return "hermite";
        case Family::charlier: return "charlier";
        case Family::laguerre1: return "laguerre1";
        case Family::laguerre2: return "laguerre2";
        case Family::jacobi_pineiro: return "jacobi-pineiro";
        case Family::custom: return "custom";
    }
    return "custom";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "hermite") return Family::hermite;
    if (name == "charlier") return Family::charlier;
    if (name == "laguerre1") return Family::laguerre1;
    if (name == "laguerre2") return Family::laguerre2;
    if (name == "jacobi-pineiro") return Family::jacobi_pineiro;
    if (name == "custom") return Family::custom;
    return std::nullopt;
}

FamilySpec::FamilySpec(Family family, std::vector<Rational> per_measure, Rational shared)
    : family_(family), per_measure_(std::move(per_measure)), shared_(std::move(shared)) {}

FamilySpec FamilySpec::hermite(std::vector<Rational> c) {
    FamilySpec s(Family::hermite, std::move(c), Rational(0));
    s.validate();
    return s;
}

FamilySpec FamilySpec::charlier(std::vector<Rational> a) {
    FamilySpec s(Family::charlier, std::move(a), Rational(0));
    s.validate();
    return s;
}

FamilySpec FamilySpec::laguerre1(std::vector<Rational> alpha) {
    FamilySpec s(Family::laguerre1, std::move(alpha), Rational(0));
    s.validate();
    return s;
}

FamilySpec FamilySpec::laguerre2(Rational alpha, std::vector<Rational> c) {
    FamilySpec s(Family::laguerre2, std::move(c), std::move(alpha));
    s.validate();
    return s;
}

FamilySpec FamilySpec::jacobi_pineiro(std::vector<Rational> alpha, Rational beta) {
    FamilySpec s(Family::jacobi_pineiro, std::move(alpha), std::move(beta));
    s.validate();
    return s;
}

namespace {

void require_distinct(const std::vector<Rational>& v, const std::string& what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) {
                throw InvalidParameters(what + " must be pairwise distinct; " +
                                        what + "[" + std::to_string(i + 1) + "] = " +
                                        what + "[" + std::to_string(j + 1) + "] = " + v[i].str());
            }
        }
    }
}

void require_non_integer_differences(const std::vector<Rational>& v, const std::string& what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if ((v[i] - v[j]).is_integer()) {
                throw InvalidParameters(what + " differences must not be integers; " +
                                        what + "[" + std::to_string(i + 1) + "] - " +
                                        what + "[" + std::to_string(j + 1) + "] = " +
                                        (v[i] - v[j]).str());
            }
        }
    }
}

const Rational kMinusOne(-1);

} // namespace

void FamilySpec::validate() const {
    if (per_measure_.empty()) {
        throw InvalidParameters("family needs at least one measure (r >= 1)");
    }
    switch (family_) {
        case Family::hermite:
            require_distinct(per_measure_, "c");
            break;
        case Family::charlier:
            for (std::size_t j = 0; j < per_measure_.size(); ++j) {
                if (per_measure_[j].sign() <= 0) {
                    throw InvalidParameters("charlier requires a[" + std::to_string(j + 1) +
                                            "] > 0; got " + per_measure_[j].str());
                }
            }
            require_distinct(per_measure_, "a");
            break;
        case Family::laguerre1:
            for (std::size_t j = 0; j < per_measure_.size(); ++j) {
                if (per_measure_[j] <= kMinusOne) {
                    throw InvalidParameters("laguerre1 requires alpha[" + std::to_string(j + 1) +
                                            "] > -1; got " + per_measure_[j].str());
                }
            }
            require_non_integer_differences(per_measure_, "alpha");
            break;
        case Family::laguerre2:
            if (shared_ <= kMinusOne) {
                throw InvalidParameters("laguerre2 requires alpha > -1; got " + shared_.str());
            }
            for (std::size_t j = 0; j < per_measure_.size(); ++j) {
                if (per_measure_[j].sign() <= 0) {
                    throw InvalidParameters("laguerre2 requires c[" + std::to_string(j + 1) +
                                            "] > 0; got " + per_measure_[j].str());
                }
            }
            require_distinct(per_measure_, "c");
            break;
        case Family::jacobi_pineiro:
            for (std::size_t j = 0; j < per_measure_.size(); ++j) {
                if (per_measure_[j] <= kMinusOne) {
                    throw InvalidParameters("jacobi-pineiro requires alpha[" + std::to_string(j + 1) +
                                            "] > -1; got " + per_measure_[j].str());
                }
            }
            if (shared_ <= kMinusOne) {
                throw InvalidParameters("jacobi-pineiro requires beta > -1; got " + shared_.str());
            }
            require_non_integer_differences(per_measure_, "alpha");
            break;
        case Family::custom:
            break;
    }
}

} // namespace mop
