#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mop/rational.hpp"

namespace mop {

enum class Family { hermite, charlier, laguerre1, laguerre2, jacobi_pineiro, custom };

/// Kebab-case name used on the CLI: hermite, charlier, laguerre1,
/// laguerre2, jacobi-pineiro, custom.
std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Parameter set for one of the built-in measure systems.
///
/// per_measure holds the r measure-specific parameters: c_j (Hermite
/// weights e^{-x^2+c_j x}), a_j (Charlier a_j^k/k!), alpha_j (Laguerre I
/// x^{alpha_j} e^{-x} and Jacobi-Pineiro x^{alpha_j}(1-x)^beta), or c_j
/// (Laguerre II x^alpha e^{-c_j x}). shared holds the single parameter all
/// measures share: alpha for Laguerre II, beta for Jacobi-Pineiro.
class FamilySpec {
public:
    static FamilySpec hermite(std::vector<Rational> c);
    static FamilySpec charlier(std::vector<Rational> a);
    static FamilySpec laguerre1(std::vector<Rational> alpha);
    static FamilySpec laguerre2(Rational alpha, std::vector<Rational> c);
    static FamilySpec jacobi_pineiro(std::vector<Rational> alpha, Rational beta);

    Family family() const { return family_; }
    int r() const { return static_cast<int>(per_measure_.size()); }
    const std::vector<Rational>& per_measure() const { return per_measure_; }
    const Rational& shared() const { return shared_; }

    /// Checks the family's parameter constraints (distinctness, positivity,
    /// non-integer differences). Throws InvalidParameters naming the
    /// violated constraint. The factory functions call this already.
    void validate() const;

private:
    FamilySpec(Family family, std::vector<Rational> per_measure, Rational shared);

    Family family_;
    std::vector<Rational> per_measure_;
    Rational shared_;
};

} // namespace mop
