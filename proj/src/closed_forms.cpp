#include "mop/closed_forms.hpp"

#include <numeric>

namespace mop {

namespace {

void require_dimension(const FamilySpec& spec, const MultiIndex& n) {
    if (n.dimension() != spec.r()) {
        throw DimensionMismatch("multi-index dimension " + std::to_string(n.dimension()) +
                                " vs family with r = " + std::to_string(spec.r()));
    }
}

void require_aux_family(const FamilySpec& spec) {
    if (spec.family() != Family::laguerre1 && spec.family() != Family::jacobi_pineiro) {
        throw UnsupportedFamily("operation needs the laguerre1 or jacobi-pineiro family, got " +
                                family_name(spec.family()));
    }
}

void require_jp(const FamilySpec& spec) {
    if (spec.family() != Family::jacobi_pineiro) {
        throw UnsupportedFamily("operation needs the jacobi-pineiro family, got " +
                                family_name(spec.family()));
    }
}

Rational size_of(const MultiIndex& n) { return Rational(n.size()); }

} // namespace

AuxPolynomials AuxPolynomials::build(const FamilySpec& spec, const MultiIndex& n) {
    require_aux_family(spec);
    require_dimension(spec, n);
    std::vector<Rational> params = spec.per_measure();
    std::vector<Rational> nodes;
    nodes.reserve(params.size());
    for (int j = 1; j <= spec.r(); ++j) {
        nodes.push_back(Rational(n[j]) + params[static_cast<std::size_t>(j - 1)]);
    }
    return AuxPolynomials{MonicPolynomial::from_roots(params), MonicPolynomial::from_roots(nodes)};
}

NnCoefficients closed_form_coefficients(const FamilySpec& spec, const MultiIndex& n) {
    spec.validate();
    require_dimension(spec, n);
    const int r = spec.r();
    const Rational N = size_of(n);
    NnCoefficients out;
    out.a.resize(static_cast<std::size_t>(r));
    out.b.resize(static_cast<std::size_t>(r));

    switch (spec.family()) {
        case Family::hermite: {
            for (int j = 1; j <= r; ++j) {
                out.a[static_cast<std::size_t>(j - 1)] = Rational(n[j], 2);
                out.b[static_cast<std::size_t>(j - 1)] =
                    spec.per_measure()[static_cast<std::size_t>(j - 1)] * Rational(1, 2);
            }
            return out;
        }
        case Family::charlier: {
            for (int j = 1; j <= r; ++j) {
                const Rational& aj = spec.per_measure()[static_cast<std::size_t>(j - 1)];
                out.a[static_cast<std::size_t>(j - 1)] = Rational(n[j]) * aj;
                out.b[static_cast<std::size_t>(j - 1)] = N + aj;
            }
            return out;
        }
        case Family::laguerre1: {
            const auto& alpha = spec.per_measure();
            for (int j = 1; j <= r; ++j) {
                const Rational& aj = alpha[static_cast<std::size_t>(j - 1)];
                out.b[static_cast<std::size_t>(j - 1)] = N + Rational(n[j]) + aj + Rational(1);
                if (n[j] == 0) {
                    out.a[static_cast<std::size_t>(j - 1)] = Rational(0);
                    continue;
                }
                Rational v = Rational(n[j]) * (Rational(n[j]) + aj);
                for (int i = 1; i <= r; ++i) {
                    if (i == j) continue;
                    const Rational& ai = alpha[static_cast<std::size_t>(i - 1)];
                    v *= (Rational(n[j]) + aj - ai) / (Rational(n[j] - n[i]) + aj - ai);
                }
                out.a[static_cast<std::size_t>(j - 1)] = v;
            }
            return out;
        }
        case Family::laguerre2: {
            const Rational& alpha = spec.shared();
            const auto& c = spec.per_measure();
            Rational weighted_sizes;
            for (int j = 1; j <= r; ++j) {
                weighted_sizes += Rational(n[j]) / c[static_cast<std::size_t>(j - 1)];
            }
            for (int j = 1; j <= r; ++j) {
                const Rational& cj = c[static_cast<std::size_t>(j - 1)];
                out.a[static_cast<std::size_t>(j - 1)] = (N + alpha) * Rational(n[j]) / (cj * cj);
                out.b[static_cast<std::size_t>(j - 1)] = (N + alpha + Rational(1)) / cj + weighted_sizes;
            }
            return out;
        }
        case Family::jacobi_pineiro: {
            const auto& alpha = spec.per_measure();
            const Rational& beta = spec.shared();
            const Rational delta_here = jp_delta(spec, n);
            for (int j = 1; j <= r; ++j) {
                out.b[static_cast<std::size_t>(j - 1)] = delta_here - jp_delta(spec, n.step_up(j));
                if (n[j] == 0) {
                    out.a[static_cast<std::size_t>(j - 1)] = Rational(0);
                    continue;
                }
                const Rational& aj = alpha[static_cast<std::size_t>(j - 1)];
                Rational v(1);
                for (int i = 1; i <= r; ++i) {
                    if (i == j) continue;
                    const Rational& ai = alpha[static_cast<std::size_t>(i - 1)];
                    v *= (Rational(n[j]) + aj - ai) / (Rational(n[j] - n[i]) + aj - ai);
                }
                for (int i = 1; i <= r; ++i) {
                    const Rational& ai = alpha[static_cast<std::size_t>(i - 1)];
                    const Rational den = N + Rational(n[i]) + ai + beta;
                    if (den.is_zero()) {
                        throw InvalidParameters("jacobi-pineiro coefficient pole at index " +
                                                n.str() + ", measure " + std::to_string(i));
                    }
                    v *= (N + ai + beta) / den;
                }
                const Rational base = N + Rational(n[j]) + aj + beta;
                const Rational den = (base + Rational(1)) * base * (base - Rational(1));
                if (den.is_zero()) {
                    throw InvalidParameters("jacobi-pineiro coefficient pole at index " + n.str() +
                                            ", direction " + std::to_string(j));
                }
                v *= Rational(n[j]) * (Rational(n[j]) + aj) * (N + beta) / den;
                out.a[static_cast<std::size_t>(j - 1)] = v;
            }
            return out;
        }
        case Family::custom:
            break;
    }
    throw UnsupportedFamily("closed forms exist only for the five built-in families");
}

Rational jp_delta(const FamilySpec& spec, const MultiIndex& n) {
    require_jp(spec);
    spec.validate();
    require_dimension(spec, n);
    if (n.size() == 0) return Rational(0); // node and param polynomials coincide, ratio is 1
    const AuxPolynomials aux = AuxPolynomials::build(spec, n);
    const Rational z0 = -size_of(n) - spec.shared();
    const Rational node_val = aux.node_poly.evaluate(z0);
    if (node_val.is_zero()) {
        throw InvalidParameters("jacobi-pineiro delta pole: -|n|-beta is a root of the node polynomial at " +
                                n.str());
    }
    return -(size_of(n) + spec.shared()) * aux.param_poly.evaluate(z0) / node_val + spec.shared();
}

Rational jp_delta_partial_fraction(const FamilySpec& spec, const MultiIndex& n) {
    require_jp(spec);
    spec.validate();
    require_dimension(spec, n);
    const AuxPolynomials aux = AuxPolynomials::build(spec, n);
    const Rational N = size_of(n);
    Rational acc;
    for (int j = 1; j <= spec.r(); ++j) {
        const Rational node = Rational(n[j]) + spec.per_measure()[static_cast<std::size_t>(j - 1)];
        const Rational numer = aux.param_poly.evaluate(node);
        if (numer.is_zero()) continue; // n_j = 0 makes the node a root of the param polynomial
        const Rational dnode = aux.node_poly.derivative_at(node);
        if (dnode.is_zero()) {
            throw InvalidParameters("jacobi-pineiro partial fractions: repeated node at " + n.str());
        }
        const Rational den = N + node + spec.shared();
        if (den.is_zero()) {
            throw InvalidParameters("jacobi-pineiro partial fractions: pole at index " + n.str());
        }
        acc -= node * (numer / dnode) / den;
    }
    return acc;
}

Rational laguerre1_sum_identity(const FamilySpec& spec, const MultiIndex& n) {
    if (spec.family() != Family::laguerre1) {
        throw UnsupportedFamily("sum identity needs the laguerre1 family, got " +
                                family_name(spec.family()));
    }
    spec.validate();
    require_dimension(spec, n);
    Rational acc;
    long sum_squares = 0;
    for (int j = 1; j <= spec.r(); ++j) {
        acc += Rational(n[j]) * spec.per_measure()[static_cast<std::size_t>(j - 1)];
        sum_squares += static_cast<long>(n[j]) * n[j];
    }
    const long total = n.size();
    return acc + Rational(total * total + sum_squares, 2);
}

Rational jp_sum_identity(const FamilySpec& spec, const MultiIndex& n) {
    require_jp(spec);
    spec.validate();
    require_dimension(spec, n);
    if (n.size() == 0) return Rational(0); // ratio is identically 1, second difference of z is 0
    const AuxPolynomials aux = AuxPolynomials::build(spec, n);
    const Rational N_beta = size_of(n) + spec.shared();
    const Rational z0 = -N_beta;
    const auto ratio_at = [&](const Rational& z) {
        const Rational node_val = aux.node_poly.evaluate(z);
        if (node_val.is_zero()) {
            throw EvaluationPole("jacobi-pineiro sum identity: evaluation point " + z.str() +
                                 " is a root of the node polynomial at " + n.str());
        }
        return aux.param_poly.evaluate(z) / node_val;
    };
    // -(1/2) * second difference of f(z) = z * param(z)/node(z) at z0.
    const Rational f_mid = z0 * ratio_at(z0);
    const Rational f_up = (z0 + Rational(1)) * ratio_at(z0 + Rational(1));
    const Rational f_down = (z0 - Rational(1)) * ratio_at(z0 - Rational(1));
    const Rational bracket = Rational(-1, 2) * (f_up - Rational(2) * f_mid + f_down);
    return N_beta * ratio_at(z0) * bracket;
}

Rational aux_residue_sum(const FamilySpec& spec, const MultiIndex& n) {
    require_aux_family(spec);
    spec.validate();
    require_dimension(spec, n);
    const AuxPolynomials aux = AuxPolynomials::build(spec, n);
    Rational acc;
    for (int j = 1; j <= spec.r(); ++j) {
        const Rational node = Rational(n[j]) + spec.per_measure()[static_cast<std::size_t>(j - 1)];
        const Rational dnode = aux.node_poly.derivative_at(node);
        if (dnode.is_zero()) {
            throw InvalidParameters("residue sum: repeated node at " + n.str());
        }
        acc += aux.param_poly.evaluate(node) / dnode;
    }
    return acc;
}

} // namespace mop
