#pragma once

#include "mop/family.hpp"
#include "mop/multi_index.hpp"
#include "mop/polynomials.hpp"

namespace mop {

/// The auxiliary polynomials of the Laguerre I / Jacobi-Pineiro closed
/// forms: param_poly has the parameters alpha_j as roots, node_poly has the
/// shifted nodes n_j + alpha_j as roots. Residues of param/node at the
/// nodes drive the coefficient formulas and the sum identities.
struct AuxPolynomials {
    MonicPolynomial param_poly; // prod_j (x - alpha_j)
    MonicPolynomial node_poly;  // prod_j (x - n_j - alpha_j)

    static AuxPolynomials build(const FamilySpec& spec, const MultiIndex& n);
};

/// Exact nearest-neighbor coefficients from the explicit formulas:
///   hermite:   b_j = c_j/2,               a_j = n_j/2
///   charlier:  b_j = |n| + a_j,           a_j = n_j a_j
///   laguerre1: b_k = |n| + n_k + alpha_k + 1,
///              a_j = n_j (n_j+alpha_j) prod_{i!=j} (n_j+alpha_j-alpha_i)/(n_j-n_i+alpha_j-alpha_i)
///   laguerre2: b_k = (|n|+alpha+1)/c_k + sum_j n_j/c_j,
///              a_j = (|n|+alpha) n_j / c_j^2
///   jacobi-pineiro: a_j from the explicit product formula, b_k from
///              delta differences (b_k = delta_n - delta_{n+e_k}).
/// Throws UnsupportedFamily for custom, InvalidParameters for bad
/// parameters.
NnCoefficients closed_form_coefficients(const FamilySpec& spec, const MultiIndex& n);

/// Jacobi-Pineiro subleading coefficient
///   delta_n = -(|n|+beta) param(-|n|-beta)/node(-|n|-beta) + beta.
Rational jp_delta(const FamilySpec& spec, const MultiIndex& n);

/// The same quantity from the partial-fraction decomposition:
///   delta_n = -sum_j (n_j+alpha_j) [param/node'](n_j+alpha_j) / (|n|+n_j+alpha_j+beta).
Rational jp_delta_partial_fraction(const FamilySpec& spec, const MultiIndex& n);

/// Right-hand side of the Laguerre I coefficient-sum identity:
///   sum_j a_j = sum_j n_j alpha_j + (|n|^2 + sum_j n_j^2)/2.
Rational laguerre1_sum_identity(const FamilySpec& spec, const MultiIndex& n);

/// Closed form for sum_j a_j of Jacobi-Pineiro, computed as
///   (|n|+beta) R(z0) * (-1/2) * [f(z0+1) - 2 f(z0) + f(z0-1)]
/// with R = param/node, f(z) = z R(z), z0 = -|n|-beta (the second-
/// difference form). Throws EvaluationPole if an evaluation point hits a
/// root of node_poly.
Rational jp_sum_identity(const FamilySpec& spec, const MultiIndex& n);

/// sum_j param(n_j+alpha_j)/node'(n_j+alpha_j), which equals |n| for
/// Laguerre I / Jacobi-Pineiro parameters.
Rational aux_residue_sum(const FamilySpec& spec, const MultiIndex& n);

} // namespace mop
