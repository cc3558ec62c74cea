#include "mop/christoffel_darboux.hpp"

#include <cmath>
#include <numbers>

namespace mop {

WeightEvaluator::WeightEvaluator(FamilySpec spec) : spec_(std::move(spec)) {
    if (spec_.family() == Family::custom) {
        throw UnsupportedFamily("weight evaluation needs a built-in family");
    }
    spec_.validate();
}

double WeightEvaluator::weight(int j, double x) const {
    if (j < 1 || j > spec_.r()) {
        throw DimensionMismatch("weight index " + std::to_string(j) + " out of 1.." +
                                std::to_string(spec_.r()));
    }
    const double p = spec_.per_measure()[static_cast<std::size_t>(j - 1)].to_double();
    switch (spec_.family()) {
        case Family::hermite: {
            // e^{-x^2+cx} / (sqrt(pi) e^{c^2/4}) = e^{-(x-c/2)^2} / sqrt(pi)
            const double t = x - p / 2.0;
            return std::exp(-t * t) / std::sqrt(std::numbers::pi);
        }
        case Family::charlier: {
            const double k = std::round(x);
            if (x < -0.5 || std::abs(x - k) > 1e-9) {
                throw DomainError("charlier weight defined at non-negative integers; got x = " +
                                  std::to_string(x));
            }
            // a^k / (k! e^a)
            return std::exp(k * std::log(p) - std::lgamma(k + 1.0) - p);
        }
        case Family::laguerre1: {
            if (x < 0.0) throw DomainError("laguerre1 weight needs x >= 0; got x = " + std::to_string(x));
            const double alpha = p;
            if (x == 0.0) {
                if (alpha > 0.0) return 0.0;
                if (alpha == 0.0) return 1.0;
                throw DomainError("laguerre1 weight diverges at x = 0 for alpha < 0");
            }
            return std::exp(alpha * std::log(x) - x - std::lgamma(alpha + 1.0));
        }
        case Family::laguerre2: {
            if (x < 0.0) throw DomainError("laguerre2 weight needs x >= 0; got x = " + std::to_string(x));
            const double alpha = spec_.shared().to_double();
            const double c = p;
            if (x == 0.0) {
                if (alpha > 0.0) return 0.0;
                if (alpha == 0.0) return c;
                throw DomainError("laguerre2 weight diverges at x = 0 for alpha < 0");
            }
            // x^alpha e^{-cx} * c^{alpha+1} / Gamma(alpha+1)
            return std::exp(alpha * std::log(x) - c * x + (alpha + 1.0) * std::log(c) -
                            std::lgamma(alpha + 1.0));
        }
        case Family::jacobi_pineiro: {
            if (x < 0.0 || x > 1.0) {
                throw DomainError("jacobi-pineiro weight needs 0 <= x <= 1; got x = " +
                                  std::to_string(x));
            }
            const double alpha = p;
            const double beta = spec_.shared().to_double();
            const double log_beta_fn =
                std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0);
            if (x == 0.0) {
                if (alpha > 0.0) return 0.0;
                if (alpha == 0.0) return std::exp(beta * std::log1p(-x) - log_beta_fn);
                throw DomainError("jacobi-pineiro weight diverges at x = 0 for alpha < 0");
            }
            if (x == 1.0) {
                if (beta > 0.0) return 0.0;
                if (beta == 0.0) return std::exp(alpha * std::log(x) - log_beta_fn);
                throw DomainError("jacobi-pineiro weight diverges at x = 1 for beta < 0");
            }
            return std::exp(alpha * std::log(x) + beta * std::log1p(-x) - log_beta_fn);
        }
        case Family::custom:
            break;
    }
    throw UnsupportedFamily("weight evaluation needs a built-in family");
}

bool type1_recurrence_check(const MopSolver& solver, const MultiIndex& n, int k) {
    if (n.size() < 1) {
        throw InvalidParameters("type I recurrence needs |n| >= 1");
    }
    if (n[k] < 1) {
        throw InvalidParameters("type I recurrence at " + n.str() + " needs n_k >= 1 for k = " +
                                std::to_string(k));
    }
    const MultiIndex down = n.step_down(k);
    const NnCoefficients coeffs = solver.oracle_coefficients(n);
    const Rational b_down = solver.oracle_coefficients(down).b[static_cast<std::size_t>(k - 1)];
    for (int j = 1; j <= solver.r(); ++j) {
        poly::Coeffs lhs = poly::mul_x(solver.type1_component(n, j));
        poly::Coeffs rhs = solver.type1_component(down, j);
        poly::add_scaled(rhs, solver.type1_component(n, j), b_down);
        for (int i = 1; i <= solver.r(); ++i) {
            poly::add_scaled(rhs, solver.type1_component(n.step_up(i), j),
                             coeffs.a[static_cast<std::size_t>(i - 1)]);
        }
        if (!poly::equal(lhs, rhs)) return false;
    }
    return true;
}

namespace {

void require_path_to(const MultiIndex& n, const LatticePath& path) {
    if (path.dimension() != n.dimension() || path.target() != n) {
        throw InvalidParameters("path does not run from the origin to " + n.str());
    }
}

} // namespace

BivariatePolynomial cd_kernel_component(const MopSolver& solver, const MultiIndex& n,
                                        const LatticePath& path, int j) {
    require_path_to(n, path);
    const auto vertices = path.vertices();
    BivariatePolynomial acc;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        acc += BivariatePolynomial::in_x(solver.type2(vertices[i]).coefficients()) *
               BivariatePolynomial::in_y(solver.type1_component(vertices[i + 1], j));
    }
    return acc;
}

bool cd_identity_check(const MopSolver& solver, const MultiIndex& n, const LatticePath& path) {
    require_path_to(n, path);
    const NnCoefficients coeffs =
        n.size() > 0 ? solver.oracle_coefficients(n)
                     : NnCoefficients{std::vector<Rational>(static_cast<std::size_t>(solver.r())),
                                      std::vector<Rational>(static_cast<std::size_t>(solver.r()))};
    for (int j = 1; j <= solver.r(); ++j) {
        const BivariatePolynomial lhs = cd_kernel_component(solver, n, path, j).times_x_minus_y();
        BivariatePolynomial rhs = BivariatePolynomial::in_x(solver.type2(n).coefficients()) *
                                  BivariatePolynomial::in_y(solver.type1_component(n, j));
        for (int k = 1; k <= solver.r(); ++k) {
            if (n[k] == 0) continue; // a_{n,k} = 0
            BivariatePolynomial term =
                BivariatePolynomial::in_x(solver.type2(n.step_down(k)).coefficients()) *
                BivariatePolynomial::in_y(solver.type1_component(n.step_up(k), j));
            term.scale(coeffs.a[static_cast<std::size_t>(k - 1)]);
            rhs -= term;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

double cd_kernel_eval(const MopSolver& solver, const FamilySpec& spec, const MultiIndex& n,
                      const LatticePath& path, double x, double y) {
    require_path_to(n, path);
    const WeightEvaluator weights(spec);
    const auto q_at = [&](const MultiIndex& m, double arg) {
        double acc = 0.0;
        for (int j = 1; j <= solver.r(); ++j) {
            const auto component = solver.type1_component(m, j);
            if (component.empty()) continue;
            acc += poly::eval_double(component, arg) * weights.weight(j, arg);
        }
        return acc;
    };
    if (x == y) {
        // Diagonal: the left-hand sum avoids the 0/0 of RHS/(x-y).
        const auto vertices = path.vertices();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
            acc += poly::eval_double(solver.type2(vertices[i]).coefficients(), x) *
                   q_at(vertices[i + 1], x);
        }
        return acc;
    }
    double rhs = poly::eval_double(solver.type2(n).coefficients(), x) * q_at(n, y);
    if (n.size() > 0) {
        const NnCoefficients coeffs = solver.oracle_coefficients(n);
        for (int k = 1; k <= solver.r(); ++k) {
            if (n[k] == 0) continue;
            rhs -= coeffs.a[static_cast<std::size_t>(k - 1)].to_double() *
                   poly::eval_double(solver.type2(n.step_down(k)).coefficients(), x) *
                   q_at(n.step_up(k), y);
        }
    }
    return rhs / (x - y);
}

} // namespace mop
