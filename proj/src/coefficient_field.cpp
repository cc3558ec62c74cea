#include "mop/coefficient_field.hpp"

#include "mop/closed_forms.hpp"

namespace mop {

CoefficientField::CoefficientField(int dimension) : dimension_(dimension) {
    if (dimension_ < 1) throw InvalidParameters("coefficient field dimension must be >= 1");
}

void CoefficientField::set(const MultiIndex& n, NnCoefficients coeffs) {
    if (n.dimension() != dimension_) {
        throw DimensionMismatch("coefficient index dimension " + std::to_string(n.dimension()) +
                                " vs field dimension " + std::to_string(dimension_));
    }
    if (static_cast<int>(coeffs.a.size()) != dimension_ ||
        static_cast<int>(coeffs.b.size()) != dimension_) {
        throw DimensionMismatch("coefficient vectors at " + n.str() + " must have length r");
    }
    for (int j = 1; j <= dimension_; ++j) {
        if (n[j] == 0 && !coeffs.a[static_cast<std::size_t>(j - 1)].is_zero()) {
            throw InvalidParameters("a_{n,j} must be 0 when n_j = 0; violated at " + n.str() +
                                    ", direction " + std::to_string(j));
        }
    }
    entries_[n] = std::move(coeffs);
}

const NnCoefficients& CoefficientField::at(const MultiIndex& n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) {
        throw InvalidParameters("coefficient field does not cover index " + n.str());
    }
    return it->second;
}

CoefficientField CoefficientField::from_closed_form(const FamilySpec& spec,
                                                    const std::vector<int>& limits) {
    CoefficientField field(spec.r());
    for (const MultiIndex& n : enumerate_box(limits)) {
        field.set(n, closed_form_coefficients(spec, n));
    }
    return field;
}

CoefficientField CoefficientField::from_oracle(const MopSolver& solver,
                                               const std::vector<int>& limits) {
    CoefficientField field(solver.r());
    for (const MultiIndex& n : enumerate_box(limits)) {
        field.set(n, solver.oracle_coefficients(n));
    }
    return field;
}

nlohmann::json CoefficientField::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [n, coeffs] : entries_) {
        nlohmann::json a = nlohmann::json::array();
        nlohmann::json b = nlohmann::json::array();
        for (const auto& v : coeffs.a) a.push_back(v.str());
        for (const auto& v : coeffs.b) b.push_back(v.str());
        rows.push_back(nlohmann::json{{"index", n.entries()}, {"a", std::move(a)}, {"b", std::move(b)}});
    }
    return nlohmann::json{{"r", dimension_}, {"coefficients", std::move(rows)}};
}

CoefficientField CoefficientField::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("r") || !j.contains("coefficients")) {
        throw ParseError("coefficient field: expected object with 'r' and 'coefficients'");
    }
    if (!j["r"].is_number_integer()) throw ParseError("coefficient field: 'r' must be an integer");
    CoefficientField field(j["r"].get<int>());
    if (!j["coefficients"].is_array()) {
        throw ParseError("coefficient field: 'coefficients' must be an array");
    }
    for (const auto& row : j["coefficients"]) {
        if (!row.is_object() || !row.contains("index") || !row.contains("a") || !row.contains("b")) {
            throw ParseError("coefficient field: each entry needs 'index', 'a' and 'b'");
        }
        std::vector<int> entries;
        for (const auto& e : row["index"]) {
            if (!e.is_number_integer()) throw ParseError("coefficient field: index entries must be integers");
            entries.push_back(e.get<int>());
        }
        NnCoefficients coeffs;
        for (const auto& v : row["a"]) coeffs.a.push_back(Rational::parse(v.get<std::string>()));
        for (const auto& v : row["b"]) coeffs.b.push_back(Rational::parse(v.get<std::string>()));
        field.set(MultiIndex(std::move(entries)), std::move(coeffs));
    }
    return field;
}

std::map<MultiIndex, MonicPolynomial> generate_along_box(const CoefficientField& field,
                                                         const std::vector<int>& limits) {
    if (static_cast<int>(limits.size()) != field.dimension()) {
        throw DimensionMismatch("box dimension vs field dimension");
    }
    std::map<MultiIndex, MonicPolynomial> out;
    // Graded-lex order guarantees all lower neighbors are present when an
    // index is reached.
    for (const MultiIndex& target : enumerate_box(limits)) {
        if (target.size() == 0) {
            out.emplace(target, MonicPolynomial::one());
            continue;
        }
        bool have_candidate = false;
        poly::Coeffs candidate;
        int first_direction = 0;
        for (int k = 1; k <= field.dimension(); ++k) {
            if (target[k] == 0) continue;
            const MultiIndex n = target.step_down(k);
            const NnCoefficients& coeffs = field.at(n);
            poly::Coeffs next =
                poly::mul_linear(out.at(n).coefficients(), coeffs.b[static_cast<std::size_t>(k - 1)]);
            for (int j = 1; j <= field.dimension(); ++j) {
                if (n[j] == 0) continue; // a_{n,j} = 0 by the field invariant
                poly::add_scaled(next, out.at(n.step_down(j)).coefficients(),
                                 -coeffs.a[static_cast<std::size_t>(j - 1)]);
            }
            if (!have_candidate) {
                candidate = std::move(next);
                have_candidate = true;
                first_direction = k;
            } else if (!poly::equal(candidate, next)) {
                throw InconsistentField("step directions " + std::to_string(first_direction) +
                                        " and " + std::to_string(k) +
                                        " yield different polynomials at " + target.str());
            }
        }
        out.emplace(target, MonicPolynomial(poly::trimmed(std::move(candidate))));
    }
    return out;
}

bool neighbor_difference_identity(const CoefficientField& field,
                                  const std::map<MultiIndex, MonicPolynomial>& polys,
                                  const MultiIndex& n, int j, int k) {
    const NnCoefficients& coeffs = field.at(n);
    poly::Coeffs lhs = polys.at(n.step_up(k)).coefficients();
    poly::add_scaled(lhs, polys.at(n.step_up(j)).coefficients(), Rational(-1));
    poly::Coeffs rhs;
    poly::add_scaled(rhs, polys.at(n).coefficients(),
                     coeffs.b[static_cast<std::size_t>(j - 1)] - coeffs.b[static_cast<std::size_t>(k - 1)]);
    return poly::equal(lhs, rhs);
}

} // namespace mop
