#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "mop/family.hpp"
#include "mop/multi_index.hpp"
#include "mop/polynomials.hpp"
#include "mop/solver.hpp"

namespace mop {

/// Nearest-neighbor coefficients attached to every index of a
/// downward-closed set — the full data needed to run the recurrences.
class CoefficientField {
public:
    explicit CoefficientField(int dimension);

    int dimension() const { return dimension_; }

    /// Inserts/overwrites the coefficients at n. Enforces a_j = 0 where
    /// n_j = 0.
    void set(const MultiIndex& n, NnCoefficients coeffs);

    bool contains(const MultiIndex& n) const { return entries_.count(n) > 0; }
    const NnCoefficients& at(const MultiIndex& n) const;
    const std::map<MultiIndex, NnCoefficients>& entries() const { return entries_; }

    /// Closed-form coefficients of a built-in family over a box.
    static CoefficientField from_closed_form(const FamilySpec& spec, const std::vector<int>& limits);
    /// Moment-solved coefficients over a box.
    static CoefficientField from_oracle(const MopSolver& solver, const std::vector<int>& limits);

    /// {"r": 2, "coefficients": [{"index": [0,0], "a": [...], "b": [...]}, ...]}
    nlohmann::json to_json() const;
    static CoefficientField from_json(const nlohmann::json& j);

private:
    int dimension_;
    std::map<MultiIndex, NnCoefficients> entries_;
};

/// Runs the recurrence P_{n+e_k} = (x - b_{n,k}) P_n - sum_j a_{n,j} P_{n-e_j}
/// over the whole box from P_0 = 1. Every index reachable through more than
/// one step direction is computed along all of them; any disagreement
/// raises InconsistentField naming the index. The result is therefore
/// independent of the step direction used.
std::map<MultiIndex, MonicPolynomial> generate_along_box(const CoefficientField& field,
                                                         const std::vector<int>& limits);

/// The three-neighbor relation P_{n+e_k} - P_{n+e_j} = (b_{n,j} - b_{n,k}) P_n,
/// checked exactly. Returns false on violation.
bool neighbor_difference_identity(const CoefficientField& field,
                                  const std::map<MultiIndex, MonicPolynomial>& polys,
                                  const MultiIndex& n, int j, int k);

} // namespace mop
