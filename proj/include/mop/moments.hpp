#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "mop/family.hpp"
#include "mop/rational.hpp"

namespace mop {

/// Reduced moment sequences nu^(j)_0 ... nu^(j)_max_degree per measure.
///
/// "Reduced" means each measure mu_j is divided by a fixed positive
/// constant so its moments are rational for rational parameters (Hermite:
/// sqrt(pi) e^{c^2/4}; Charlier: e^a; Laguerre I: Gamma(alpha_j+1);
/// Laguerre II: Gamma(alpha+1)/c_j^{alpha+1}; Jacobi-Pineiro:
/// B(alpha_j+1, beta+1)). Positive per-measure rescaling leaves the monic
/// type II polynomials and all recurrence coefficients unchanged; type I
/// vectors are those of the reduced measures.
class MomentTable {
public:
    MomentTable(int r, int max_degree, std::vector<std::vector<Rational>> moments);

    int r() const { return r_; }
    int max_degree() const { return max_degree_; }

    /// nu^(j)_k with 1 <= j <= r. Throws InsufficientDepth when k exceeds
    /// max_degree, naming required vs available degree.
    const Rational& moment(int j, int k) const;

    const std::vector<std::vector<Rational>>& rows() const { return moments_; }

    nlohmann::json to_json() const;

private:
    int r_;
    int max_degree_;
    std::vector<std::vector<Rational>> moments_;
};

/// Builds the reduced moment table of a built-in family by exact
/// recurrences. Throws UnsupportedFamily for Family::custom and
/// InvalidParameters for invalid parameters.
MomentTable build_moments(const FamilySpec& spec, int max_degree);

/// Reads a custom moment table from JSON of the form
///   {"r": 2, "max_degree": 3, "moments": [["1","1/2",...], ...]}
/// No normalization is applied. Throws ParseError / RaggedTable.
MomentTable ingest_custom(const std::filesystem::path& file);

/// Same, from an already-parsed JSON value.
MomentTable moment_table_from_json(const nlohmann::json& j);

} // namespace mop
