#include "mop/moments.hpp"

#include <fstream>

namespace mop {

MomentTable::MomentTable(int r, int max_degree, std::vector<std::vector<Rational>> moments)
    : r_(r), max_degree_(max_degree), moments_(std::move(moments)) {
    if (r_ < 1) throw InvalidParameters("moment table needs r >= 1");
    if (max_degree_ < 0) throw InvalidParameters("moment table needs max_degree >= 0");
    if (static_cast<int>(moments_.size()) != r_) {
        throw RaggedTable("expected " + std::to_string(r_) + " moment rows, got " +
                          std::to_string(moments_.size()));
    }
    for (const auto& row : moments_) {
        if (static_cast<int>(row.size()) != max_degree_ + 1) {
            throw RaggedTable("moment rows must all have length max_degree+1 = " +
                              std::to_string(max_degree_ + 1) + "; got a row of length " +
                              std::to_string(row.size()));
        }
    }
}

const Rational& MomentTable::moment(int j, int k) const {
    if (j < 1 || j > r_) {
        throw DimensionMismatch("measure index " + std::to_string(j) + " out of 1.." +
                                std::to_string(r_));
    }
    if (k < 0 || k > max_degree_) {
        throw InsufficientDepth("moment of degree " + std::to_string(k) +
                                " required, table holds degrees 0.." + std::to_string(max_degree_));
    }
    return moments_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k)];
}

nlohmann::json MomentTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : moments_) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& q : row) r.push_back(q.str());
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"r", r_}, {"max_degree", max_degree_}, {"moments", std::move(rows)}};
}

namespace {

// mu_{k+1} = (c/2) mu_k + (k/2) mu_{k-1}, mu_0 = 1: moments of
// e^{-x^2+cx} divided by sqrt(pi) e^{c^2/4}.
std::vector<Rational> hermite_row(const Rational& c, int max_degree) {
    std::vector<Rational> mu(static_cast<std::size_t>(max_degree) + 1);
    const Rational half(1, 2);
    mu[0] = Rational(1);
    if (max_degree >= 1) mu[1] = c * half;
    for (int k = 1; k < max_degree; ++k) {
        mu[static_cast<std::size_t>(k) + 1] =
            c * half * mu[static_cast<std::size_t>(k)] +
            Rational(k, 2) * mu[static_cast<std::size_t>(k) - 1];
    }
    return mu;
}

// Touchard values: T_0 = 1, T_{l+1} = a * sum_i C(l,i) T_i.
std::vector<Rational> charlier_row(const Rational& a, int max_degree) {
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(max_degree) + 1);
    t.push_back(Rational(1));
    std::vector<mpz_class> binom{1}; // Pascal row for C(l, i)
    for (int l = 0; l < max_degree; ++l) {
        Rational acc;
        for (int i = 0; i <= l; ++i) {
            acc += Rational(binom[static_cast<std::size_t>(i)], 1) * t[static_cast<std::size_t>(i)];
        }
        t.push_back(a * acc);
        std::vector<mpz_class> next(binom.size() + 1, 1);
        for (std::size_t i = 1; i < binom.size(); ++i) next[i] = binom[i - 1] + binom[i];
        binom = std::move(next);
    }
    return t;
}

// Pochhammer products: nu_k = nu_{k-1} * (alpha + k), i.e. (alpha+1)_k.
std::vector<Rational> laguerre1_row(const Rational& alpha, int max_degree) {
    std::vector<Rational> v(static_cast<std::size_t>(max_degree) + 1);
    v[0] = Rational(1);
    for (int k = 1; k <= max_degree; ++k) {
        v[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k) - 1] * (alpha + Rational(k));
    }
    return v;
}

// (alpha+1)_k / c^k.
std::vector<Rational> laguerre2_row(const Rational& alpha, const Rational& c, int max_degree) {
    std::vector<Rational> v(static_cast<std::size_t>(max_degree) + 1);
    v[0] = Rational(1);
    for (int k = 1; k <= max_degree; ++k) {
        v[static_cast<std::size_t>(k)] =
            v[static_cast<std::size_t>(k) - 1] * (alpha + Rational(k)) / c;
    }
    return v;
}

// (alpha+1)_k / (alpha+beta+2)_k.
std::vector<Rational> jacobi_pineiro_row(const Rational& alpha, const Rational& beta,
                                         int max_degree) {
    std::vector<Rational> v(static_cast<std::size_t>(max_degree) + 1);
    v[0] = Rational(1);
    for (int k = 1; k <= max_degree; ++k) {
        v[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k) - 1] *
                                         (alpha + Rational(k)) / (alpha + beta + Rational(k + 1));
    }
    return v;
}

} // namespace

MomentTable build_moments(const FamilySpec& spec, int max_degree) {
    if (max_degree < 0) throw InvalidParameters("max_degree must be >= 0");
    spec.validate();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<std::size_t>(spec.r()));
    for (int j = 0; j < spec.r(); ++j) {
        const Rational& p = spec.per_measure()[static_cast<std::size_t>(j)];
        switch (spec.family()) {
            case Family::hermite:
                rows.push_back(hermite_row(p, max_degree));
                break;
            case Family::charlier:
                rows.push_back(charlier_row(p, max_degree));
                break;
            case Family::laguerre1:
                rows.push_back(laguerre1_row(p, max_degree));
                break;
            case Family::laguerre2:
                rows.push_back(laguerre2_row(spec.shared(), p, max_degree));
                break;
            case Family::jacobi_pineiro:
                rows.push_back(jacobi_pineiro_row(p, spec.shared(), max_degree));
                break;
            case Family::custom:
                throw UnsupportedFamily("build_moments needs a built-in family; "
                                        "use ingest_custom for custom measures");
        }
    }
    return MomentTable(spec.r(), max_degree, std::move(rows));
}

MomentTable moment_table_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("custom moments: top-level JSON object expected");
    for (const char* key : {"r", "max_degree", "moments"}) {
        if (!j.contains(key)) throw ParseError(std::string("custom moments: missing field '") + key + "'");
    }
    if (!j["r"].is_number_integer() || !j["max_degree"].is_number_integer()) {
        throw ParseError("custom moments: 'r' and 'max_degree' must be integers");
    }
    const int r = j["r"].get<int>();
    const int max_degree = j["max_degree"].get<int>();
    if (r < 1) throw ParseError("custom moments: r must be >= 1");
    if (max_degree < 0) throw ParseError("custom moments: max_degree must be >= 0");
    if (!j["moments"].is_array()) throw ParseError("custom moments: 'moments' must be an array");
    if (static_cast<int>(j["moments"].size()) != r) {
        throw RaggedTable("custom moments: expected " + std::to_string(r) + " rows, got " +
                          std::to_string(j["moments"].size()));
    }
    std::size_t first_len = 0;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t ji = 0; ji < j["moments"].size(); ++ji) {
        const auto& row = j["moments"][ji];
        if (!row.is_array()) {
            throw ParseError("custom moments: moments[" + std::to_string(ji) + "] must be an array");
        }
        if (ji == 0) {
            first_len = row.size();
        } else if (row.size() != first_len) {
            throw RaggedTable("custom moments: row " + std::to_string(ji) + " has length " +
                              std::to_string(row.size()) + ", row 0 has length " +
                              std::to_string(first_len));
        }
        std::vector<Rational> parsed;
        parsed.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_string()) {
                throw ParseError("custom moments: moments[" + std::to_string(ji) + "][" +
                                 std::to_string(k) + "] must be a rational string");
            }
            try {
                parsed.push_back(Rational::parse(row[k].get<std::string>()));
            } catch (const ParseError& e) {
                throw ParseError("custom moments: moments[" + std::to_string(ji) + "][" +
                                 std::to_string(k) + "]: " + e.what());
            }
        }
        rows.push_back(std::move(parsed));
    }
    if (static_cast<int>(first_len) != max_degree + 1) {
        throw RaggedTable("custom moments: rows have length " + std::to_string(first_len) +
                          " but max_degree+1 = " + std::to_string(max_degree + 1));
    }
    return MomentTable(r, max_degree, std::move(rows));
}

MomentTable ingest_custom(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open moment file " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + file.string() + ": " + e.what());
    }
    return moment_table_from_json(j);
}

} // namespace mop
