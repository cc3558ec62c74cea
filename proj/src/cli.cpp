#include "mop/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mop/christoffel_darboux.hpp"
#include "mop/closed_forms.hpp"
#include "mop/coefficient_field.hpp"
#include "mop/moments.hpp"
#include "mop/solver.hpp"
#include "mop/verify.hpp"

namespace mop::cli {

namespace {

/// Flag-level problems: reported on stderr, exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    for (const std::string& tok : split(text, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("invalid " + what + " entry '" + tok + "' in '" + text + "'");
        }
    }
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
    std::vector<Rational> out;
    for (const std::string& tok : split(text, ',')) {
        try {
            out.push_back(Rational::parse(tok));
        } catch (const ParseError& e) {
            throw UsageError("invalid " + what + ": " + e.what());
        }
    }
    return out;
}

/// `--params name=v1,v2 other=v` tokens to a name -> values map.
std::map<std::string, std::vector<Rational>> parse_params(const std::vector<std::string>& tokens) {
    std::map<std::string, std::vector<Rational>> out;
    for (const std::string& tok : tokens) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("parameter assignment must look like name=v1,v2,... ; got '" + tok + "'");
        }
        const std::string name = tok.substr(0, eq);
        if (out.count(name)) throw UsageError("duplicate parameter '" + name + "'");
        out[name] = parse_rational_list(tok.substr(eq + 1), "parameter '" + name + "'");
    }
    return out;
}

Rational single_value(const std::map<std::string, std::vector<Rational>>& params,
                      const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end() || it->second.size() != 1) {
        throw UsageError("parameter '" + name + "' must be given exactly one value");
    }
    return it->second.front();
}

std::vector<Rational> vector_value(const std::map<std::string, std::vector<Rational>>& params,
                                   const std::string& name) {
    const auto it = params.find(name);
    if (it == params.end() || it->second.empty()) {
        throw UsageError("parameter '" + name + "' with r comma-separated values is required");
    }
    return it->second;
}

void reject_extra_params(const std::map<std::string, std::vector<Rational>>& params,
                         const std::set<std::string>& allowed) {
    for (const auto& [name, values] : params) {
        if (!allowed.count(name)) {
            throw UsageError("unknown parameter '" + name + "' for this family");
        }
    }
}

FamilySpec build_family_spec(const std::string& family_name_text,
                             const std::vector<std::string>& param_tokens) {
    const auto family = family_from_name(family_name_text);
    if (!family || *family == Family::custom) {
        throw UsageError("unknown family '" + family_name_text +
                         "' (expected hermite, charlier, laguerre1, laguerre2 or jacobi-pineiro)");
    }
    const auto params = parse_params(param_tokens);
    try {
        switch (*family) {
            case Family::hermite:
                reject_extra_params(params, {"c"});
                return FamilySpec::hermite(vector_value(params, "c"));
            case Family::charlier:
                reject_extra_params(params, {"a"});
                return FamilySpec::charlier(vector_value(params, "a"));
            case Family::laguerre1:
                reject_extra_params(params, {"alpha"});
                return FamilySpec::laguerre1(vector_value(params, "alpha"));
            case Family::laguerre2:
                reject_extra_params(params, {"alpha", "c"});
                return FamilySpec::laguerre2(single_value(params, "alpha"),
                                             vector_value(params, "c"));
            case Family::jacobi_pineiro:
                reject_extra_params(params, {"alpha", "beta"});
                return FamilySpec::jacobi_pineiro(vector_value(params, "alpha"),
                                                  single_value(params, "beta"));
            default:
                break;
        }
    } catch (const InvalidParameters& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown family '" + family_name_text + "'");
}

struct GridAxis {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;

    std::vector<double> points() const {
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(steps));
        if (steps == 1) {
            out.push_back(lo);
            return out;
        }
        for (int i = 0; i < steps; ++i) {
            out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
        }
        return out;
    }
};

GridAxis parse_axis(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("grid axis must look like min:max:steps; got '" + text + "'");
    GridAxis axis;
    try {
        axis.lo = std::stod(parts[0]);
        axis.hi = std::stod(parts[1]);
        axis.steps = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("invalid grid axis '" + text + "'");
    }
    if (axis.steps < 1) throw UsageError("grid axis needs at least one step");
    return axis;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw Error("cannot open output file " + out_path);
    file << text;
}

nlohmann::json rationals_to_json(const std::vector<Rational>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

nlohmann::json floats_to_json(const std::vector<Rational>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(v.to_double());
    return arr;
}

// ----- shared option plumbing -------------------------------------------

struct CommonOptions {
    std::string family;
    std::vector<std::string> params;
    std::string custom_path;
    std::string out_path;
    std::string format = "json";
};

void add_source_options(CLI::App* cmd, CommonOptions& opts, bool allow_custom) {
    cmd->add_option("--family", opts.family, "built-in family name");
    cmd->add_option("--params", opts.params, "family parameters, e.g. alpha=1/2,5/3 beta=1/3");
    if (allow_custom) cmd->add_option("--custom", opts.custom_path, "custom JSON input file");
    cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

void require_one_source(const CommonOptions& opts, bool custom_allowed) {
    const bool has_family = !opts.family.empty();
    const bool has_custom = !opts.custom_path.empty();
    if (has_family && has_custom) {
        throw UsageError("give exactly one moment source: --family or --custom");
    }
    if (!has_family && !has_custom) {
        throw UsageError(custom_allowed ? "a moment source is required: --family or --custom"
                                        : "--family is required");
    }
    if (!custom_allowed && has_custom) {
        throw UsageError("this subcommand supports only --family input");
    }
}

// ----- subcommand implementations ----------------------------------------

struct CoeffsConfig {
    CommonOptions common;
    std::string box_text;
    std::string method = "oracle";
    bool with_float = false;
};

int run_coeffs(const CoeffsConfig& cfg, std::ostream& out) {
    require_one_source(cfg.common, true);
    const std::vector<int> limits = parse_int_list(cfg.box_text, "box limit");
    for (int l : limits) {
        if (l < 0) throw UsageError("box limits must be non-negative");
    }

    std::optional<FamilySpec> spec;
    std::optional<MomentTable> table;
    if (!cfg.common.family.empty()) {
        spec = build_family_spec(cfg.common.family, cfg.common.params);
        if (static_cast<int>(limits.size()) != spec->r()) {
            throw UsageError("box dimension must equal the family's r");
        }
        if (cfg.method != "closed-form") {
            table = build_moments(*spec, required_moment_depth(limits));
        }
    } else {
        table = ingest_custom(cfg.common.custom_path);
        if (static_cast<int>(limits.size()) != table->r()) {
            throw UsageError("box dimension must equal the table's r");
        }
        if (cfg.method == "closed-form") {
            throw UsageError("--method closed-form needs a built-in family");
        }
    }
    const int r = spec ? spec->r() : table->r();
    if (cfg.method == "determinant" && r != 2) {
        throw UsageError("--method determinant is defined for r = 2 only");
    }

    std::optional<MopSolver> solver;
    if (table) solver.emplace(std::move(*table));

    struct Row {
        MultiIndex index;
        NnCoefficients coeffs;
    };
    std::vector<Row> rows;
    for (const MultiIndex& n : enumerate_box(limits)) {
        NnCoefficients c;
        if (cfg.method == "closed-form") {
            c = closed_form_coefficients(*spec, n);
        } else if (cfg.method == "determinant") {
            c = solver->determinant_coefficients_r2(n).coefficients;
        } else {
            c = solver->oracle_coefficients(n);
        }
        rows.push_back(Row{n, std::move(c)});
    }

    std::ostringstream text;
    if (cfg.common.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json item{{"index", row.index.entries()},
                                {"a", rationals_to_json(row.coeffs.a)},
                                {"b", rationals_to_json(row.coeffs.b)}};
            if (cfg.with_float) {
                item["a_float"] = floats_to_json(row.coeffs.a);
                item["b_float"] = floats_to_json(row.coeffs.b);
            }
            arr.push_back(std::move(item));
        }
        text << arr.dump(2) << "\n";
    } else {
        for (int j = 1; j <= r; ++j) text << (j > 1 ? "," : "") << "n" << j;
        for (int j = 1; j <= r; ++j) text << ",a" << j;
        for (int j = 1; j <= r; ++j) text << ",b" << j;
        if (cfg.with_float) {
            for (int j = 1; j <= r; ++j) text << ",a" << j << "_float";
            for (int j = 1; j <= r; ++j) text << ",b" << j << "_float";
        }
        text << "\n";
        for (const auto& row : rows) {
            for (int j = 1; j <= r; ++j) text << (j > 1 ? "," : "") << row.index[j];
            for (const auto& v : row.coeffs.a) text << "," << v.str();
            for (const auto& v : row.coeffs.b) text << "," << v.str();
            if (cfg.with_float) {
                for (const auto& v : row.coeffs.a) text << "," << format_double(v.to_double());
                for (const auto& v : row.coeffs.b) text << "," << format_double(v.to_double());
            }
            text << "\n";
        }
    }
    emit(text.str(), cfg.common.out_path, out);
    return 0;
}

struct IndexedConfig {
    CommonOptions common;
    std::string index_text;
};

MultiIndex parse_index(const std::string& text) {
    const auto entries = parse_int_list(text, "index");
    for (int e : entries) {
        if (e < 0) throw UsageError("index entries must be non-negative");
    }
    return MultiIndex(entries);
}

MomentTable table_for_index(const CommonOptions& common, const MultiIndex& n) {
    if (!common.family.empty()) {
        const FamilySpec spec = build_family_spec(common.family, common.params);
        if (n.dimension() != spec.r()) {
            throw UsageError("index dimension must equal the family's r");
        }
        return build_moments(spec, required_moment_depth(n.entries()));
    }
    return ingest_custom(common.custom_path);
}

int run_poly(const IndexedConfig& cfg, std::ostream& out) {
    require_one_source(cfg.common, true);
    if (cfg.common.format != "json") throw UsageError("poly emits JSON only");
    const MultiIndex n = parse_index(cfg.index_text);
    const MonicPolynomial p = type2_polynomial(table_for_index(cfg.common, n), n);
    std::ostringstream text;
    text << rationals_to_json(p.coefficients()).dump() << "\n";
    emit(text.str(), cfg.common.out_path, out);
    return 0;
}

int run_typei(const IndexedConfig& cfg, std::ostream& out) {
    require_one_source(cfg.common, true);
    if (cfg.common.format != "json") throw UsageError("typei emits JSON only");
    const MultiIndex n = parse_index(cfg.index_text);
    const TypeOneVector v = type1_vector(table_for_index(cfg.common, n), n);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& component : v.polys) arr.push_back(rationals_to_json(component));
    std::ostringstream text;
    text << arr.dump() << "\n";
    emit(text.str(), cfg.common.out_path, out);
    return 0;
}

struct VerifyConfig {
    CommonOptions common;
    std::string box_text;
    std::string checks_text = "pde,cd,biorth,recurrence,differential,identities";
    std::size_t max_paths = 20;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyConfig& cfg, std::ostream& out) {
    require_one_source(cfg.common, true);
    const std::vector<int> limits = parse_int_list(cfg.box_text, "box limit");
    for (int l : limits) {
        if (l < 0) throw UsageError("box limits must be non-negative");
    }
    std::vector<int> ring = limits;
    for (int& l : ring) ++l;

    const std::set<std::string> known{"pde", "cd", "biorth", "recurrence", "differential",
                                      "identities"};
    std::set<std::string> checks;
    bool explicit_checks =
        cfg.checks_text != "pde,cd,biorth,recurrence,differential,identities";
    for (const std::string& c : split(cfg.checks_text, ',')) {
        if (!known.count(c)) throw UsageError("unknown check '" + c + "'");
        checks.insert(c);
    }

    std::optional<FamilySpec> spec;
    std::optional<MopSolver> solver;
    std::optional<CoefficientField> field;

    if (!cfg.common.family.empty()) {
        spec = build_family_spec(cfg.common.family, cfg.common.params);
        if (static_cast<int>(limits.size()) != spec->r()) {
            throw UsageError("box dimension must equal the family's r");
        }
        solver.emplace(build_moments(*spec, required_moment_depth(ring)));
        field = CoefficientField::from_closed_form(*spec, ring);
    } else {
        std::ifstream in(cfg.common.custom_path);
        if (!in) throw ParseError("cannot open " + cfg.common.custom_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("invalid JSON in " + cfg.common.custom_path + ": " + e.what());
        }
        if (j.is_object() && j.contains("coefficients")) {
            field = CoefficientField::from_json(j);
            if (static_cast<int>(limits.size()) != field->dimension()) {
                throw UsageError("box dimension must equal the field's r");
            }
            const std::set<std::string> field_checks{"pde", "recurrence"};
            for (const std::string& c : checks) {
                if (explicit_checks && !field_checks.count(c)) {
                    throw UsageError("check '" + c + "' needs moment input, not a coefficient field");
                }
            }
        } else {
            solver.emplace(moment_table_from_json(j));
            if (static_cast<int>(limits.size()) != solver->r()) {
                throw UsageError("box dimension must equal the table's r");
            }
            field = CoefficientField::from_oracle(*solver, ring);
            for (const std::string& c : checks) {
                if (explicit_checks && (c == "differential" || c == "identities")) {
                    throw UsageError("check '" + c + "' needs a built-in family");
                }
            }
        }
    }

    VerificationReport report;
    if (checks.count("pde") && field) {
        if (field->dimension() == 2) {
            report.append(check_pde_r2(*field, limits));
        } else if (field->dimension() > 2) {
            report.append(check_pde_general(*field, limits));
        }
    }
    if (checks.count("recurrence") && field) {
        report.append(check_generation_consistency(*field, limits));
        if (solver) report.append(check_type1_recurrences(*solver, limits));
    }
    if (checks.count("cd") && solver) {
        report.append(check_cd(*solver, limits, cfg.max_paths, cfg.seed));
    }
    if (checks.count("biorth") && solver) {
        report.append(check_biorthogonality(*solver, limits));
    }
    if (checks.count("differential") && spec && solver) {
        report.append(differential_check(*spec, *solver, limits));
    }
    if (checks.count("identities") && spec) {
        report.append(check_family_identities(*spec, limits));
    }
    report.sort_records();

    std::ostringstream text;
    text << report.to_json().dump(2) << "\n";
    emit(text.str(), cfg.common.out_path, out);
    return report.pass() ? 0 : 1;
}

struct KernelConfig {
    CommonOptions common;
    std::string index_text;
    std::string grid_text;
};

int run_kernel(const KernelConfig& cfg, std::ostream& out) {
    require_one_source(cfg.common, false);
    const MultiIndex n = parse_index(cfg.index_text);
    const auto axes = split(cfg.grid_text, ',');
    if (axes.size() != 2) {
        throw UsageError("grid must look like xmin:xmax:steps,ymin:ymax:steps");
    }
    const GridAxis x_axis = parse_axis(axes[0]);
    const GridAxis y_axis = parse_axis(axes[1]);

    const FamilySpec spec = build_family_spec(cfg.common.family, cfg.common.params);
    if (n.dimension() != spec.r()) throw UsageError("index dimension must equal the family's r");
    const MopSolver solver(build_moments(spec, required_moment_depth(n.entries())));
    const LatticePath path = canonical_path(n);

    std::ostringstream text;
    text << "x,y,value\n";
    for (double x : x_axis.points()) {
        for (double y : y_axis.points()) {
            double value;
            try {
                value = cd_kernel_eval(solver, spec, n, path, x, y);
            } catch (const DomainError& e) {
                throw DomainError(std::string(e.what()) + " (grid point x=" + format_double(x) +
                                  ", y=" + format_double(y) + ")");
            }
            text << format_double(x) << "," << format_double(y) << "," << format_double(value)
                 << "\n";
        }
    }
    emit(text.str(), cfg.common.out_path, out);
    return 0;
}

struct MomentsConfig {
    CommonOptions common;
    int max_degree = 8;
};

int run_moments(const MomentsConfig& cfg, std::ostream& out) {
    require_one_source(cfg.common, false);
    if (cfg.max_degree < 0) throw UsageError("--max-degree must be >= 0");
    const FamilySpec spec = build_family_spec(cfg.common.family, cfg.common.params);
    const MomentTable table = build_moments(spec, cfg.max_degree);
    std::ostringstream text;
    text << table.to_json().dump(2) << "\n";
    emit(text.str(), cfg.common.out_path, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation and verification for multiple orthogonal polynomials"};
    app.name("mop");
    app.require_subcommand(1);

    CoeffsConfig coeffs;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "nearest-neighbor coefficients over a box");
    add_source_options(coeffs_cmd, coeffs.common, true);
    coeffs_cmd->add_option("--box", coeffs.box_text, "box limits, e.g. 3,3")->required();
    coeffs_cmd->add_option("--method", coeffs.method, "oracle, closed-form or determinant")
        ->check(CLI::IsMember({"oracle", "closed-form", "determinant"}));
    coeffs_cmd->add_flag("--float", coeffs.with_float, "add float columns next to exact values");

    IndexedConfig poly;
    auto* poly_cmd = app.add_subcommand("poly", "type II polynomial at one index");
    add_source_options(poly_cmd, poly.common, true);
    poly_cmd->add_option("--index", poly.index_text, "multi-index, e.g. 2,1")->required();

    IndexedConfig typei;
    auto* typei_cmd = app.add_subcommand("typei", "type I vector at one index");
    add_source_options(typei_cmd, typei.common, true);
    typei_cmd->add_option("--index", typei.index_text, "multi-index, e.g. 1,1")->required();

    VerifyConfig verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the identity/compatibility check suite");
    add_source_options(verify_cmd, verify.common, true);
    verify_cmd->add_option("--box", verify.box_text, "box limits, e.g. 4,4")->required();
    verify_cmd->add_option("--checks", verify.checks_text,
                           "comma list of pde,cd,biorth,recurrence,differential,identities");
    verify_cmd->add_option("--max-paths", verify.max_paths, "CD paths per index (default 20)");
    verify_cmd->add_option("--seed", verify.seed, "seed for sampled CD paths");

    KernelConfig kernel;
    auto* kernel_cmd = app.add_subcommand("kernel", "numeric Christoffel-Darboux kernel grid (CSV)");
    add_source_options(kernel_cmd, kernel.common, false);
    kernel_cmd->add_option("--index", kernel.index_text, "multi-index")->required();
    kernel_cmd->add_option("--grid", kernel.grid_text, "xmin:xmax:steps,ymin:ymax:steps")->required();

    MomentsConfig moments;
    auto* moments_cmd = app.add_subcommand("moments", "dump a reduced moment table as JSON");
    add_source_options(moments_cmd, moments.common, false);
    moments_cmd->add_option("--max-degree", moments.max_degree, "highest moment degree")->required();

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("mop");
    for (const auto& a : args) argv_store.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2; // help/version exit clean, real parse errors are usage errors
    }

    try {
        if (coeffs_cmd->parsed()) return run_coeffs(coeffs, out);
        if (poly_cmd->parsed()) return run_poly(poly, out);
        if (typei_cmd->parsed()) return run_typei(typei, out);
        if (verify_cmd->parsed()) return run_verify(verify, out);
        if (kernel_cmd->parsed()) return run_kernel(kernel, out);
        if (moments_cmd->parsed()) return run_moments(moments, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand given\n";
    return 2;
}

} // namespace mop::cli
