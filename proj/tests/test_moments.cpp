#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "mop/moments.hpp"
#include "mop/solver.hpp"

using namespace mop;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("hermite reduced moments: recurrence values and quadrature oracle") {
    const auto table = build_moments(FamilySpec::hermite({Rational(2)}), 2);
    CHECK(table.moment(1, 0) == Rational(1));
    CHECK(table.moment(1, 1) == Rational(1));
    CHECK(table.moment(1, 2) == Rational(3, 2));

    // c = 1 sequence frozen from the oracle: 1, 1/2, 3/4, 7/8
    const auto t1 = build_moments(FamilySpec::hermite({Rational(1)}), 3);
    CHECK(t1.moment(1, 1) == Rational(1, 2));
    CHECK(t1.moment(1, 2) == Rational(3, 4));
    CHECK(t1.moment(1, 3) == Rational(7, 8));

    // quadrature oracle: trapezoid over e^{-(x-c/2)^2}/sqrt(pi), wide range
    const double c = 2.0;
    for (int k = 0; k <= 2; ++k) {
        double acc = 0.0;
        const double h = 1e-4;
        for (double x = -12.0; x <= 14.0; x += h) {
            acc += std::pow(x, k) * std::exp(-(x - c / 2) * (x - c / 2)) * h;
        }
        acc /= std::sqrt(std::acos(-1.0));
        CHECK(std::abs(acc - table.moment(1, k).to_double()) < 1e-7);
    }
}

TEST_CASE("hermite moments satisfy the stated recurrence for every checked k") {
    const Rational c(5, 3);
    const auto table = build_moments(FamilySpec::hermite({c}), 12);
    CHECK(table.moment(1, 0) == Rational(1));
    CHECK(table.moment(1, 1) == c / Rational(2));
    for (int k = 1; k < 12; ++k) {
        CHECK(table.moment(1, k + 1) ==
              c / Rational(2) * table.moment(1, k) + Rational(k, 2) * table.moment(1, k - 1));
    }
}

TEST_CASE("charlier reduced moments are the Touchard values") {
    const auto table = build_moments(FamilySpec::charlier({Rational(1)}), 4);
    CHECK(table.moment(1, 0) == Rational(1));
    CHECK(table.moment(1, 1) == Rational(1));
    CHECK(table.moment(1, 2) == Rational(2));
    CHECK(table.moment(1, 3) == Rational(5));
    CHECK(table.moment(1, 4) == Rational(15));

    // series oracle: sum_k k^l a^k / k! / e^a
    const double a = 1.0;
    for (int l = 0; l <= 4; ++l) {
        double acc = 0.0;
        double weight = std::exp(-a); // a^0/0! e^-a
        for (int k = 0; k <= 60; ++k) {
            acc += std::pow(static_cast<double>(k), l) * weight;
            weight *= a / (k + 1);
        }
        CHECK(std::abs(acc - table.moment(1, l).to_double()) < 1e-12);
    }

    // a = 2 row frozen from the Touchard recurrence oracle
    const auto t2 = build_moments(FamilySpec::charlier({Rational(2)}), 4);
    CHECK(t2.moment(1, 2) == Rational(6));
    CHECK(t2.moment(1, 3) == Rational(22));
    CHECK(t2.moment(1, 4) == Rational(94));
}

TEST_CASE("laguerre and jacobi-pineiro reduced moments are Pochhammer ratios") {
    const Rational half(1, 2);
    const auto lag1 = build_moments(FamilySpec::laguerre1({half}), 3);
    CHECK(lag1.moment(1, 1) == Rational(3, 2));        // (alpha+1)
    CHECK(lag1.moment(1, 2) == Rational(15, 4));       // (alpha+1)(alpha+2)
    CHECK(lag1.moment(1, 3) == Rational(105, 8));

    const auto lag2 = build_moments(FamilySpec::laguerre2(half, {Rational(2)}), 2);
    CHECK(lag2.moment(1, 1) == Rational(3, 4));        // (alpha+1)/c
    CHECK(lag2.moment(1, 2) == Rational(15, 16));      // (alpha+1)(alpha+2)/c^2

    const auto jp = build_moments(FamilySpec::jacobi_pineiro({Rational(0)}, Rational(0)), 3);
    CHECK(jp.moment(1, 0) == Rational(1));
    CHECK(jp.moment(1, 1) == Rational(1, 2));
    CHECK(jp.moment(1, 2) == Rational(1, 3));
    CHECK(jp.moment(1, 3) == Rational(1, 4));
}

TEST_CASE("r=1 orthogonality through moment sums for every family") {
    const std::vector<FamilySpec> specs{
        FamilySpec::hermite({Rational(1)}),
        FamilySpec::charlier({Rational(1)}),
        FamilySpec::laguerre1({Rational(1, 2)}),
        FamilySpec::laguerre2(Rational(1, 2), {Rational(2)}),
        FamilySpec::jacobi_pineiro({Rational(1, 2)}, Rational(1, 3)),
    };
    for (const auto& spec : specs) {
        const auto table = build_moments(spec, 12);
        const MopSolver solver(table);
        for (int deg = 1; deg <= 5; ++deg) {
            const auto p = solver.type2(MultiIndex({deg}));
            for (int k = 0; k < deg; ++k) {
                Rational acc;
                for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
                    acc += p.coefficients()[i] * table.moment(1, static_cast<int>(i) + k);
                }
                CHECK(acc == Rational(0));
            }
        }
    }
}

TEST_CASE("family parameter validation names the violated constraint") {
    CHECK_THROWS_AS(FamilySpec::hermite({Rational(1), Rational(1)}), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::charlier({Rational(-1)}), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::charlier({Rational(1), Rational(1)}), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::laguerre1({Rational(-2)}), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::laguerre1({Rational(1, 2), Rational(3, 2)}), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::laguerre2(Rational(-2), {Rational(1)}), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::laguerre2(Rational(0), {Rational(0)}), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::jacobi_pineiro({Rational(0)}, Rational(-1)), InvalidParameters);
    CHECK_THROWS_AS(FamilySpec::jacobi_pineiro({Rational(1, 2), Rational(5, 2)}, Rational(0)),
                    InvalidParameters);
    CHECK_THROWS_AS(build_moments(FamilySpec::hermite({Rational(1)}), -1), InvalidParameters);
}

TEST_CASE("moment depth errors name required vs available") {
    const auto table = build_moments(FamilySpec::charlier({Rational(1)}), 3);
    CHECK_THROWS_WITH_AS(table.moment(1, 4),
                         "moment of degree 4 required, table holds degrees 0..3",
                         InsufficientDepth);
}

TEST_CASE("custom moment ingestion round-trips a built table") {
    const auto table = build_moments(FamilySpec::charlier({Rational(1)}), 3);
    const auto path = write_temp("mop_custom_ok.json", table.to_json().dump());
    const auto loaded = ingest_custom(path);
    CHECK(loaded.r() == 1);
    CHECK(loaded.max_degree() == 3);
    for (int k = 0; k <= 3; ++k) CHECK(loaded.moment(1, k) == table.moment(1, k));
    std::filesystem::remove(path);
}

TEST_CASE("custom moment ingestion rejects ragged and malformed input") {
    const auto ragged = write_temp(
        "mop_custom_ragged.json",
        R"({"r": 2, "max_degree": 3, "moments": [["1","1","2"], ["1","2","6","22"]]})");
    CHECK_THROWS_AS(ingest_custom(ragged), RaggedTable);
    std::filesystem::remove(ragged);

    const auto bad_rational = write_temp(
        "mop_custom_bad.json", R"({"r": 1, "max_degree": 1, "moments": [["1","1/0"]]})");
    CHECK_THROWS_AS(ingest_custom(bad_rational), ParseError);
    std::filesystem::remove(bad_rational);

    const auto bad_json = write_temp("mop_custom_niether.json", "{not json");
    CHECK_THROWS_AS(ingest_custom(bad_json), ParseError);
    std::filesystem::remove(bad_json);

    CHECK_THROWS_AS(ingest_custom("/nonexistent/mop.json"), ParseError);
}
