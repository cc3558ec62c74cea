#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mop/multi_index.hpp"

namespace mop {

enum class CheckStatus { pass, fail, skipped };

std::string check_status_name(CheckStatus s);

/// One verified instance: an equation name, the index (or index pair) it
/// was evaluated at, and, on failure, a witness with the exact values of
/// both sides. Skipped entries carry the reason in the witness field.
struct CheckRecord {
    std::string name;
    std::vector<MultiIndex> indices;
    CheckStatus status = CheckStatus::pass;
    std::string witness;
};

class VerificationReport {
public:
    void add(CheckRecord record) { checks_.push_back(std::move(record)); }
    void add_pass(std::string name, std::vector<MultiIndex> indices);
    void add_fail(std::string name, std::vector<MultiIndex> indices, std::string witness);
    void add_skip(std::string name, std::vector<MultiIndex> indices, std::string reason);
    void append(VerificationReport other);

    /// Stable order: by index (graded lex), then check name. Makes reports
    /// byte-identical regardless of generation schedule.
    void sort_records();

    bool pass() const;
    std::size_t failed_count() const;
    std::size_t skipped_count() const;
    const std::vector<CheckRecord>& checks() const { return checks_; }

    /// {"status": "pass"|"fail", "checks": [{"index": ..., "name": ...,
    ///  "status": ..., "witness": ...}, ...]}
    nlohmann::json to_json() const;

private:
    std::vector<CheckRecord> checks_;
};

} // namespace mop
