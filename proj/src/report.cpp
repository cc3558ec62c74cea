#include "mop/report.hpp"

#include <algorithm>

namespace mop {

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "fail";
}

void VerificationReport::add_pass(std::string name, std::vector<MultiIndex> indices) {
    add(CheckRecord{std::move(name), std::move(indices), CheckStatus::pass, ""});
}

void VerificationReport::add_fail(std::string name, std::vector<MultiIndex> indices,
                                  std::string witness) {
    add(CheckRecord{std::move(name), std::move(indices), CheckStatus::fail, std::move(witness)});
}

void VerificationReport::add_skip(std::string name, std::vector<MultiIndex> indices,
                                  std::string reason) {
    add(CheckRecord{std::move(name), std::move(indices), CheckStatus::skipped, std::move(reason)});
}

void VerificationReport::append(VerificationReport other) {
    for (auto& rec : other.checks_) checks_.push_back(std::move(rec));
}

void VerificationReport::sort_records() {
    std::stable_sort(checks_.begin(), checks_.end(),
                     [](const CheckRecord& x, const CheckRecord& y) {
                         if (x.indices != y.indices) {
                             return std::lexicographical_compare(x.indices.begin(), x.indices.end(),
                                                                 y.indices.begin(), y.indices.end());
                         }
                         return x.name < y.name;
                     });
}

bool VerificationReport::pass() const {
    return std::none_of(checks_.begin(), checks_.end(),
                        [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

std::size_t VerificationReport::failed_count() const {
    return static_cast<std::size_t>(std::count_if(
        checks_.begin(), checks_.end(),
        [](const CheckRecord& r) { return r.status == CheckStatus::fail; }));
}

std::size_t VerificationReport::skipped_count() const {
    return static_cast<std::size_t>(std::count_if(
        checks_.begin(), checks_.end(),
        [](const CheckRecord& r) { return r.status == CheckStatus::skipped; }));
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& rec : checks_) {
        nlohmann::json index;
        if (rec.indices.size() == 1) {
            index = rec.indices.front().entries();
        } else {
            index = nlohmann::json::array();
            for (const auto& n : rec.indices) index.push_back(n.entries());
        }
        checks.push_back(nlohmann::json{{"name", rec.name},
                                        {"index", std::move(index)},
                                        {"status", check_status_name(rec.status)},
                                        {"witness", rec.witness}});
    }
    return nlohmann::json{{"status", pass() ? "pass" : "fail"}, {"checks", std::move(checks)}};
}

} // namespace mop
