#include "mop/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace mop {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw InvalidParameters("multi-index needs at least one entry");
    }
    for (int e : entries_) {
        if (e < 0) throw InvalidParameters("multi-index entries must be non-negative");
    }
}

MultiIndex MultiIndex::zero(int dimension) {
    if (dimension < 1) throw InvalidParameters("multi-index dimension must be >= 1");
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

int MultiIndex::size() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::step_up(int j) const {
    auto e = entries_;
    e.at(static_cast<std::size_t>(j - 1)) += 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::step_down(int j) const {
    auto e = entries_;
    auto& v = e.at(static_cast<std::size_t>(j - 1));
    if (v == 0) {
        throw BelowLattice("cannot step below the lattice at " + str() +
                           " in direction " + std::to_string(j));
    }
    v -= 1;
    return MultiIndex(std::move(e));
}

bool MultiIndex::componentwise_leq(const MultiIndex& other) const {
    if (dimension() != other.dimension()) {
        throw DimensionMismatch("comparing multi-indices of different dimension");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > other.entries_[i]) return false;
    }
    return true;
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.entries_ < b.entries_;
}

std::vector<MultiIndex> enumerate_box(const std::vector<int>& limits) {
    if (limits.empty()) throw InvalidParameters("box needs at least one limit");
    for (int l : limits) {
        if (l < 0) throw InvalidParameters("box limits must be non-negative");
    }
    std::vector<MultiIndex> out;
    std::vector<int> cur(limits.size(), 0);
    for (;;) {
        out.emplace_back(cur);
        std::size_t pos = limits.size();
        while (pos > 0) {
            --pos;
            if (cur[pos] < limits[pos]) {
                ++cur[pos];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cur.end(), 0);
                break;
            }
            if (pos == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
    }
}

LatticePath::LatticePath(int dimension, std::vector<int> steps)
    : dimension_(dimension), steps_(std::move(steps)) {
    if (dimension_ < 1) throw InvalidParameters("path dimension must be >= 1");
    for (int s : steps_) {
        if (s < 1 || s > dimension_) {
            throw InvalidParameters("path step direction out of range: " + std::to_string(s));
        }
    }
}

MultiIndex LatticePath::target() const {
    std::vector<int> e(static_cast<std::size_t>(dimension_), 0);
    for (int s : steps_) e[static_cast<std::size_t>(s - 1)] += 1;
    return MultiIndex(std::move(e));
}

std::vector<MultiIndex> LatticePath::vertices() const {
    std::vector<MultiIndex> out;
    out.reserve(steps_.size() + 1);
    MultiIndex cur = MultiIndex::zero(dimension_);
    out.push_back(cur);
    for (int s : steps_) {
        cur = cur.step_up(s);
        out.push_back(cur);
    }
    return out;
}

mpz_class monotone_path_count(const MultiIndex& n) {
    mpz_class count = 1;
    int placed = 0;
    for (int j = 1; j <= n.dimension(); ++j) {
        for (int t = 1; t <= n[j]; ++t) {
            ++placed;
            count *= placed;
            count /= t; // exact: running product of binomials
        }
    }
    return count;
}

namespace {

void enumerate_paths_rec(std::vector<int>& remaining, std::vector<int>& prefix,
                         int dimension, std::vector<LatticePath>& out) {
    bool done = true;
    for (int j = 0; j < dimension; ++j) {
        if (remaining[static_cast<std::size_t>(j)] > 0) {
            done = false;
            remaining[static_cast<std::size_t>(j)] -= 1;
            prefix.push_back(j + 1);
            enumerate_paths_rec(remaining, prefix, dimension, out);
            prefix.pop_back();
            remaining[static_cast<std::size_t>(j)] += 1;
        }
    }
    if (done) out.emplace_back(dimension, prefix);
}

} // namespace

std::vector<LatticePath> monotone_paths(const MultiIndex& n, std::size_t max_count,
                                        std::uint64_t seed) {
    if (max_count < 1) throw InvalidParameters("max_count must be >= 1");
    const mpz_class total = monotone_path_count(n);
    if (total <= static_cast<unsigned long>(max_count)) {
        std::vector<LatticePath> out;
        std::vector<int> remaining = n.entries();
        std::vector<int> prefix;
        enumerate_paths_rec(remaining, prefix, n.dimension(), out);
        return out;
    }
    // Sample distinct step sequences: deterministic Fisher-Yates shuffles of
    // the sorted step multiset, deduplicated until max_count collected.
    std::mt19937_64 rng(seed);
    std::vector<int> base = canonical_path(n).steps();
    std::set<std::vector<int>> seen;
    std::vector<LatticePath> out;
    while (out.size() < max_count) {
        std::vector<int> steps = base;
        for (std::size_t i = steps.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
            std::swap(steps[i], steps[j]);
        }
        if (seen.insert(steps).second) {
            out.emplace_back(n.dimension(), std::move(steps));
        }
    }
    return out;
}

LatticePath canonical_path(const MultiIndex& n) {
    std::vector<int> steps;
    steps.reserve(static_cast<std::size_t>(n.size()));
    for (int j = 1; j <= n.dimension(); ++j) {
        steps.insert(steps.end(), static_cast<std::size_t>(n[j]), j);
    }
    return LatticePath(n.dimension(), std::move(steps));
}

} // namespace mop
