#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mop/errors.hpp"

namespace mop {

/// A point n = (n_1,...,n_r) of the lattice N^r. Entries are non-negative;
/// size() is |n| = n_1 + ... + n_r. Directions are 1-based throughout the
/// API, matching the unit vectors e_j; JSON serialization uses plain
/// 0-based entry arrays.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zero(int dimension);

    int dimension() const { return static_cast<int>(entries_.size()); }
    int size() const;

    /// Entry along direction j, 1 <= j <= r.
    int operator[](int j) const { return entries_.at(static_cast<std::size_t>(j - 1)); }

    const std::vector<int>& entries() const { return entries_; }

    MultiIndex step_up(int j) const;
    /// Throws BelowLattice when entry j is already 0 (the caller must treat
    /// P_{n-e_j} as absent, per the a_{0,m} = 0 convention).
    MultiIndex step_down(int j) const;

    bool componentwise_leq(const MultiIndex& other) const;

    std::string str() const; // "(2,1)"

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
    /// Graded lexicographic order: by |n| first, ties lexicographic. Any
    /// index compares greater than all of its lower neighbors, which is the
    /// order recurrence-based generation needs.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b);

private:
    std::vector<int> entries_;
};

/// All multi-indices with entries <= limits, in graded lexicographic order.
std::vector<MultiIndex> enumerate_box(const std::vector<int>& limits);

/// A monotone path from the origin: a sequence of 1-based step directions.
/// Partial sums trace the vertices 0 = n_0, n_1, ..., n_L with
/// n_{i+1} - n_i = e_{steps[i]}.
class LatticePath {
public:
    LatticePath(int dimension, std::vector<int> steps);

    int dimension() const { return dimension_; }
    const std::vector<int>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }

    MultiIndex target() const;
    std::vector<MultiIndex> vertices() const;

    friend bool operator==(const LatticePath& a, const LatticePath& b) {
        return a.dimension_ == b.dimension_ && a.steps_ == b.steps_;
    }

private:
    int dimension_;
    std::vector<int> steps_;
};

/// Number of monotone paths from the origin to n: |n|! / (n_1! ... n_r!).
mpz_class monotone_path_count(const MultiIndex& n);

/// Monotone paths from the origin to n. Returns all of them when their
/// count is <= max_count, otherwise max_count distinct paths drawn by a
/// seeded deterministic shuffle.
std::vector<LatticePath> monotone_paths(const MultiIndex& n, std::size_t max_count,
                                        std::uint64_t seed = 0);

/// The lexicographically smallest monotone path to n (all steps in
/// direction 1 first, then direction 2, ...).
LatticePath canonical_path(const MultiIndex& n);

} // namespace mop
