#pragma once

#include <cstddef>
#include <vector>

#include "mop/rational.hpp"

namespace mop {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Exact determinant. Clears each row's denominators, then runs
/// fraction-free Bareiss elimination over the integers; the 0x0 matrix has
/// determinant 1. Throws DimensionMismatch for non-square input.
Rational determinant(const RationalMatrix& m);

/// Exact solution x of m x = rhs by rational Gaussian elimination.
/// Throws SingularMatrix when no unique solution exists.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

/// m times a vector, exactly.
std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v);

} // namespace mop
