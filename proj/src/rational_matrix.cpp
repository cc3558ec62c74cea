#include "mop/rational_matrix.hpp"

#include <string>
#include <utility>

namespace mop {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("determinant of a " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
    }
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1); // empty product convention

    // Clear denominators row by row; det(M) = det(integer matrix) / scale.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class g;
            mpz_lcm(g.get_mpz_t(), row_lcm.get_mpz_t(), m.at(i, j).den().get_mpz_t());
            row_lcm = g;
        }
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class factor = row_lcm / m.at(i, j).den();
            a[i][j] = m.at(i, j).num() * factor;
        }
        scale *= row_lcm;
    }

    // Bareiss: every division below is exact, intermediates stay minors.
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpz_class det_int = a[n - 1][n - 1];
    if (sign < 0) det_int = -det_int;
    return Rational(det_int, scale);
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("solve needs a square matrix");
    }
    if (rhs.size() != m.rows()) {
        throw DimensionMismatch("solve: rhs length " + std::to_string(rhs.size()) +
                                " vs " + std::to_string(m.rows()) + " rows");
    }
    const std::size_t n = m.rows();
    if (n == 0) return {};

    // Augmented exact Gaussian elimination.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = rhs[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("singular system (pivot column " + std::to_string(k) + ")");
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            const Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc = a[k][n];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
        x[k] = acc / a[k][k];
    }
    return x;
}

std::vector<Rational> multiply(const RationalMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

} // namespace mop
