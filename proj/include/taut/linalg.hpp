#pragma once

#include <stdexcept>
#include <vector>

#include "taut/rational.hpp"

namespace taut {

using Vec = std::vector<Rat>;
using Mat = std::vector<std::vector<Rat>>;

inline Mat mat_identity(int n) {
    Mat m(n, Vec(n));
    for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat c(n, Vec(p));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    }
    return c;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    Vec y(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw std::invalid_argument("mat_vec: shape mismatch");
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

inline bool mat_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    }
    return true;
}

/// Exact Gauss-Jordan inverse; throws on a singular matrix.
inline Mat mat_inverse(Mat a) {
    const size_t n = a.size();
    Mat inv = mat_identity(static_cast<int>(n));
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("mat_inverse: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            const Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/**
 * Solves A x = b exactly for a possibly overdetermined system.  Requires
 * the solution to be unique (rank = number of unknowns) and the system to
 * be consistent; throws std::domain_error otherwise.  Used where a family
 * of identities overdetermines a table of values and consistency itself is
 * part of the claim being verified.
 */
inline Vec solve_exact(Mat a, Vec b) {
    const size_t rows = a.size();
    const size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows) throw std::invalid_argument("solve_exact: shape mismatch");
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        std::swap(b[pivot], b[rank]);
        const Rat d = a[rank][col];
        for (size_t j = col; j < cols; ++j) a[rank][j] /= d;
        b[rank] /= d;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            const Rat f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
            b[i] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank < cols) throw std::domain_error("solve_exact: system does not determine all unknowns");
    for (size_t i = rank; i < rows; ++i)
        if (!b[i].is_zero()) throw std::domain_error("solve_exact: inconsistent system");
    Vec x(cols);
    for (size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace taut
