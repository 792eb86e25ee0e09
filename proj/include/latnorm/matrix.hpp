#pragma once

// Exact dense linear algebra over Q, plus integer matrices. Sizes here are
// desk-scale (tens of rows), so fraction-free tricks are unnecessary; plain
// rational Gauss is exact and fast enough.

#include "latnorm/vec.hpp"

#include <optional>
#include <vector>

namespace latnorm {

using QMat = std::vector<QVec>;  // rows
using ZMat = std::vector<ZVec>;  // rows

inline QMat to_qmat(const ZMat& m) {
    QMat r;
    r.reserve(m.size());
    for (const ZVec& v : m) r.push_back(to_qvec(v));
    return r;
}

inline std::size_t mat_cols(const QMat& m) { return m.empty() ? 0 : m[0].size(); }
inline std::size_t mat_cols(const ZMat& m) { return m.empty() ? 0 : m[0].size(); }

// Row-reduces a copy of m in place; returns the pivot column per pivot row.
// On exit m is in row echelon form (not reduced above pivots).
inline std::vector<std::size_t> gauss_echelon(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size(), cols = mat_cols(m), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return gauss_echelon(m).size(); }
inline std::size_t rank(const ZMat& m) { return rank(to_qmat(m)); }

inline Rat det(QMat m) {
    std::size_t n = m.size();
    if (n == 0) return Rat(1);
    if (mat_cols(m) != n) throw std::invalid_argument("det: non-square matrix");
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            std::swap(m[sel], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

inline Int det(const ZMat& m) {
    Rat d = det(to_qmat(m));
    return numerator(d);  // integer matrix => integer determinant
}

// Solves A x = b for square nonsingular A; nullopt when singular or
// inconsistent would not apply (square solve only).
inline std::optional<QVec> solve(QMat a, QVec b) {
    std::size_t n = a.size();
    if (n == 0) return QVec(0);
    if (mat_cols(a) != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a[sel][c] == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[sel], a[c]);
        std::swap(b[sel], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    QVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline std::optional<QMat> inverse(const QMat& a) {
    std::size_t n = a.size();
    if (n == 0 || mat_cols(a) != n) throw std::invalid_argument("inverse: non-square matrix");
    QMat w = a, inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && w[sel][c] == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(w[sel], w[c]);
        std::swap(inv[sel], inv[c]);
        Rat p = w[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            w[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w[i][c] == 0) continue;
            Rat f = w[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                w[i][j] -= f * w[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Basis of {x : M x = 0} (right null space), one QVec per basis vector.
inline std::vector<QVec> nullspace(QMat m) {
    std::size_t cols = mat_cols(m);
    std::vector<std::size_t> pivots = gauss_echelon(m);
    // Back-substitute to reduced form.
    for (std::size_t r = pivots.size(); r-- > 0;) {
        std::size_t c = pivots[r];
        Rat p = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= p;
        for (std::size_t i = 0; i < r; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
    }
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        basis.push_back(v);
    }
    return basis;
}

inline QVec mat_vec(const QMat& m, const QVec& x) {
    QVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

inline ZVec mat_vec(const ZMat& m, const ZVec& x) {
    ZVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

// x^T M for a row vector x (used for lattice coordinates: point = coeffs * basis).
inline QVec vec_mat(const QVec& x, const QMat& m) {
    QVec r(mat_cols(m));
    for (std::size_t j = 0; j < r.size(); ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += x[i] * m[i][j];
        r[j] = s;
    }
    return r;
}

inline ZVec vec_mat(const ZVec& x, const ZMat& m) {
    ZVec r(mat_cols(m));
    for (std::size_t j = 0; j < r.size(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < m.size(); ++i) s += x[i] * m[i][j];
        r[j] = s;
    }
    return r;
}

inline QMat transpose(const QMat& m) {
    QMat t(mat_cols(m), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline ZMat identity_zmat(std::size_t n) {
    ZMat m(n, ZVec(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline ZMat mat_mul(const ZMat& a, const ZMat& b) {
    std::size_t n = a.size(), k = mat_cols(a), m = mat_cols(b);
    if (k != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
    ZMat r(n, ZVec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

}  // namespace latnorm
