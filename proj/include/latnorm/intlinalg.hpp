#pragma once

// Integer matrix normal forms. Orientation convention, fixed once:
// row-style Hermite form H = U * M with U unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot). Smith form S = U * M * V.

#include "latnorm/matrix.hpp"

#include <cstdlib>
#include <optional>

namespace latnorm {

struct HnfResult {
    ZMat h;  // H = u * m
    ZMat u;  // unimodular
    std::vector<std::size_t> pivot_cols;
};

inline HnfResult hnf(const ZMat& m) {
    HnfResult res;
    res.h = m;
    std::size_t rows = m.size(), cols = mat_cols(m);
    res.u = identity_zmat(rows);
    ZMat& h = res.h;
    ZMat& u = res.u;

    auto row_sub = [&](std::size_t i, const Int& q, std::size_t r) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) h[i][j] -= q * h[r][j];
        for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Gather the column below r to a single nonzero pivot by gcd steps.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c]))) best = i;
            if (best == rows) break;  // column is zero below r
            if (best != r) {
                std::swap(h[best], h[r]);
                std::swap(u[best], u[r]);
            }
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                row_sub(i, floor_div(h[i][c], h[r][c]), r);
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows && h[r][c] != 0) {
            if (h[r][c] < 0) {
                for (std::size_t j = 0; j < cols; ++j) h[r][j] = -h[r][j];
                for (std::size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
            }
            for (std::size_t i = 0; i < r; ++i) row_sub(i, floor_div(h[i][c], h[r][c]), r);
            res.pivot_cols.push_back(c);
            ++r;
        }
    }
    return res;
}

// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
inline ZMat lattice_basis(const ZMat& generators) {
    HnfResult hr = hnf(generators);
    ZMat basis;
    for (std::size_t i = 0; i < hr.pivot_cols.size(); ++i) basis.push_back(hr.h[i]);
    return basis;
}

struct SnfResult {
    ZMat s;  // s = u * m * v, diagonal
    ZMat u;
    ZMat v;
    std::vector<Int> invariant_factors;  // positive, each divides the next
};

inline SnfResult snf(const ZMat& m) {
    SnfResult res;
    res.s = m;
    std::size_t rows = m.size(), cols = mat_cols(m);
    res.u = identity_zmat(rows);
    res.v = identity_zmat(cols);
    ZMat& s = res.s;

    auto row_sub = [&](std::size_t i, const Int& q, std::size_t r) {
        if (q == 0) return;
        for (std::size_t j = 0; j < cols; ++j) s[i][j] -= q * s[r][j];
        for (std::size_t j = 0; j < rows; ++j) res.u[i][j] -= q * res.u[r][j];
    };
    auto col_sub = [&](std::size_t j, const Int& q, std::size_t c) {
        if (q == 0) return;
        for (std::size_t i = 0; i < rows; ++i) s[i][j] -= q * s[i][c];
        for (std::size_t i = 0; i < cols; ++i) res.v[i][j] -= q * res.v[i][c];
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(s[i][a], s[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][a], res.v[i][b]);
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Locate a minimal-magnitude nonzero entry in the trailing block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (s[i][j] != 0 && (pi == rows || abs(s[i][j]) < abs(s[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // trailing block is zero
        if (pi != t) {
            std::swap(s[pi], s[t]);
            std::swap(res.u[pi], res.u[t]);
        }
        if (pj != t) col_swap(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (s[i][t] != 0) {
                    row_sub(i, floor_div(s[i][t], s[t][t]), t);
                    if (s[i][t] != 0) {
                        std::swap(s[i], s[t]);
                        std::swap(res.u[i], res.u[t]);
                        clean = false;
                    }
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (s[t][j] != 0) {
                    col_sub(j, floor_div(s[t][j], s[t][t]), t);
                    if (s[t][j] != 0) {
                        col_swap(j, t);
                        clean = false;
                    }
                }
        }
        // Divisibility: pivot must divide every remaining entry.
        bool fixed = true;
        for (std::size_t i = t + 1; i < rows && fixed; ++i)
            for (std::size_t j = t + 1; j < cols && fixed; ++j)
                if (s[i][j] % s[t][t] != 0) {
                    for (std::size_t jj = 0; jj < cols; ++jj) s[t][jj] += s[i][jj];
                    for (std::size_t jj = 0; jj < rows; ++jj) res.u[t][jj] += res.u[i][jj];
                    fixed = false;
                }
        if (!fixed) continue;  // re-clean row/column t
        if (s[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) s[t][j] = -s[t][j];
            for (std::size_t j = 0; j < rows; ++j) res.u[t][j] = -res.u[t][j];
        }
        ++t;
    }
    for (std::size_t i = 0; i < t; ++i) res.invariant_factors.push_back(s[i][i]);
    return res;
}

inline std::vector<Int> invariant_factors(const ZMat& m) { return snf(m).invariant_factors; }

// The row lattice of m is a direct summand of Z^n iff all invariant factors
// are 1 (equivalently the lattice is saturated).
inline bool is_direct_summand(const ZMat& m) {
    for (const Int& f : invariant_factors(m))
        if (f != 1) return false;
    return true;
}

inline ZMat zmat_inverse_unimodular(const ZMat& m) {
    auto inv = inverse(to_qmat(m));
    if (!inv) throw std::invalid_argument("zmat_inverse_unimodular: singular matrix");
    ZMat r(m.size(), ZVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (!is_integer((*inv)[i][j]))
                throw std::invalid_argument("zmat_inverse_unimodular: not unimodular");
            r[i][j] = numerator((*inv)[i][j]);
        }
    return r;
}

// Basis of span_Q(rows of m) intersected with Z^n (the saturation of the row
// lattice). With S = U m V and r nonzero factors, y is in the span iff the
// last n-r coordinates of y*V vanish, and y is integral iff y*V is; so the
// saturation is generated by the first r rows of V^{-1}.
inline ZMat saturate_lattice(const ZMat& m) {
    SnfResult sr = snf(m);
    std::size_t r = sr.invariant_factors.size();
    if (r == 0) return {};
    ZMat vinv = zmat_inverse_unimodular(sr.v);
    ZMat basis;
    for (std::size_t i = 0; i < r; ++i) basis.push_back(vinv[i]);
    return basis;
}

// Coefficients lambda with lambda * basis = y, if y lies in the row span;
// integrality of the coefficients decides lattice membership.
inline std::optional<QVec> span_coordinates(const ZMat& basis, const QVec& y) {
    if (basis.empty()) return is_zero(y) ? std::optional<QVec>(QVec(0)) : std::nullopt;
    QMat b = to_qmat(basis);
    QMat bt = transpose(b);
    QMat gram = QMat(b.size(), QVec(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) gram[i][j] = dot(b[i], b[j]);
    QVec rhs(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = dot(b[i], y);
    auto lambda = solve(gram, rhs);
    if (!lambda) throw std::invalid_argument("span_coordinates: dependent basis rows");
    if (!(vec_mat(*lambda, b) == y)) return std::nullopt;
    return lambda;
}

}  // namespace latnorm
