#pragma once

#include <random>
#include <stdexcept>

#include "latnorm/polytope.hpp"

namespace latnorm {

inline Polytope unit_simplex(std::size_t d) {
    if (d == 0) throw std::invalid_argument("unit_simplex: dimension must be positive");
    std::vector<QVec> vs;
    vs.emplace_back(d);
    for (std::size_t i = 0; i < d; ++i) {
        QVec v(d);
        v[i] = 1;
        vs.push_back(v);
    }
    return from_vertices(vs);
}

inline Polytope dilated_simplex(std::size_t d, const Rat& c) {
    return dilate(unit_simplex(d), c);
}

// Tetrahedron conv(0, e1, e2, (1,1,q)).  Its vertex differences span an index-q
// sublattice of Z^3; for q >= 2 the simplex is normal but not integrally closed.
inline Polytope reeve(const Int& q) {
    if (q < 1) throw std::invalid_argument("reeve: parameter must be at least 1");
    QVec apex(3);
    apex[0] = 1;
    apex[1] = 1;
    apex[2] = Rat(q);
    return from_vertices({QVec{0, 0, 0}, QVec{1, 0, 0}, QVec{0, 1, 0}, apex});
}

// 0/1 tetrahedron on the even-coordinate-sum vertices; empty of other lattice
// points, normal over its own vertex lattice, not integrally closed in Z^3.
inline Polytope hollow3() {
    return from_vertices({QVec{0, 0, 0}, QVec{1, 1, 0}, QVec{1, 0, 1}, QVec{0, 1, 1}});
}

inline Polytope cube(std::size_t d, const Rat& l) {
    if (d == 0) throw std::invalid_argument("cube: dimension must be positive");
    if (l <= 0) throw std::invalid_argument("cube: side length must be positive");
    std::vector<QVec> vs;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        QVec v(d);
        for (std::size_t i = 0; i < d; ++i)
            if (mask >> i & 1) v[i] = l;
        vs.push_back(v);
    }
    return from_vertices(vs);
}

// Convex hull of n points drawn uniformly from {0,...,box}^d, redrawn until the
// hull is full-dimensional.
inline Polytope random_lattice_polytope(std::size_t d, std::size_t n, long box,
                                        std::mt19937_64& rng) {
    if (d == 0 || n < d + 1) throw std::invalid_argument("random_lattice_polytope: need n >= d+1");
    if (box < 1) throw std::invalid_argument("random_lattice_polytope: box must be positive");
    std::uniform_int_distribution<long> coord(0, box);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<QVec> pts;
        for (std::size_t i = 0; i < n; ++i) {
            QVec v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = coord(rng);
            pts.push_back(v);
        }
        Polytope p = from_vertices(pts);
        if (p.full_dim()) return p;
    }
    throw std::runtime_error("random_lattice_polytope: no full-dimensional sample found");
}

// Random element of GL_d(Z) built from elementary row operations on the
// identity; entries stay small for moderate step counts.
inline ZMat random_unimodular(std::size_t d, std::mt19937_64& rng, std::size_t steps = 12) {
    if (d == 0) throw std::invalid_argument("random_unimodular: dimension must be positive");
    ZMat u = identity_zmat(d);
    if (d == 1) {
        if (rng() & 1) u[0][0] = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> row(0, d - 1);
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t i = row(rng), j = row(rng);
        if (i == j) {
            u[i] = -u[i];
            continue;
        }
        if (rng() & 1)
            u[i] = u[i] + u[j];
        else
            u[i] = u[i] - u[j];
    }
    return u;
}

// Image of p under a random unimodular map plus a random integral translation.
inline Polytope skew_image(const Polytope& p, std::mt19937_64& rng, long shift_box = 5) {
    ZMat u = random_unimodular(p.ambient, rng);
    std::uniform_int_distribution<long> sh(-shift_box, shift_box);
    ZVec t(p.ambient);
    for (std::size_t i = 0; i < p.ambient; ++i) t[i] = sh(rng);
    return unimodular_image(p, u, t);
}

}  // namespace latnorm
