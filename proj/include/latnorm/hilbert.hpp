#pragma once

// Hilbert bases of simplicial cones via the fundamental parallelepiped:
// every irreducible element lies in the closed box spanned by the
// generators (both summands of any splitting stay in the box, since the
// fractional generator coordinates of a sum add up), so candidates are the
// box's lattice points and irreducibility is a componentwise dominance test
// on those coordinates. Heights are normalized: the coordinate sum in the
// generator basis.

#include "latnorm/enumerate.hpp"
#include "latnorm/intlinalg.hpp"

namespace latnorm {

struct not_simple_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SimplicialCone {
    ZMat gens;  // primitive, linearly independent rows

    explicit SimplicialCone(ZMat g) : gens(std::move(g)) {
        for (ZVec& v : gens) v = primitive_part(v);
        if (gens.empty() || rank(gens) != gens.size())
            throw std::invalid_argument("SimplicialCone: generators must be independent");
    }
};

struct HilbertBasis {
    SimplicialCone cone;
    std::vector<ZVec> elements;   // irreducible lattice points, sorted by (height, lex)
    std::vector<QVec> box_coords; // generator-basis coordinates, parallel to elements
    std::vector<Rat> heights;     // coordinate sums, parallel to elements
};

inline HilbertBasis hilbert_basis(const SimplicialCone& cone) {
    const std::size_t m = cone.gens.size();
    // Work in the saturation of the generated span so the box enumeration is
    // full-dimensional: lattice = span /\ Z^d with basis rows B, generators
    // re-expressed as integer rows gamma.
    ZMat b = saturate_lattice(cone.gens);
    ZMat gamma;
    for (const ZVec& g : cone.gens) {
        auto lam = span_coordinates(b, to_qvec(g));
        if (!lam || !is_integral(*lam)) throw std::logic_error("hilbert_basis: saturation failure");
        gamma.push_back(to_zvec(*lam));
    }
    // Closed box {sum lambda_i gamma_i : lambda in [0,1]^m} as a polytope.
    std::vector<QVec> corners;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        ZVec corner(m);
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t(1) << i)) corner = corner + gamma[i];
        corners.push_back(to_qvec(corner));
    }
    Polytope box = from_vertices(corners);
    QMat gamma_inv = *inverse(to_qmat(gamma));

    struct Cand {
        ZVec z;      // in lattice coordinates
        QVec lam;    // box coordinates
        Rat height;
    };
    std::vector<Cand> cands;
    for (const ZVec& z : lattice_points(box)) {
        if (is_zero(z)) continue;
        QVec lam = vec_mat(to_qvec(z), gamma_inv);
        Rat h = 0;
        for (const Rat& x : lam.c) h += x;
        cands.push_back({z, lam, h});
    }
    HilbertBasis hb{cone, {}, {}, {}};
    for (const Cand& c : cands) {
        bool reducible = false;
        for (const Cand& o : cands) {
            if (&o == &c) continue;
            bool below = true;
            for (std::size_t i = 0; i < m && below; ++i) below = o.lam[i] <= c.lam[i];
            if (below && !(o.z == c.z)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) {
            hb.elements.push_back(vec_mat(c.z, b));  // back to ambient coordinates
            hb.box_coords.push_back(c.lam);
            hb.heights.push_back(c.height);
        }
    }
    // Canonical order: by height, then ambient lex.
    std::vector<std::size_t> idx(hb.elements.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c2) {
        if (hb.heights[a] != hb.heights[c2]) return hb.heights[a] < hb.heights[c2];
        return hb.elements[a] < hb.elements[c2];
    });
    HilbertBasis sorted{cone, {}, {}, {}};
    for (std::size_t i : idx) {
        sorted.elements.push_back(hb.elements[i]);
        sorted.box_coords.push_back(hb.box_coords[i]);
        sorted.heights.push_back(hb.heights[i]);
    }
    return sorted;
}

struct GaugeReport {
    Rat gauge;                    // max over vertices of max basis height
    std::vector<Rat> per_vertex;  // aligned with Polytope::verts
};

// Height gauge of a simple polytope: corner cones must be simplicial.
inline GaugeReport gauge_k(const Polytope& p) {
    if (p.dim == 0) throw std::invalid_argument("gauge_k: zero-dimensional polytope");
    GaugeReport rep;
    rep.gauge = 0;
    for (std::size_t v = 0; v < p.verts.size(); ++v) {
        std::vector<ZVec> dirs = vertex_edge_dirs(p, v);
        if (dirs.size() != p.dim) throw not_simple_error("gauge_k: vertex is not simple");
        ZMat gens(dirs.begin(), dirs.end());
        if (rank(gens) != p.dim) throw not_simple_error("gauge_k: degenerate corner cone");
        HilbertBasis hb = hilbert_basis(SimplicialCone(gens));
        Rat mx = 0;
        for (const Rat& h : hb.heights)
            if (h > mx) mx = h;
        rep.per_vertex.push_back(mx);
        if (mx > rep.gauge) rep.gauge = mx;
    }
    return rep;
}

}  // namespace latnorm
