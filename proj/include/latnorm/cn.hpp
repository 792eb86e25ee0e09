#pragma once

// Convex-normality checks. For a dilation factor c >= 1, the candidate cover
// of cP is the translate family
//
//   cP =? union over v in vert(P), x in (c-1)P /\ ((c-1)v + Z^d) of x + P,
//
// and boundary convex normality asks the same only for the layer of cP of
// algebraic thickness width_F(P)/(dim+1) over each facet cF. Both reduce to
// exact cover decisions.

#include "latnorm/cover.hpp"

namespace latnorm {

struct CnFamily {
    Rat c;
    // One group per vertex of P: the vertex and its translation vectors.
    std::vector<std::pair<QVec, std::vector<QVec>>> groups;

    std::vector<QVec> all_translates() const {
        std::vector<QVec> out;
        for (const auto& [v, xs] : groups) out.insert(out.end(), xs.begin(), xs.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

inline CnFamily cn_family(const Polytope& p, const Rat& c) {
    if (c < 1) throw std::invalid_argument("cn_family: dilation factor below 1");
    CnFamily fam;
    fam.c = c;
    Polytope shrunk = dilate(p, c - 1);
    for (const QVec& v : p.verts) {
        QVec anchor = (c - 1) * v;
        std::vector<QVec> xs = enumerate_shifted_points(shrunk, anchor);
        fam.groups.emplace_back(v, std::move(xs));
    }
    return fam;
}

inline CoverReport check_cn_at(const Polytope& p, const Rat& c, const CoverOptions& opts = {}) {
    CnFamily fam = cn_family(p, c);
    Polytope target = dilate(p, c);
    std::vector<Polytope> pieces;
    for (const QVec& x : fam.all_translates()) pieces.push_back(translate(p, x));
    CoverReport rep = check_cover(target, pieces, opts);
    rep.c = c;
    return rep;
}

struct CnReport {
    bool holds = true;
    Rat k;
    std::vector<CoverReport> per_c;  // aligned with the grid
    std::vector<Rat> grid;
    std::vector<std::string> notes;
};

// Checks the translate cover at every grid value. A finite grid does not
// decide convex normality for all rational c in [2,k]; the report says so.
inline CnReport check_cn(const Polytope& p, const Rat& k, const std::vector<Rat>& grid,
                         const CoverOptions& opts = {}) {
    if (k < 2) throw std::invalid_argument("check_cn: k must be >= 2");
    CnReport rep;
    rep.k = k;
    rep.grid = grid;
    rep.notes.push_back("finite grid only; convex normality for all rational c is not decided");
    for (const Rat& c : grid) {
        if (c < 2 || c > k) throw std::invalid_argument("check_cn: grid value outside [2,k]");
        rep.per_c.push_back(check_cn_at(p, c, opts));
        if (!rep.per_c.back().covered) rep.holds = false;
    }
    return rep;
}

// Layer of cP over the dilated facet c*F, of algebraic thickness
// width_F(P)/(dim+1) (not scaled by c).
inline Polytope bcn_layer(const Polytope& p, std::size_t facet, const Rat& c) {
    Rat eps = alg_width(p, facet) / Rat(Int(p.dim) + 1);
    Polytope target = dilate(p, c);
    return facet_layer(target, facet, eps);  // dilation preserves facet order
}

inline CoverReport check_bcn_at(const Polytope& p, std::size_t facet, const Rat& c,
                                const CoverOptions& opts = {}) {
    CnFamily fam = cn_family(p, c);
    Polytope target = bcn_layer(p, facet, c);
    std::vector<Polytope> pieces;
    for (const QVec& x : fam.all_translates()) pieces.push_back(translate(p, x));
    CoverReport rep = check_cover(target, pieces, opts);
    rep.c = c;
    return rep;
}

struct BcnReport {
    bool holds = true;
    Rat k;
    std::vector<Rat> grid;
    // One report per (facet, grid value), facet-major.
    std::vector<std::pair<std::size_t, CoverReport>> per_facet_c;
    std::vector<std::string> notes;
};

inline BcnReport check_bcn(const Polytope& p, const Rat& k, const std::vector<Rat>& grid,
                           const CoverOptions& opts = {}) {
    if (k < 2) throw std::invalid_argument("check_bcn: k must be >= 2");
    BcnReport rep;
    rep.k = k;
    rep.grid = grid;
    rep.notes.push_back("finite grid only; boundary convex normality for all rational c is not decided");
    for (std::size_t f = 0; f < p.facets.size(); ++f)
        for (const Rat& c : grid) {
            if (c < 2 || c > k) throw std::invalid_argument("check_bcn: grid value outside [2,k]");
            rep.per_facet_c.emplace_back(f, check_bcn_at(p, f, c, opts));
            if (!rep.per_facet_c.back().second.covered) rep.holds = false;
        }
    return rep;
}

enum class HomothetyVariant { HighC, LowC };

// Vertex-homothety covers: for c with c-1 >= dim, cP should equal
// union_v (v + (c-1)P); for c in [1, (dim+1)/dim], cP should equal
// union over vertices v' of (c-1)P of (v' + P).
inline CoverReport check_vertex_homothety_cover(const Polytope& p, const Rat& c,
                                                HomothetyVariant variant,
                                                const CoverOptions& opts = {}) {
    const Rat d(Int(p.dim));
    if (variant == HomothetyVariant::HighC && c < d + 1)
        throw std::invalid_argument("check_vertex_homothety_cover: high-c variant needs c >= dim+1");
    if (variant == HomothetyVariant::LowC && (c < 1 || c > (d + 1) / d))
        throw std::invalid_argument(
            "check_vertex_homothety_cover: low-c variant needs 1 <= c <= (dim+1)/dim");
    Polytope target = dilate(p, c);
    std::vector<Polytope> pieces;
    if (variant == HomothetyVariant::HighC) {
        Polytope big = dilate(p, c - 1);
        for (const QVec& v : p.verts) pieces.push_back(translate(big, v));
    } else {
        Polytope small = dilate(p, c - 1);
        for (const QVec& v : small.verts) pieces.push_back(translate(p, v));
    }
    CoverReport rep = check_cover(target, pieces, opts);
    rep.c = c;
    return rep;
}

// Layer check for the pyramid conv(apex, base) carved out of P: the target is
// the layer of the dilated pyramid over its base (thickness = apex height over
// the base hyperplane, divided by dim+1), while the pieces are the convex-
// normality translates of the FULL polytope P. When P itself is the pyramid
// this is exactly check_bcn_at(P, base, c).
inline CoverReport check_pyramid_layer_cover(const Polytope& p, std::size_t apex, std::size_t base,
                                             const Rat& c, const CoverOptions& opts = {}) {
    const Facet& f = p.facets.at(base);
    const QVec& w = p.verts.at(apex);
    if (dot(f.normal, w) == f.offset)
        throw std::invalid_argument("pyramid: base facet not visible from the apex");
    std::vector<QVec> pv{w};
    for (std::size_t v : f.verts) pv.push_back(p.verts[v]);
    Polytope pyr = from_vertices(pv);
    std::size_t fi = pyr.facets.size();
    for (std::size_t i = 0; i < pyr.facets.size(); ++i)
        if (pyr.facets[i].normal == f.normal && pyr.facets[i].offset == f.offset) fi = i;
    if (fi == pyr.facets.size()) throw std::logic_error("pyramid: base facet lost");
    Polytope target = bcn_layer(pyr, fi, c);  // apex height = alg_width(pyr, fi)
    CnFamily fam = cn_family(p, c);
    std::vector<Polytope> pieces;
    for (const QVec& x : fam.all_translates()) pieces.push_back(translate(p, x));
    CoverReport rep = check_cover(target, pieces, opts);
    rep.c = c;
    return rep;
}

}  // namespace latnorm
