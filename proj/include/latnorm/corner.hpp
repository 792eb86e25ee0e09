#pragma once

// Corner parallelepiped covers. For a vertex v with simplicial corner cone C
// spanned by the primitive edge directions x_1..x_d, the boxes are the
// translates v + sum a_i x_i + Box(C) (a in Z^d, a >= 0) that fit inside P;
// fitting is a single linear constraint per facet of P, evaluated at the
// box's worst corner, so the admissible a form a polytope and the box list is
// a lattice point enumeration. The cover statement being checked: the
// eps-trimmed polytope P(v, eps-bar), intersected with C, lies in the union
// of those boxes, where the trim over each facet not containing v is
// width/(l*(dim+1)).

#include "latnorm/cn.hpp"
#include "latnorm/hilbert.hpp"

namespace latnorm {

// Triangulates the corner cone at vertex vi into simplicial subcones spanned
// by edge directions, via a pulling triangulation of a transversal section.
inline std::vector<SimplicialCone> triangulate_corner_cone(const Polytope& p, std::size_t vi) {
    std::vector<ZVec> dirs = vertex_edge_dirs(p, vi);
    if (dirs.empty()) throw std::invalid_argument("triangulate_corner_cone: isolated vertex");
    if (dirs.size() == p.dim) return {SimplicialCone(ZMat(dirs.begin(), dirs.end()))};
    // Transversal hyperplane h with h.r > 0 on every edge direction.
    const std::size_t d = p.ambient;
    Region pos(d);
    for (const ZVec& r : dirs) pos.add(Halfspace(r, Rat(1)));
    auto h = lp_feasible(pos);
    if (!h) throw std::logic_error("triangulate_corner_cone: cone not pointed");
    std::vector<QVec> section;
    std::map<QVec, std::size_t> ray_of_point;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        QVec q = (Rat(1) / dot(*h, to_qvec(dirs[i]))) * to_qvec(dirs[i]);
        section.push_back(q);
        ray_of_point[q] = i;
    }
    Polytope sec = from_vertices(section);
    std::vector<SimplicialCone> cones;
    for (const std::vector<QVec>& simplex : triangulate(sec)) {
        ZMat gens;
        for (const QVec& q : simplex) gens.push_back(dirs[ray_of_point.at(q)]);
        cones.push_back(SimplicialCone(std::move(gens)));
    }
    return cones;
}

// Halfspace description of v + cone(gens) for a full-dimensional simplicial
// cone: the rows of the inverse generator matrix, read by columns.
inline std::vector<Halfspace> corner_cone_halfspaces(const QVec& v, const ZMat& gens) {
    auto inv = inverse(to_qmat(gens));
    if (!inv) throw std::invalid_argument("corner_cone_halfspaces: degenerate generators");
    std::vector<Halfspace> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        QVec col(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) col[j] = (*inv)[j][i];
        ZVec n = scale_to_primitive(col);
        out.emplace_back(n, dot(n, v));
    }
    return out;
}

struct PpdRegion {
    std::optional<Polytope> region;   // admissible a in R^d (nullopt: no box fits)
    std::vector<ZVec> translations;   // lattice points of the region, lex order
};

// Admissible box translations for the cone spanned by cone.gens at vertex vi.
inline PpdRegion corner_ppd_region(const Polytope& p, std::size_t vi, const SimplicialCone& cone) {
    if (!p.full_dim()) throw std::invalid_argument("corner_ppd_region: lower-dimensional polytope");
    const std::size_t d = p.ambient;
    if (cone.gens.size() != d) throw std::invalid_argument("corner_ppd_region: cone rank mismatch");
    const QVec& v = p.verts.at(vi);
    std::vector<Halfspace> hs;
    for (const Facet& f : p.facets) {
        ZVec coeff(d);
        Rat rhs = f.offset - dot(f.normal, v);
        for (std::size_t i = 0; i < d; ++i) {
            coeff[i] = dot(f.normal, cone.gens[i]);
            if (coeff[i] < 0) rhs -= Rat(coeff[i]);  // worst corner pays the negative terms
        }
        hs.emplace_back(coeff, rhs);
    }
    for (std::size_t i = 0; i < d; ++i) {
        ZVec e(d);
        e[i] = 1;
        hs.emplace_back(e, Rat(0));
    }
    PpdRegion out;
    auto poly = from_halfspaces(hs);
    if (!poly) return out;
    out.region = *poly;
    for (const ZVec& a : lattice_points(*poly)) out.translations.push_back(a);
    return out;
}

// The box v + sum a_i gens_i + Box(gens) as a polytope.
inline Polytope ppd_box(const QVec& v, const SimplicialCone& cone, const ZVec& a) {
    const std::size_t d = v.size();
    QVec base = v;
    for (std::size_t i = 0; i < d; ++i) base = base + Rat(a[i]) * to_qvec(cone.gens[i]);
    std::vector<QVec> corners;
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        QVec corner = base;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (std::size_t(1) << i)) corner = corner + to_qvec(cone.gens[i]);
        corners.push_back(corner);
    }
    return from_vertices(corners);
}

// P with a layer of algebraic thickness width_F/(l*(dim+1)) removed over
// every facet F not containing vertex vi.
inline Polytope corner_region(const Polytope& p, std::size_t vi, const Rat& l) {
    if (l < 1) throw std::invalid_argument("corner_region: l must be >= 1");
    std::vector<Halfspace> hs;
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
        const Facet& fc = p.facets[f];
        if (std::binary_search(fc.verts.begin(), fc.verts.end(), vi)) {
            hs.emplace_back(fc.normal, fc.offset);
        } else {
            Rat eps = alg_width(p, f) / (l * Rat(Int(p.dim) + 1));
            hs.emplace_back(fc.normal, fc.offset + eps);
        }
    }
    auto poly = from_halfspaces(hs, p.aff);
    if (!poly) throw std::logic_error("corner_region: trim emptied the polytope");
    return *poly;
}

struct CornerCoverReport {
    bool covered = true;
    std::optional<QVec> witness;
    std::vector<CoverReport> per_cone;
    std::vector<std::size_t> boxes_per_cone;
    std::size_t regions_explored = 0;
};

// Checks, cone by cone, that the trimmed corner region intersected with each
// simplicial subcone lies inside the union of admissible boxes.
inline CornerCoverReport check_corner_cover(const Polytope& p, std::size_t vi, const Rat& l,
                                            const CoverOptions& opts = {}) {
    if (!p.full_dim()) throw std::invalid_argument("check_corner_cover: lower-dimensional polytope");
    CornerCoverReport rep;
    Polytope trimmed = corner_region(p, vi, l);
    const QVec& v = p.verts.at(vi);
    for (const SimplicialCone& cone : triangulate_corner_cone(p, vi)) {
        std::vector<Halfspace> hs = halfspaces_of(trimmed);
        for (const Halfspace& h : corner_cone_halfspaces(v, cone.gens)) hs.push_back(h);
        auto target = from_halfspaces(hs);
        PpdRegion reg = corner_ppd_region(p, vi, cone);
        rep.boxes_per_cone.push_back(reg.translations.size());
        if (!target) {  // the cone misses the trimmed region entirely
            rep.per_cone.push_back(CoverReport{true, std::nullopt, "exact", 0, 0, std::nullopt, {}});
            continue;
        }
        std::vector<Polytope> boxes;
        if (!reg.translations.empty()) {
            Polytope box0 = ppd_box(v, cone, ZVec(p.ambient));
            for (const ZVec& a : reg.translations) {
                QVec shift(p.ambient);
                for (std::size_t i = 0; i < p.ambient; ++i)
                    shift = shift + Rat(a[i]) * to_qvec(cone.gens[i]);
                boxes.push_back(translate(box0, shift));
            }
        }
        CoverReport cr = check_cover(*target, boxes, opts);
        rep.regions_explored += cr.regions_explored;
        if (!cr.covered) {
            rep.covered = false;
            if (!rep.witness) rep.witness = cr.witness;
        }
        rep.per_cone.push_back(std::move(cr));
    }
    return rep;
}

struct SimplexPpdReport {
    bool covered = true;
    std::vector<CornerCoverReport> per_vertex;
    // Box translation lists per vertex (single cone each for a simplex).
    std::vector<std::vector<ZVec>> boxes_per_vertex;
    bool homothety_union_covers = false;
    std::optional<QVec> witness;
};

// Full parallelepipedal cover check for a simplex: at every vertex, the
// trimmed corner region must lie in the box union, and the trimmed regions
// themselves must cover the simplex.
inline SimplexPpdReport simplex_ppd_cover(const Polytope& p, const Rat& l = 1,
                                          const CoverOptions& opts = {}) {
    if (!p.full_dim() || p.verts.size() != p.ambient + 1)
        throw std::invalid_argument("simplex_ppd_cover: not a full-dimensional simplex");
    SimplexPpdReport rep;
    std::vector<Polytope> trimmed;
    for (std::size_t v = 0; v < p.verts.size(); ++v) {
        CornerCoverReport cc = check_corner_cover(p, v, l, opts);
        if (!cc.covered) {
            rep.covered = false;
            if (!rep.witness) rep.witness = cc.witness;
        }
        SimplicialCone cone = triangulate_corner_cone(p, v).front();
        rep.boxes_per_vertex.push_back(corner_ppd_region(p, v, cone).translations);
        rep.per_vertex.push_back(std::move(cc));
        trimmed.push_back(corner_region(p, v, l));
    }
    CoverReport hu = check_cover(p, trimmed, opts);
    rep.homothety_union_covers = hu.covered;
    if (!hu.covered) {
        rep.covered = false;
        if (!rep.witness) rep.witness = hu.witness;
    }
    return rep;
}

}  // namespace latnorm
