#pragma once

// Bounded rational polytopes with exact dual descriptions. A Polytope always
// carries both representations in canonical form: vertices sorted
// lexicographically, irredundant facets sorted by (normal, offset), affine
// hull equalities for lower-dimensional bodies, and the edge graph. All of it
// is recomputed through the double description method, so the two
// representations are consistent by construction.

#include "latnorm/dd.hpp"
#include "latnorm/intlinalg.hpp"
#include "latnorm/region.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace latnorm {

struct unbounded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Facet {
    ZVec normal;  // primitive; interior side is normal.x >= offset
    Rat offset;
    std::vector<std::size_t> verts;  // indices into Polytope::verts, sorted
};

struct Polytope {
    std::size_t ambient = 0;
    std::size_t dim = 0;
    std::vector<QVec> verts;
    std::vector<Facet> facets;
    std::vector<Hyperplane> aff;  // affine hull equalities (empty when full-dim)
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i<j vertex index pairs

    bool full_dim() const { return dim == ambient; }

    bool contains(const QVec& x) const {
        for (const Hyperplane& h : aff)
            if (!h.contains(x)) return false;
        for (const Facet& f : facets)
            if (dot(f.normal, x) < f.offset) return false;
        return true;
    }

    friend bool operator==(const Polytope& a, const Polytope& b) {
        return a.ambient == b.ambient && a.verts == b.verts;  // canonical forms
    }
};

namespace detail {

// Coordinates of y in the row space of basis, assuming membership (exact;
// basis rows independent). Solved via the Gram matrix.
inline QVec span_coords_exact(const QMat& basis, const QMat& gram_inv, const QVec& y) {
    QVec rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = dot(basis[i], y);
    return mat_vec(gram_inv, rhs);
}

}  // namespace detail

inline Polytope from_vertices(std::vector<QVec> pts) {
    if (pts.empty()) throw std::invalid_argument("from_vertices: no points");
    const std::size_t d = pts[0].size();
    for (const QVec& p : pts)
        if (p.size() != d) throw std::invalid_argument("from_vertices: mixed dimensions");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope poly;
    poly.ambient = d;
    const QVec& p0 = pts[0];

    // Affine basis: maximal independent subset of the difference vectors.
    QMat basis;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        basis.push_back(pts[i] - p0);
        if (rank(basis) != basis.size()) basis.pop_back();
    }
    const std::size_t r = basis.size();
    poly.dim = r;

    // Affine hull equalities from the null space of the basis directions.
    {
        QMat rows = basis;
        if (rows.empty()) rows.push_back(QVec(d));  // null space of 0 = everything
        for (const QVec& nb : nullspace(rows)) {
            ZVec n = scale_to_primitive(nb);
            poly.aff.emplace_back(n, dot(n, p0));
        }
        std::sort(poly.aff.begin(), poly.aff.end());
    }

    if (r == 0) {
        poly.verts = {p0};
        return poly;
    }

    QMat gram(r, QVec(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(basis[i], basis[j]);
    QMat gram_inv = *inverse(gram);

    std::vector<QVec> red;  // reduced coordinates, one per point
    red.reserve(pts.size());
    for (const QVec& p : pts) red.push_back(detail::span_coords_exact(basis, gram_inv, p - p0));

    // Facets of the reduced polytope = extreme rays of the homogenized dual.
    QMat dual_rows;
    dual_rows.reserve(pts.size());
    for (const QVec& l : red) {
        QVec row(r + 1);
        row[0] = 1;
        for (std::size_t j = 0; j < r; ++j) row[j + 1] = l[j];
        dual_rows.push_back(row);
    }
    std::vector<ZVec> rays = extreme_rays(dual_rows);

    struct RedFacet {
        ZVec h;  // reduced normal (size r)
        Int h0;
        std::vector<std::size_t> tight;  // indices into pts/red
    };
    std::vector<RedFacet> rfacets;
    rfacets.reserve(rays.size());
    for (const ZVec& ray : rays) {
        RedFacet f;
        f.h0 = ray[0];
        f.h = ZVec(r);
        for (std::size_t j = 0; j < r; ++j) f.h[j] = ray[j + 1];
        for (std::size_t i = 0; i < red.size(); ++i)
            if (dot(f.h, red[i]) + Rat(f.h0) == 0) f.tight.push_back(i);
        rfacets.push_back(std::move(f));
    }

    // A point is a vertex iff its tight facet normals span the reduced space.
    std::vector<std::size_t> vert_of_pt(pts.size(), SIZE_MAX);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        QMat tn;
        for (const RedFacet& f : rfacets)
            if (std::find(f.tight.begin(), f.tight.end(), i) != f.tight.end())
                tn.push_back(to_qvec(f.h));
        if (rank(tn) == r) {
            vert_of_pt[i] = poly.verts.size();
            poly.verts.push_back(pts[i]);
        }
    }
    // pts was lex-sorted, so verts is too.

    // Lift each reduced facet to an ambient halfspace. With
    // lambda(x) = gram_inv * basis * (x - p0) and gram_inv symmetric,
    // h.lambda(x) = w.(x - p0) for w = basis^T * (gram_inv * h).
    for (const RedFacet& f : rfacets) {
        QVec gh = mat_vec(gram_inv, to_qvec(f.h));
        QVec w(d);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < d; ++j) w[j] += gh[i] * basis[i][j];
        ZVec n = scale_to_primitive(w);
        // Positive scale factor between w and n fixes the offset exactly.
        Rat scale;
        for (std::size_t j = 0; j < d; ++j)
            if (n[j] != 0) {
                scale = Rat(n[j]) / w[j];
                break;
            }
        Rat b = scale * (dot(w, p0) - Rat(f.h0));
        Facet facet;
        facet.normal = n;
        facet.offset = b;
        for (std::size_t i : f.tight)
            if (vert_of_pt[i] != SIZE_MAX) facet.verts.push_back(vert_of_pt[i]);
        std::sort(facet.verts.begin(), facet.verts.end());
        poly.facets.push_back(std::move(facet));
    }
    std::sort(poly.facets.begin(), poly.facets.end(), [](const Facet& a, const Facet& b) {
        if (!(a.normal == b.normal)) return a.normal < b.normal;
        return a.offset < b.offset;
    });

    // Edges: vertex pairs whose common facets cut out a line in the hull.
    std::vector<std::vector<std::size_t>> facets_of_vert(poly.verts.size());
    for (std::size_t fi = 0; fi < poly.facets.size(); ++fi)
        for (std::size_t vi : poly.facets[fi].verts) facets_of_vert[vi].push_back(fi);
    std::vector<QVec> red_normals;  // reduced facet normals aligned with sorted facets
    {
        // Recompute reduced normals in sorted facet order for rank tests.
        for (const Facet& f : poly.facets) {
            QVec w = to_qvec(f.normal);
            red_normals.push_back(detail::span_coords_exact(basis, gram_inv, w));
        }
    }
    for (std::size_t i = 0; i < poly.verts.size(); ++i)
        for (std::size_t j = i + 1; j < poly.verts.size(); ++j) {
            QMat common;
            for (std::size_t fi : facets_of_vert[i])
                if (std::binary_search(poly.facets[fi].verts.begin(), poly.facets[fi].verts.end(), j))
                    common.push_back(red_normals[fi]);
            if (rank(common) + 1 == r) poly.edges.emplace_back(i, j);
        }
    return poly;
}

// Bounded intersection of halfspaces (and optional equalities). Returns
// nullopt when infeasible; throws unbounded_error when the solution set is
// unbounded (detected exactly via the homogenization cone).
inline std::optional<Polytope> from_halfspaces(const std::vector<Halfspace>& hs,
                                               const std::vector<Hyperplane>& eqs = {}) {
    if (hs.empty()) throw std::invalid_argument("from_halfspaces: no constraints");
    const std::size_t d = hs[0].normal.size();
    Region r(d);
    for (const Halfspace& h : hs) {
        if (h.strict) throw std::invalid_argument("from_halfspaces: strict halfspace");
        r.add(h);
    }
    for (const Hyperplane& e : eqs) r.add_equality(e);
    if (!lp_feasible(r)) return std::nullopt;

    // Homogenize: {(t,x) : a.x - b t >= 0, t >= 0}. Rays with t>0 are the
    // vertices; any ray with t=0 is a recession direction (unbounded input).
    QMat rows;
    for (const Halfspace& h : r.cons) {
        QVec row(d + 1);
        row[0] = -h.offset;
        for (std::size_t j = 0; j < d; ++j) row[j + 1] = Rat(h.normal[j]);
        rows.push_back(row);
    }
    {
        QVec row(d + 1);
        row[0] = 1;
        rows.push_back(row);
    }
    std::vector<ZVec> rays;
    try {
        rays = extreme_rays(rows);
    } catch (const not_pointed_error&) {
        throw unbounded_error("from_halfspaces: unbounded solution set (lineality)");
    }
    std::vector<QVec> verts;
    for (const ZVec& ray : rays) {
        if (ray[0] == 0) throw unbounded_error("from_halfspaces: unbounded solution set");
        QVec v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = Rat(ray[j + 1]) / Rat(ray[0]);
        verts.push_back(v);
    }
    return from_vertices(verts);
}

inline Region polytope_region(const Polytope& p) {
    Region r(p.ambient);
    for (const Facet& f : p.facets) r.add(Halfspace(f.normal, f.offset));
    for (const Hyperplane& e : p.aff) r.add_equality(e);
    return r;
}

inline std::vector<Halfspace> halfspaces_of(const Polytope& p) {
    return polytope_region(p).cons;
}

inline Polytope translate(const Polytope& p, const QVec& t) {
    Polytope q = p;
    for (QVec& v : q.verts) v = v + t;
    for (Facet& f : q.facets) f.offset += dot(f.normal, t);
    for (Hyperplane& e : q.aff) e.offset += dot(e.normal, t);
    return q;  // lex vertex order and facet order are translation-invariant
}

inline Polytope dilate(const Polytope& p, const Rat& c) {
    if (c < 0) throw std::invalid_argument("dilate: negative factor");
    if (c == 0) return from_vertices({QVec(p.ambient)});
    Polytope q = p;
    for (QVec& v : q.verts) v = c * v;
    for (Facet& f : q.facets) f.offset *= c;
    for (Hyperplane& e : q.aff) e.offset *= c;
    return q;
}

// y = U x + t with U unimodular and t integral: a lattice-preserving affine
// map. The structure is rebuilt from the mapped vertices.
inline Polytope unimodular_image(const Polytope& p, const ZMat& u, const ZVec& t) {
    Int dt = det(u);
    if (dt != 1 && dt != -1) throw std::invalid_argument("unimodular_image: |det| != 1");
    std::vector<QVec> verts;
    verts.reserve(p.verts.size());
    for (const QVec& v : p.verts) {
        QVec y(p.ambient);
        for (std::size_t i = 0; i < p.ambient; ++i) {
            Rat s = Rat(t[i]);
            for (std::size_t j = 0; j < p.ambient; ++j) s += Rat(u[i][j]) * v[j];
            y[i] = s;
        }
        verts.push_back(y);
    }
    return from_vertices(verts);
}

// Lattice length of a rational segment: Euclidean length divided by the
// length of the primitive integer vector in the same direction. Rational.
inline Rat lattice_length(const QVec& a, const QVec& b) {
    QVec diff = b - a;
    if (is_zero(diff)) return Rat(0);
    ZVec prim = scale_to_primitive(diff);
    for (std::size_t i = 0; i < diff.size(); ++i)
        if (prim[i] != 0) return diff[i] / Rat(prim[i]);
    return Rat(0);
}

// E(P): minimum lattice edge length. Requires dim >= 1.
inline Rat min_edge_length(const Polytope& p) {
    if (p.edges.empty()) throw std::invalid_argument("min_edge_length: polytope has no edges");
    Rat best;
    bool first = true;
    for (auto [i, j] : p.edges) {
        Rat l = lattice_length(p.verts[i], p.verts[j]);
        if (l < 0) l = -l;
        if (first || l < best) {
            best = l;
            first = false;
        }
    }
    return best;
}

// Algebraic width over facet fi: max over vertices of normal.x - offset,
// with the facet's primitive integer normal. This is the exact stand-in for
// Euclidean width (which would need square roots).
inline Rat alg_width(const Polytope& p, std::size_t fi) {
    const Facet& f = p.facets.at(fi);
    Rat best = 0;
    for (const QVec& v : p.verts) {
        Rat h = dot(f.normal, v) - f.offset;
        if (h > best) best = h;
    }
    return best;
}

// {x in P : height over facet fi <= eps}.
inline Polytope facet_layer(const Polytope& p, std::size_t fi, const Rat& eps) {
    if (eps < 0) throw std::invalid_argument("facet_layer: negative thickness");
    const Facet& f = p.facets.at(fi);
    std::vector<Halfspace> hs = halfspaces_of(p);
    hs.emplace_back(-f.normal, -(f.offset + eps));
    auto layer = from_halfspaces(hs, p.aff);
    if (!layer) throw std::logic_error("facet_layer: empty layer");
    return *layer;
}

// Facet indices strictly violated by w (the facets one can "see" from w).
inline std::vector<std::size_t> visible_facets(const Polytope& p, const QVec& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.facets.size(); ++i)
        if (dot(p.facets[i].normal, w) < p.facets[i].offset) out.push_back(i);
    return out;
}

inline std::pair<QVec, QVec> bounding_box(const Polytope& p) {
    QVec lo = p.verts[0], hi = p.verts[0];
    for (const QVec& v : p.verts)
        for (std::size_t i = 0; i < p.ambient; ++i) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    return {lo, hi};
}

inline bool is_lattice_polytope(const Polytope& p) {
    return std::all_of(p.verts.begin(), p.verts.end(), [](const QVec& v) { return is_integral(v); });
}

// Pulling triangulation from the lex-least vertex, recursing into facets.
// Returns simplices as (dim+1)-tuples of vertex coordinates.
inline std::vector<std::vector<QVec>> triangulate(const Polytope& p) {
    if (p.dim == 0) return {{p.verts[0]}};
    if (p.verts.size() == p.dim + 1) return {p.verts};
    std::vector<std::vector<QVec>> out;
    const QVec& apex = p.verts[0];
    for (const Facet& f : p.facets) {
        if (std::binary_search(f.verts.begin(), f.verts.end(), std::size_t(0))) continue;
        std::vector<QVec> fverts;
        for (std::size_t vi : f.verts) fverts.push_back(p.verts[vi]);
        Polytope fp = from_vertices(fverts);
        for (std::vector<QVec> s : triangulate(fp)) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

// Euclidean volume; 0 by convention for lower-dimensional polytopes (the
// dim field is the flag for that case).
inline Rat volume(const Polytope& p) {
    if (!p.full_dim()) return Rat(0);
    Rat total = 0;
    for (const auto& s : triangulate(p)) {
        QMat m;
        for (std::size_t i = 1; i < s.size(); ++i) m.push_back(s[i] - s[0]);
        Rat dv = det(m);
        total += dv < 0 ? -dv : dv;
    }
    Int f = 1;
    for (std::size_t i = 2; i <= p.ambient; ++i) f *= Int(i);
    return total / Rat(f);
}

inline bool is_simple(const Polytope& p) {
    if (p.dim == 0) return true;
    std::vector<std::size_t> deg(p.verts.size(), 0);
    for (auto [i, j] : p.edges) {
        ++deg[i];
        ++deg[j];
    }
    return std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == p.dim; });
}

inline bool is_unimodular_simplex(const Polytope& p) {
    if (!p.full_dim() || p.verts.size() != p.ambient + 1 || !is_lattice_polytope(p)) return false;
    QMat m;
    for (std::size_t i = 1; i < p.verts.size(); ++i) m.push_back(p.verts[i] - p.verts[0]);
    Rat dv = det(m);
    return dv == 1 || dv == -1;
}

// Smooth = lattice, simple, and at each vertex the primitive edge directions
// form a basis of Z^d. Full-dimensional polytopes only.
inline bool is_smooth(const Polytope& p) {
    if (!p.full_dim()) throw std::invalid_argument("is_smooth: lower-dimensional polytope");
    if (!is_lattice_polytope(p) || !is_simple(p)) return false;
    for (std::size_t v = 0; v < p.verts.size(); ++v) {
        ZMat dirs;
        for (auto [i, j] : p.edges) {
            if (i != v && j != v) continue;
            std::size_t o = i == v ? j : i;
            dirs.push_back(scale_to_primitive(p.verts[o] - p.verts[v]));
        }
        Int dv = det(dirs);
        if (dv != 1 && dv != -1) return false;
    }
    return true;
}

// Primitive directions of the edges incident to vertex vi, canonical order.
inline std::vector<ZVec> vertex_edge_dirs(const Polytope& p, std::size_t vi) {
    std::vector<ZVec> dirs;
    for (auto [i, j] : p.edges) {
        if (i != vi && j != vi) continue;
        std::size_t o = i == vi ? j : i;
        dirs.push_back(scale_to_primitive(p.verts[o] - p.verts[vi]));
    }
    std::sort(dirs.begin(), dirs.end());
    return dirs;
}

}  // namespace latnorm
