#pragma once

// Halfspaces and conjunction regions. A Region is a finite conjunction of
// (possibly strict) rational halfspaces; it is the working object of the
// cover search, so add() keeps it canonical on the fly: primitive normals,
// one constraint per direction (tightest offset wins, strict beats non-strict
// at equal offset), plus a cheap two-sided-interval infeasibility test for
// opposite normals.

#include "latnorm/lp.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace latnorm {

// {x : normal.x >= offset}, or > when strict. Normal is integral; halfspaces
// are canonicalized to primitive normals on construction.
struct Halfspace {
    ZVec normal;
    Rat offset;
    bool strict = false;

    Halfspace() = default;
    Halfspace(ZVec n, Rat b, bool s = false) : normal(std::move(n)), offset(std::move(b)), strict(s) {
        Int g = content(normal);
        if (g > 1) {
            normal = primitive_part(normal);
            offset /= Rat(g);
        }
    }

    bool satisfied_by(const QVec& x) const {
        Rat v = dot(normal, x);
        return strict ? v > offset : v >= offset;
    }

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.offset == b.offset && a.strict == b.strict;
    }
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        if (!(a.normal == b.normal)) return a.normal < b.normal;
        if (a.offset != b.offset) return a.offset < b.offset;
        return a.strict < b.strict;
    }
};

// {x : normal.x == offset}; canonical form has a primitive normal whose first
// nonzero entry is positive.
struct Hyperplane {
    ZVec normal;
    Rat offset;

    Hyperplane() = default;
    Hyperplane(ZVec n, Rat b) : normal(std::move(n)), offset(std::move(b)) {
        Int g = content(normal);
        if (g > 1) {
            normal = primitive_part(normal);
            offset /= Rat(g);
        }
        for (const Int& x : normal.c) {
            if (x == 0) continue;
            if (x < 0) {
                normal = -normal;
                offset = -offset;
            }
            break;
        }
    }

    bool contains(const QVec& x) const { return dot(normal, x) == offset; }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        if (!(a.normal == b.normal)) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

struct Region {
    std::size_t dim = 0;
    std::vector<Halfspace> cons;
    bool trivially_empty = false;  // set when a contradiction is detected syntactically

    explicit Region(std::size_t d = 0) : dim(d) {}

    // Conjoins h, merging with any existing constraint in the same direction.
    void add(const Halfspace& h) {
        if (h.normal.size() != dim) throw std::invalid_argument("Region::add: arity mismatch");
        if (is_zero(h.normal)) {
            if (h.offset > 0 || (h.strict && h.offset == 0)) trivially_empty = true;
            return;  // 0 >= nonpositive offset is vacuous
        }
        for (Halfspace& e : cons) {
            if (e.normal == h.normal) {
                if (h.offset > e.offset)
                    e = h;
                else if (h.offset == e.offset)
                    e.strict = e.strict || h.strict;
                check_opposite(e);
                return;
            }
        }
        cons.push_back(h);
        check_opposite(cons.back());
    }

    void add_equality(const Hyperplane& e) {
        add(Halfspace(e.normal, e.offset, false));
        add(Halfspace(-e.normal, -e.offset, false));
    }

    bool satisfied_by(const QVec& x) const {
        if (trivially_empty) return false;
        for (const Halfspace& h : cons)
            if (!h.satisfied_by(x)) return false;
        return true;
    }

    friend bool operator<(const Region& a, const Region& b) { return a.cons < b.cons; }

private:
    void check_opposite(const Halfspace& h) {
        ZVec neg = -h.normal;
        for (const Halfspace& e : cons) {
            if (!(e.normal == neg)) continue;
            // h: n.x >= b1, e: n.x <= -b2 combined interval [b1, -b2].
            if (h.offset > -e.offset ||
                (h.offset == -e.offset && (h.strict || e.strict)))
                trivially_empty = true;
            return;
        }
    }
};

// Strict-aware feasibility: returns a rational point satisfying every
// constraint (strict ones strictly) or nullopt. Unbounded regions are fine;
// only feasibility is decided.
inline std::optional<QVec> lp_feasible(const Region& r) {
    if (r.trivially_empty) return std::nullopt;
    bool any_strict = false;
    for (const Halfspace& h : r.cons) any_strict |= h.strict;
    std::size_t n = r.dim + (any_strict ? 1 : 0);
    std::vector<LinCon> cons;
    cons.reserve(r.cons.size() + 2);
    for (const Halfspace& h : r.cons) {
        LinCon c;
        c.a = QVec(n);
        for (std::size_t j = 0; j < r.dim; ++j) c.a[j] = Rat(h.normal[j]);
        if (h.strict) c.a[r.dim] = -1;  // n.x - t >= b
        c.rel = Rel::GE;
        c.b = h.offset;
        cons.push_back(std::move(c));
    }
    QVec obj(n);
    if (any_strict) {
        LinCon cap;
        cap.a = QVec(n);
        cap.a[r.dim] = 1;
        cap.rel = Rel::LE;
        cap.b = 1;
        cons.push_back(std::move(cap));
        LinCon nonneg;
        nonneg.a = QVec(n);
        nonneg.a[r.dim] = 1;
        nonneg.rel = Rel::GE;
        nonneg.b = 0;
        cons.push_back(std::move(nonneg));
        obj[r.dim] = 1;
    }
    LpResult res = lp_solve(n, cons, obj, /*maximize=*/true);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    if (any_strict && res.value <= 0) return std::nullopt;
    QVec x(r.dim);
    for (std::size_t j = 0; j < r.dim; ++j) x[j] = res.x[j];
    return x;
}

inline std::optional<QVec> lp_feasible(std::size_t dim, const std::vector<Halfspace>& hs) {
    Region r(dim);
    for (const Halfspace& h : hs) r.add(h);
    return lp_feasible(r);
}

// Rewrites a known feasible point of r into one with small numerators and
// denominators: per coordinate (in order), the remaining constraints induce a
// rational interval once the earlier coordinates are pinned, and we take the
// simplest rational in it. Deterministic.
inline QVec simplify_witness(const Region& r, QVec x) {
    for (std::size_t i = 0; i < r.dim; ++i) {
        std::optional<Rat> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const Halfspace& h : r.cons) {
            if (h.normal[i] == 0) continue;
            // With every other coordinate pinned at x, constraint h bounds
            // coordinate i by a single rational.
            Rat rest = 0;
            for (std::size_t j = 0; j < r.dim; ++j)
                if (j != i) rest += Rat(h.normal[j]) * x[j];
            Rat bound = (h.offset - rest) / Rat(h.normal[i]);
            if (h.normal[i] > 0) {
                if (!lo || bound > *lo) {
                    lo = bound;
                    lo_strict = h.strict;
                } else if (bound == *lo) {
                    lo_strict = lo_strict || h.strict;
                }
            } else {
                if (!hi || bound < *hi) {
                    hi = bound;
                    hi_strict = h.strict;
                } else if (bound == *hi) {
                    hi_strict = hi_strict || h.strict;
                }
            }
        }
        if (!lo && !hi) {
            x[i] = 0;
            continue;
        }
        if (lo && hi && (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict))))
            continue;  // cannot happen for a feasible x; keep the coordinate
        if (!lo) {
            Int top = detail::highest_int_leq(*hi, hi_strict);
            x[i] = Rat(top >= 0 ? Int(0) : top);
        } else if (!hi) {
            Int bot = detail::lowest_int_geq(*lo, lo_strict);
            x[i] = Rat(bot <= 0 ? Int(0) : bot);
        } else {
            x[i] = simplest_between(*lo, lo_strict, *hi, hi_strict);
        }
    }
    return x;
}

}  // namespace latnorm
