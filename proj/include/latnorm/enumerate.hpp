#pragma once

// Lattice point enumeration for rational polytopes: a Fourier-Motzkin
// projection cascade computed once, then depth-first integer stepping inside
// the exact per-level intervals. Supports a rational shift, i.e. enumerates
// P intersected with (shift + Z^d), in lexicographic order.

#include "latnorm/fm.hpp"
#include "latnorm/polytope.hpp"

namespace latnorm {

inline std::vector<QVec> enumerate_shifted_points(const Polytope& p, const QVec& shift) {
    const std::size_t d = p.ambient;
    if (shift.size() != d) throw std::invalid_argument("enumerate: shift arity mismatch");
    // Constraints on the integer offsets y with x = shift + y.
    Region full(d);
    for (const Halfspace& h : halfspaces_of(p))
        full.add(Halfspace(h.normal, h.offset - dot(h.normal, shift), h.strict));
    std::vector<Region> cascade(d + 1, Region(0));
    cascade[d] = full;
    for (std::size_t j = d; j >= 1; --j) {
        if (j == 1) break;
        cascade[j - 1] = fourier_motzkin_project(cascade[j], j - 1);
    }
    std::vector<QVec> out;
    if (full.trivially_empty) return out;
    for (std::size_t j = 1; j < d; ++j)
        if (cascade[j].trivially_empty) return out;

    std::vector<Int> y(d);
    auto step = [&](auto&& self, std::size_t level) -> void {
        const Region& reg = cascade[level];
        std::optional<Rat> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const Halfspace& h : reg.cons) {
            const Int& c = h.normal[level - 1];
            if (c == 0) continue;  // holds by construction of the cascade
            Rat rest = 0;
            for (std::size_t i = 0; i + 1 < level; ++i) rest += Rat(h.normal[i]) * Rat(y[i]);
            Rat bound = (h.offset - rest) / Rat(c);
            if (c > 0) {
                if (!lo || bound > *lo) {
                    lo = bound;
                    lo_strict = h.strict;
                } else if (bound == *lo)
                    lo_strict |= h.strict;
            } else {
                if (!hi || bound < *hi) {
                    hi = bound;
                    hi_strict = h.strict;
                } else if (bound == *hi)
                    hi_strict |= h.strict;
            }
        }
        if (!lo || !hi) throw std::logic_error("enumerate: unbounded level interval");
        Int a = detail::lowest_int_geq(*lo, lo_strict);
        Int b = detail::highest_int_leq(*hi, hi_strict);
        for (Int n = a; n <= b; ++n) {
            y[level - 1] = n;
            if (level == d) {
                QVec pt(d);
                for (std::size_t i = 0; i < d; ++i) pt[i] = shift[i] + Rat(y[i]);
                out.push_back(pt);
            } else {
                self(self, level + 1);
            }
        }
    };
    step(step, 1);
    return out;  // lexicographic by construction
}

// P intersected with Z^d, as integer vectors, lexicographic.
inline std::vector<ZVec> lattice_points(const Polytope& p) {
    std::vector<ZVec> out;
    for (const QVec& q : enumerate_shifted_points(p, QVec(p.ambient))) out.push_back(to_zvec(q));
    return out;
}

}  // namespace latnorm
