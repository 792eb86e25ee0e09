#pragma once

// Fourier-Motzkin elimination. Projects a conjunction of halfspaces onto the
// coordinate subspace with one axis removed; sound and complete over Q, with
// strictness propagating through combinations. Intermediate blowup is tamed
// by Region's per-direction canonicalization.

#include "latnorm/region.hpp"

namespace latnorm {

// Eliminates coordinate `axis`; the result lives in dim-1 variables with the
// remaining coordinates keeping their relative order.
inline Region fourier_motzkin_project(const Region& r, std::size_t axis) {
    if (axis >= r.dim) throw std::invalid_argument("fourier_motzkin_project: axis out of range");
    Region out(r.dim - 1);
    if (r.trivially_empty) {
        out.trivially_empty = true;
        return out;
    }
    auto drop_axis = [&](const ZVec& n) {
        ZVec m(r.dim - 1);
        for (std::size_t j = 0, k = 0; j < r.dim; ++j)
            if (j != axis) m[k++] = n[j];
        return m;
    };
    std::vector<const Halfspace*> lowers, uppers;
    for (const Halfspace& h : r.cons) {
        if (h.normal[axis] > 0)
            lowers.push_back(&h);  // bounds the axis from below
        else if (h.normal[axis] < 0)
            uppers.push_back(&h);
        else
            out.add(Halfspace(drop_axis(h.normal), h.offset, h.strict));
    }
    for (const Halfspace* l : lowers)
        for (const Halfspace* u : uppers) {
            Int p = l->normal[axis], q = -u->normal[axis];
            ZVec n = q * l->normal + p * u->normal;
            Rat b = Rat(q) * l->offset + Rat(p) * u->offset;
            out.add(Halfspace(drop_axis(n), b, l->strict || u->strict));
        }
    return out;
}

}  // namespace latnorm
