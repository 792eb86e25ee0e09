#pragma once

// The affine lattice spanned by the lattice points of a polytope: basepoint
// plus the group generated by their pairwise differences. This is the lattice
// over which normality (as opposed to integral closedness) is decided, and
// its invariant factors decide the direct-summand question.

#include "latnorm/enumerate.hpp"

namespace latnorm {

struct no_lattice_points_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AffineLattice {
    ZVec basepoint;                     // lex-least lattice point
    ZMat basis;                         // Hermite basis of the difference group
    std::vector<Int> invariants;        // Smith invariant factors of the basis

    std::size_t rank() const { return basis.size(); }

    bool is_direct_summand() const {
        return std::all_of(invariants.begin(), invariants.end(),
                           [](const Int& f) { return f == 1; });
    }

    // Integer coordinates of z in (basepoint + lattice), when z belongs.
    std::optional<ZVec> coords(const ZVec& z) const {
        QVec diff = to_qvec(z) - to_qvec(basepoint);
        auto lam = span_coordinates(basis, diff);
        if (!lam || !is_integral(*lam)) return std::nullopt;
        return to_zvec(*lam);
    }

    ZVec from_coords(const ZVec& lam) const {
        ZVec z = basepoint;
        for (std::size_t i = 0; i < basis.size(); ++i) z = z + lam[i] * basis[i];
        return z;
    }
};

inline AffineLattice affine_lattice_of_points(const std::vector<ZVec>& pts) {
    if (pts.empty()) throw no_lattice_points_error("affine lattice of an empty point set");
    AffineLattice l;
    l.basepoint = *std::min_element(pts.begin(), pts.end());
    ZMat diffs;
    for (const ZVec& p : pts)
        if (!(p == l.basepoint)) diffs.push_back(p - l.basepoint);
    if (diffs.empty()) {
        return l;  // rank 0, trivially a summand
    }
    l.basis = lattice_basis(diffs);
    l.invariants = invariant_factors(l.basis);
    return l;
}

inline AffineLattice affine_lattice(const Polytope& p) {
    return affine_lattice_of_points(lattice_points(p));
}

}  // namespace latnorm
