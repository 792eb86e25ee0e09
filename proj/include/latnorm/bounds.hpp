#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "latnorm/lp.hpp"

namespace latnorm {

// Closed-form sufficient edge-length threshold for covering c-fold dilates,
// 2 <= c <= k, by lattice translates: (1/2) d^2 (d+1) k.
inline Rat cn_closed_bound(std::size_t d, const Rat& k) {
    if (d == 0) throw std::invalid_argument("cn_closed_bound: dimension must be positive");
    if (k < 2) throw std::invalid_argument("cn_closed_bound: k must be at least 2");
    return Rat(Int(d) * Int(d) * Int(d + 1), 2) * k;
}

// Edge-length threshold past which a lattice polytope is integrally closed.
inline Rat ic_bound(std::size_t d) {
    if (d == 0) throw std::invalid_argument("ic_bound: dimension must be positive");
    return Rat(2 * Int(d) * Int(d) * Int(d + 1));
}

// Sharper integral-closedness threshold valid for simplices.
inline Rat simplex_bound(std::size_t d) {
    if (d == 0) throw std::invalid_argument("simplex_bound: dimension must be positive");
    return Rat(Int(d) * Int(d + 1));
}

// Known lower bound for the d=1 covering threshold at parameter k.
inline Rat cn1_lower_bound(const Rat& k) {
    if (k < 2) throw std::invalid_argument("cn1_lower_bound: k must be at least 2");
    return (k - 2) / (2 * (k - 1));
}

struct BoundStep {
    std::size_t d = 0;
    Rat k;    // parameter the recursion sees at this dimension
    Rat bcn;  // boundary-layer threshold at this level
    Rat cn;   // full covering threshold at this level
};

struct RecursiveBound {
    Rat cn;
    Rat bcn;
    std::vector<BoundStep> steps;  // ascending in dimension, steps.front().d == 1
};

// Mutual recursion for covering thresholds:
//   cn(1, k)  = 1
//   bcn(d, k) = (d+1)/d * cn(d-1, k + (k-1)/d)
//   cn(d, k)  = max(k d (d+1), bcn(d, k))
inline RecursiveBound cn_recursive_bound(std::size_t d, const Rat& k) {
    if (d == 0) throw std::invalid_argument("cn_recursive_bound: dimension must be positive");
    if (k < 2) throw std::invalid_argument("cn_recursive_bound: k must be at least 2");
    std::vector<Rat> ks(d + 1);  // ks[i] = parameter passed to dimension i
    ks[d] = k;
    for (std::size_t i = d; i > 1; --i) ks[i - 1] = ks[i] + (ks[i] - 1) / Int(i);

    RecursiveBound out;
    out.steps.resize(d);
    out.steps[0] = {1, ks[1], Rat(1), Rat(1)};
    for (std::size_t i = 2; i <= d; ++i) {
        BoundStep st;
        st.d = i;
        st.k = ks[i];
        st.bcn = Rat(Int(i + 1), Int(i)) * out.steps[i - 2].cn;
        Rat kd = ks[i] * Int(i) * Int(i + 1);
        st.cn = st.bcn > kd ? st.bcn : kd;
        out.steps[i - 1] = st;
    }
    out.cn = out.steps[d - 1].cn;
    out.bcn = out.steps[d - 1].bcn;
    return out;
}

struct BoundRow {
    std::size_t d = 0;
    Rat k;
    Rat recursive_cn;
    Rat recursive_bcn;
    Rat closed;
};

struct BoundTable {
    std::vector<BoundRow> rows;
    std::vector<std::string> notes;
};

inline BoundTable bounds_table(std::size_t dmax, const std::vector<Rat>& ks) {
    if (dmax == 0) throw std::invalid_argument("bounds_table: dimension must be positive");
    BoundTable t;
    for (std::size_t d = 1; d <= dmax; ++d) {
        for (const Rat& k : ks) {
            RecursiveBound rb = cn_recursive_bound(d, k);
            t.rows.push_back({d, k, rb.cn, rb.bcn, cn_closed_bound(d, k)});
        }
    }
    t.notes = {
        "the d=1 threshold is at least (k-2)/(2(k-1)); the recursion pins cn(1,k)=1",
        "edges of lattice length >= 2d^2(d+1) force integral closedness",
        "for simplices the integral-closedness threshold improves to d(d+1)",
    };
    return t;
}

struct HeightGauge {
    Rat value;   // minimal squared distance from a supporting hyperplane to the
                 // farthest vertex of the unit simplex; equals 1/d
    QVec coeffs; // minimizing sorted coefficient vector (all entries 1/d)
};

// Exact linear program behind the distance gauge: among nonnegative sorted
// coefficient vectors with unit coordinate sum, minimize the largest entry.
inline HeightGauge height_gauge_exact(std::size_t d) {
    if (d == 0) throw std::invalid_argument("height_gauge_exact: dimension must be positive");
    std::vector<LinCon> cons;
    {
        QVec a(d);
        a[0] = 1;
        cons.push_back({a, Rel::GE, Rat(0)});  // a_1 >= 0
    }
    for (std::size_t i = 0; i + 1 < d; ++i) {
        QVec a(d);
        a[i] = -1;
        a[i + 1] = 1;
        cons.push_back({a, Rel::GE, Rat(0)});  // a_{i+1} >= a_i
    }
    {
        QVec a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = 1;
        cons.push_back({a, Rel::EQ, Rat(1)});
    }
    QVec obj(d);
    obj[d - 1] = 1;
    LpResult r = lp_solve(d, cons, obj, /*maximize=*/false);
    if (r.status != LpStatus::Optimal)
        throw std::logic_error("height_gauge_exact: gauge program must be solvable");
    return {r.value, r.x};
}

struct GaugeFalsifyReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;  // supporting hyperplanes beating the 1/d gauge (none exist)
    Rat min_sq;                    // smallest squared farthest-vertex distance observed
};

// Randomized cross-check of the gauge: for random supporting hyperplanes of the
// unit simplex, the squared distance to the farthest vertex never drops below
// 1/d.  Normals are small rationals cleared to integers, so every comparison
// fits comfortably in int64.
inline GaugeFalsifyReport height_gauge_falsify(std::size_t d, std::uint64_t trials,
                                               std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("height_gauge_falsify: dimension must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    GaugeFalsifyReport rep;
    rep.min_sq = Rat(0);
    bool have_min = false;
    std::vector<std::int64_t> a(d);
    while (rep.trials < trials) {
        std::int64_t lcm = 1;
        std::vector<std::pair<long, long>> raw(d);
        for (std::size_t i = 0; i < d; ++i) {
            raw[i] = {num(rng), den(rng)};
            lcm = std::lcm(lcm, static_cast<std::int64_t>(raw[i].second));
        }
        bool zero = true;
        for (std::size_t i = 0; i < d; ++i) {
            a[i] = raw[i].first * (lcm / raw[i].second);
            if (a[i] != 0) zero = false;
        }
        if (zero) continue;
        ++rep.trials;
        // vertex values of the hyperplane functional: 0 and the a_i
        std::int64_t lo = 0, hi = 0, aa = 0;
        for (std::size_t i = 0; i < d; ++i) {
            lo = std::min(lo, a[i]);
            hi = std::max(hi, a[i]);
            aa += a[i] * a[i];
        }
        // supporting offsets are the extreme values; either side puts the
        // farthest vertex across the full value range
        std::int64_t m = hi - lo;
        std::int64_t msq = m * m;
        if (static_cast<std::int64_t>(d) * msq < aa) ++rep.violations;
        Rat sq = Rat(Int(msq), Int(aa));
        if (!have_min || sq < rep.min_sq) {
            rep.min_sq = sq;
            have_min = true;
        }
    }
    return rep;
}

}  // namespace latnorm
