#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <optional>
#include <random>

#include "latnorm/intlinalg.hpp"
#include "latnorm/lp.hpp"
#include "latnorm/region.hpp"

using namespace latnorm;

// ---------------------------------------------------------------------------
// Oracles, written against the definitions rather than the implementation.
// ---------------------------------------------------------------------------

namespace {

bool in_interval(const Rat& r, const Rat& lo, bool olo, const Rat& hi, bool ohi) {
    return (olo ? r > lo : r >= lo) && (ohi ? r < hi : r <= hi);
}

// Minimal-denominator rational in an interval by brute force; ties among
// integers resolve to the one of smallest absolute value (0 when admissible).
std::optional<Rat> simplest_oracle(const Rat& lo, bool olo, const Rat& hi, bool ohi) {
    for (Int q = 1; q <= 64; ++q) {
        std::optional<Rat> best;
        for (Int p = floor_rat(lo * q) - 1; p <= ceil_rat(hi * q) + 1; ++p) {
            Rat r = Rat(p, q);
            if (den(r) != q) continue;  // canonical representative belongs to a smaller q
            if (!in_interval(r, lo, olo, hi, ohi)) continue;
            Int a = p < 0 ? Int(-p) : p;
            Int b = best ? (num(*best) < 0 ? Int(-num(*best)) : num(*best)) : Int(0);
            if (!best || a < b) best = r;
        }
        if (best) return best;
    }
    return std::nullopt;
}

// Membership of an integer row vector in the row lattice of an upper-echelon
// integer matrix, by back-substitution with integrality checks.
bool in_row_lattice(const ZMat& h, const std::vector<std::size_t>& pivots, ZVec v) {
    for (std::size_t r = 0; r < h.size(); ++r) {
        const Int& piv = h[r][pivots[r]];
        REQUIRE(piv > 0);
        Int q = floor_div(v[pivots[r]], piv);
        if (v[pivots[r]] != q * piv) return false;
        v = v - q * h[r];
    }
    return is_zero(v);
}

ZMat random_zmat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lim) {
    std::uniform_int_distribution<long> e(-lim, lim);
    ZMat m;
    for (std::size_t i = 0; i < rows; ++i) {
        ZVec v(cols);
        for (std::size_t j = 0; j < cols; ++j) v[j] = e(rng);
        m.push_back(v);
    }
    return m;
}

Int gcd_of_minors(const ZMat& m, std::size_t k) {
    // gcd of all k x k minors; zero when none are nonzero
    std::vector<std::size_t> ri(m.size()), ci(m[0].size());
    Int g = 0;
    std::vector<std::size_t> rs, cs;
    std::function<void(std::size_t, std::size_t)> pick_cols = [&](std::size_t start,
                                                                  std::size_t left) {
        if (left == 0) {
            ZMat sub;
            for (std::size_t r : rs) {
                ZVec row(k);
                for (std::size_t j = 0; j < k; ++j) row[j] = m[r][cs[j]];
                sub.push_back(row);
            }
            Int d = det(sub);
            g = boost::multiprecision::gcd(g, d < 0 ? Int(-d) : d);
            return;
        }
        for (std::size_t c = start; c + left <= m[0].size(); ++c) {
            cs.push_back(c);
            pick_cols(c + 1, left - 1);
            cs.pop_back();
        }
    };
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start,
                                                                  std::size_t left) {
        if (left == 0) {
            pick_cols(0, k);
            return;
        }
        for (std::size_t r = start; r + left <= m.size(); ++r) {
            rs.push_back(r);
            pick_rows(r + 1, left - 1);
            rs.pop_back();
        }
    };
    pick_rows(0, k);
    return g;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("rational parsing and formatting", "[exactnum]") {
    CHECK(rat_str(Rat(3)) == "3");
    CHECK(rat_str(Rat(-5, 10)) == "-1/2");
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-6/4") == Rat(-3, 2));
    CHECK(parse_rat("2/4") == Rat(1, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), format_error);
    CHECK_THROWS_AS(parse_rat("abc"), format_error);
    CHECK_THROWS_AS(parse_rat(""), format_error);
    CHECK_THROWS_AS(parse_rat("1.5"), format_error);
}

TEST_CASE("floor and ceiling of rationals", "[exactnum]") {
    CHECK(floor_rat(Rat(7, 2)) == 3);
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(floor_rat(Rat(4)) == 4);
    CHECK(ceil_rat(Rat(7, 2)) == 4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(ceil_rat(Rat(-4)) == -4);
}

TEST_CASE("simplest rational in an interval", "[exactnum]") {
    CHECK(simplest_between(Rat(1, 3), false, Rat(1, 2), false) == Rat(1, 2));
    CHECK(simplest_between(Rat(1, 3), true, Rat(1, 2), true) == Rat(2, 5));
    CHECK(simplest_between(Rat(0), true, Rat(1), true) == Rat(1, 2));
    CHECK(simplest_between(Rat(13, 17), true, Rat(14, 17), true) == Rat(4, 5));
    CHECK(simplest_between(Rat(11, 5), false, Rat(37, 10), false) == Rat(3));
    CHECK(simplest_between(Rat(-37, 10), false, Rat(-11, 5), false) == Rat(-3));
    CHECK(simplest_between(Rat(2), true, Rat(3), false) == Rat(3));

    std::mt19937_64 rng(20260815);
    std::uniform_int_distribution<long> nu(-60, 60), de(1, 12);
    int verified = 0;
    for (int t = 0; t < 400; ++t) {
        Rat a(Int(nu(rng)), Int(de(rng))), b(Int(nu(rng)), Int(de(rng)));
        if (a > b) std::swap(a, b);
        bool olo = rng() & 1, ohi = rng() & 1;
        if (a == b && (olo || ohi)) continue;
        Rat got = simplest_between(a, olo, b, ohi);
        REQUIRE(in_interval(got, a, olo, b, ohi));
        auto want = simplest_oracle(a, olo, b, ohi);
        REQUIRE(want.has_value());
        CHECK(got == *want);
        ++verified;
    }
    CHECK(verified > 300);
}

TEST_CASE("vector content and primitive part", "[exactnum]") {
    CHECK(content(ZVec{4, -6, 8}) == 2);
    CHECK(primitive_part(ZVec{-4, -6}) == (ZVec{-2, -3}));
    CHECK(primitive_part(ZVec{0, 5, 0}) == (ZVec{0, 1, 0}));
    CHECK(scale_to_primitive(QVec(std::vector<Rat>{Rat(1, 2), Rat(3, 4)})) == (ZVec{2, 3}));
}

TEST_CASE("hermite form: known instance", "[exactnum]") {
    ZMat m = {ZVec{2, 4}, ZVec{3, 5}};
    HnfResult r = hnf(m);
    CHECK(r.h == (ZMat{ZVec{1, 1}, ZVec{0, 2}}));
    CHECK(mat_mul(r.u, m) == r.h);
    Int du = det(r.u);
    CHECK((du == 1 || du == -1));
}

TEST_CASE("hermite form: random lattices", "[exactnum]") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
        ZMat m = random_zmat(rng, rows, cols, 5);
        HnfResult r = hnf(m);
        CHECK(mat_mul(r.u, m) == r.h);
        Int du = det(r.u);
        CHECK((du == 1 || du == -1));
        // echelon shape with positive pivots reduced above
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            const Int& piv = r.h[i][r.pivot_cols[i]];
            REQUIRE(piv > 0);
            if (i > 0) CHECK(r.pivot_cols[i] > r.pivot_cols[i - 1]);
            for (std::size_t j = 0; j < i; ++j) {
                CHECK(r.h[j][r.pivot_cols[i]] >= 0);
                CHECK(r.h[j][r.pivot_cols[i]] < piv);
            }
        }
        for (std::size_t i = r.pivot_cols.size(); i < r.h.size(); ++i) CHECK(is_zero(r.h[i]));
        // row lattices coincide: generators map into each other
        // row lattices coincide: h = u m gives one inclusion, this the other
        ZMat basis(r.h.begin(), r.h.begin() + r.pivot_cols.size());
        for (const ZVec& row : m) CHECK(in_row_lattice(basis, r.pivot_cols, row));
    }
}

TEST_CASE("smith form invariants", "[exactnum]") {
    SECTION("identity and diagonal") {
        CHECK(invariant_factors(identity_zmat(3)) == std::vector<Int>{1, 1, 1});
        CHECK(invariant_factors(ZMat{ZVec{2, 0}, ZVec{0, 3}}) == std::vector<Int>{1, 6});
    }
    SECTION("random matrices agree with minor gcds") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 30; ++t) {
            ZMat m = random_zmat(rng, 3, 3, 5);
            SnfResult r = snf(m);
            CHECK(mat_mul(mat_mul(r.u, m), r.v) == r.s);
            Int du = det(r.u), dv = det(r.v);
            CHECK((du == 1 || du == -1));
            CHECK((dv == 1 || dv == -1));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    if (i != j) CHECK(r.s[i][j] == 0);
            const std::vector<Int>& f = r.invariant_factors;
            for (std::size_t i = 0; i + 1 < f.size(); ++i) {
                CHECK(f[i] >= 0);
                if (f[i] != 0) CHECK(f[i + 1] % f[i] == 0);
            }
            // d_1...d_k equals the gcd of k x k minors
            Int acc = 1;
            for (std::size_t k = 1; k <= f.size(); ++k) {
                acc *= f[k - 1];
                CHECK(acc == gcd_of_minors(m, k));
                if (acc == 0) break;
            }
        }
    }
}

TEST_CASE("direct summand detection", "[exactnum]") {
    CHECK(is_direct_summand(ZMat{ZVec{2, 1}, ZVec{1, 1}}));
    CHECK_FALSE(is_direct_summand(ZMat{ZVec{1, 0}, ZVec{0, 2}}));
    CHECK(is_direct_summand(ZMat{ZVec{1, 0, 0}, ZVec{0, 1, 0}}));
    CHECK_FALSE(is_direct_summand(ZMat{ZVec{1, 1, 0}, ZVec{1, -1, 0}}));
}

TEST_CASE("lattice saturation", "[exactnum]") {
    ZMat sat = saturate_lattice(ZMat{ZVec{2, 0}, ZVec{0, 3}});
    REQUIRE(sat.size() == 2);
    Int d = det(sat);
    CHECK((d == 1 || d == -1));
    // saturating the span of (1,1,0) and (1,-1,0) recovers the full plane z=0
    ZMat sat2 = saturate_lattice(ZMat{ZVec{1, 1, 0}, ZVec{1, -1, 0}});
    REQUIRE(sat2.size() == 2);
    auto c = span_coordinates(sat2, QVec{1, 0, 0});
    REQUIRE(c.has_value());
    CHECK(is_integral(*c));
}

TEST_CASE("span coordinates", "[exactnum]") {
    ZMat basis = {ZVec{1, 2, 0}, ZVec{0, 1, 1}};
    auto c = span_coordinates(basis, QVec{1, 3, 1});
    REQUIRE(c.has_value());
    CHECK(*c == (QVec{1, 1}));
    CHECK_FALSE(span_coordinates(basis, QVec{0, 0, 1}).has_value());
}

TEST_CASE("linear programs: pinned instances", "[exactnum]") {
    SECTION("bounded maximum") {
        std::vector<LinCon> cons = {
            {QVec{1, 0}, Rel::LE, Rat(3)},
            {QVec{0, 1}, Rel::LE, Rat(2)},
            {QVec{1, 0}, Rel::GE, Rat(0)},
            {QVec{0, 1}, Rel::GE, Rat(0)},
        };
        LpResult r = lp_solve(2, cons, QVec{1, 1}, true);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == Rat(5));
        CHECK(r.x == (QVec{3, 2}));
    }
    SECTION("equality constraints and negative optimum") {
        std::vector<LinCon> cons = {
            {QVec{1, 1}, Rel::EQ, Rat(2)},
            {QVec{1, -1}, Rel::GE, Rat(-1)},
            {QVec{1, 0}, Rel::GE, Rat(0)},
            {QVec{0, 1}, Rel::GE, Rat(0)},
        };
        LpResult r = lp_solve(2, cons, QVec{1, -1}, false);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == Rat(-1));
        CHECK(dot(QVec{1, 1}, r.x) == Rat(2));
    }
    SECTION("rational data") {
        std::vector<LinCon> cons = {{QVec(std::vector<Rat>{Rat(3)}), Rel::LE, Rat(2)}};
        LpResult r = lp_solve(1, cons, QVec{1}, true);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == Rat(2, 3));
    }
    SECTION("infeasible") {
        std::vector<LinCon> cons = {{QVec{1}, Rel::GE, Rat(1)}, {QVec{1}, Rel::LE, Rat(0)}};
        CHECK(lp_solve(1, cons, QVec{1}, true).status == LpStatus::Infeasible);
    }
    SECTION("unbounded") {
        std::vector<LinCon> cons = {{QVec{1}, Rel::GE, Rat(0)}};
        CHECK(lp_solve(1, cons, QVec{1}, true).status == LpStatus::Unbounded);
    }
    SECTION("redundant rows are harmless") {
        std::vector<LinCon> cons = {
            {QVec{1, 1}, Rel::EQ, Rat(2)},
            {QVec{2, 2}, Rel::EQ, Rat(4)},
            {QVec{1, 0}, Rel::GE, Rat(0)},
            {QVec{0, 1}, Rel::GE, Rat(0)},
        };
        LpResult r = lp_solve(2, cons, QVec{1, 0}, true);
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == Rat(2));
    }
}

TEST_CASE("linear programs: random feasibility cross-check", "[exactnum]") {
    // every reported optimum satisfies its constraints; maximizers dominate a
    // sample of feasible points
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> e(-4, 4);
    int optima = 0;
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 2 + rng() % 2;
        std::vector<LinCon> cons;
        for (std::size_t i = 0; i < n; ++i) {  // box keeps things bounded
            QVec lo(n), hi(n);
            lo[i] = 1;
            hi[i] = 1;
            cons.push_back({lo, Rel::GE, Rat(-3)});
            cons.push_back({hi, Rel::LE, Rat(3)});
        }
        for (int extra = 0; extra < 3; ++extra) {
            QVec a(n);
            bool nz = false;
            for (std::size_t j = 0; j < n; ++j) {
                a[j] = e(rng);
                nz = nz || a[j] != 0;
            }
            if (!nz) continue;
            cons.push_back({a, rng() & 1 ? Rel::GE : Rel::LE, Rat(e(rng))});
        }
        QVec obj(n);
        for (std::size_t j = 0; j < n; ++j) obj[j] = e(rng);
        LpResult r = lp_solve(n, cons, obj, true);
        if (r.status != LpStatus::Optimal) continue;
        ++optima;
        CHECK(dot(obj, r.x) == r.value);
        for (const LinCon& c : cons) {
            Rat v = dot(c.a, r.x);
            if (c.rel == Rel::GE) CHECK(v >= c.b);
            if (c.rel == Rel::LE) CHECK(v <= c.b);
            if (c.rel == Rel::EQ) CHECK(v == c.b);
        }
        // random feasible candidates never beat the optimum
        for (int s = 0; s < 20; ++s) {
            QVec x(n);
            for (std::size_t j = 0; j < n; ++j) x[j] = Rat(Int(e(rng)), 2);
            bool feas = true;
            for (const LinCon& c : cons) {
                Rat v = dot(c.a, x);
                feas = feas && (c.rel == Rel::GE ? v >= c.b : c.rel == Rel::LE ? v <= c.b : v == c.b);
            }
            if (feas) CHECK(dot(obj, x) <= r.value);
        }
    }
    CHECK(optima >= 30);
}

TEST_CASE("regions with strict constraints", "[exactnum]") {
    SECTION("strict slab has interior point") {
        Region r(1);
        r.add(Halfspace(ZVec{1}, Rat(0), true));
        r.add(Halfspace(ZVec{-1}, Rat(-1), true));
        auto w = lp_feasible(r);
        REQUIRE(w.has_value());
        CHECK((*w)[0] > 0);
        CHECK((*w)[0] < 1);
    }
    SECTION("contradictory strict pair is empty") {
        Region r(1);
        r.add(Halfspace(ZVec{1}, Rat(0), true));
        r.add(Halfspace(ZVec{-1}, Rat(0), true));
        CHECK_FALSE(lp_feasible(r).has_value());
    }
    SECTION("tightest offset wins per direction") {
        Region r(2);
        r.add(Halfspace(ZVec{1, 0}, Rat(0), false));
        r.add(Halfspace(ZVec{2, 0}, Rat(2), false));  // x >= 1 dominates x >= 0
        REQUIRE(r.cons.size() == 1);
        CHECK(r.cons[0].offset == Rat(1));
    }
}
