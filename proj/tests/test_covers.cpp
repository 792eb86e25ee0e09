#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "latnorm/bounds.hpp"
#include "latnorm/cn.hpp"
#include "latnorm/corner.hpp"
#include "latnorm/cover.hpp"
#include "latnorm/fixtures.hpp"
#include "latnorm/normality.hpp"

using namespace latnorm;

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

namespace {

struct Segment {
    Rat lo, hi;
};

// Exact one-dimensional cover decision by a sweep over the clipped pieces.
// Closed intervals chain through shared endpoints, so the union covers the
// target iff the sweep reaches the right end.
bool interval_union_covers(const Segment& target, std::vector<Segment> pieces) {
    for (Segment& s : pieces) {
        if (s.lo < target.lo) s.lo = target.lo;
        if (s.hi > target.hi) s.hi = target.hi;
    }
    pieces.erase(std::remove_if(pieces.begin(), pieces.end(),
                                [](const Segment& s) { return s.hi < s.lo; }),
                 pieces.end());
    std::sort(pieces.begin(), pieces.end(),
              [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    Rat cur = target.lo;
    for (const Segment& s : pieces) {
        if (s.lo > cur) return false;
        if (s.hi > cur) cur = s.hi;
    }
    return cur >= target.hi;
}

Polytope seg_poly(const Segment& s) {
    return from_vertices({QVec(std::vector<Rat>{s.lo}), QVec(std::vector<Rat>{s.hi})});
}

// Membership by facet arithmetic alone: every facet inequality (inner
// normals) and every affine-hull equation, evaluated on raw rationals.
bool facet_member(const Polytope& p, const QVec& x) {
    for (const Facet& f : p.facets)
        if (dot(f.normal, x) < f.offset) return false;
    for (const Hyperplane& h : p.aff)
        if (dot(h.normal, x) != h.offset) return false;
    return true;
}

Rat random_rat(std::mt19937_64& rng, long num_lo, long num_hi, long den_hi) {
    std::uniform_int_distribution<long> num(num_lo, num_hi), den(1, den_hi);
    return Rat(num(rng), den(rng));
}

}  // namespace

// ---------------------------------------------------------------------------

TEST_CASE("segment covers match the interval sweep", "[covers]") {
    std::mt19937_64 rng(211);
    int uncovered = 0;
    for (int t = 0; t < 50; ++t) {
        Segment target{random_rat(rng, -4, 2, 4), Rat(0)};
        target.hi = target.lo + random_rat(rng, 1, 12, 3);
        std::vector<Segment> pieces;
        std::size_t n = 1 + rng() % 5;
        for (std::size_t i = 0; i < n; ++i) {
            Segment s{random_rat(rng, -6, 6, 4), Rat(0)};
            s.hi = s.lo + random_rat(rng, 1, 10, 3);
            pieces.push_back(s);
        }
        std::vector<Polytope> piece_polys;
        for (const Segment& s : pieces) piece_polys.push_back(seg_poly(s));
        CoverReport rep = check_cover(seg_poly(target), piece_polys);
        bool expect = interval_union_covers(target, pieces);
        CHECK(rep.covered == expect);
        if (!expect) {
            ++uncovered;
            REQUIRE(rep.witness.has_value());
            const Rat& w = (*rep.witness)[0];
            CHECK(target.lo <= w);
            CHECK(w <= target.hi);
            for (const Segment& s : pieces) CHECK((w < s.lo || w > s.hi));
        }
    }
    CHECK(uncovered >= 5);  // the sampler must exercise both verdicts
}

TEST_CASE("positive cover verdicts survive grid sampling", "[covers]") {
    std::mt19937_64 rng(223);
    for (int t = 0; t < 12; ++t) {
        Polytope target = random_lattice_polytope(2, 4 + rng() % 3, 3, rng);
        // translated copies of the target at small shifts always cover it
        std::vector<Polytope> pieces{target, translate(target, QVec{1, 0}),
                                     translate(target, QVec(std::vector<Rat>{Rat(0), Rat(1, 2)})) };
        CoverReport rep = check_cover(target, pieces);
        REQUIRE(rep.covered);
        auto [lo, hi] = bounding_box(target);
        // every third-integer grid point of the target lies in some piece
        for (Int x3 = ceil_rat(lo[0] * 3); x3 <= floor_rat(hi[0] * 3); ++x3)
            for (Int y3 = ceil_rat(lo[1] * 3); y3 <= floor_rat(hi[1] * 3); ++y3) {
                QVec pt(std::vector<Rat>{Rat(x3, 3), Rat(y3, 3)});
                if (!target.contains(pt)) continue;
                bool inside = false;
                for (const Polytope& q : pieces) inside = inside || facet_member(q, pt);
                CHECK(inside);
            }
    }
}

TEST_CASE("negative verdicts carry verifiable witnesses", "[covers]") {
    // deliberately incomplete cover of a square
    Polytope target = cube(2, Rat(2));
    std::vector<Polytope> pieces{cube(2, Rat(1)), translate(cube(2, Rat(1)), QVec{1, 0})};
    CoverReport rep = check_cover(target, pieces);
    REQUIRE_FALSE(rep.covered);
    REQUIRE(rep.witness.has_value());
    CHECK(facet_member(target, *rep.witness));
    for (const Polytope& q : pieces) CHECK_FALSE(facet_member(q, *rep.witness));

    SECTION("no pieces at all") {
        CoverReport none = check_cover(target, {});
        REQUIRE_FALSE(none.covered);
        REQUIRE(none.witness.has_value());
        CHECK(facet_member(target, *none.witness));
    }
}

TEST_CASE("duplicate pieces are merged before branching", "[covers]") {
    Polytope seg = seg_poly({Rat(0), Rat(2)});
    std::vector<Polytope> pieces{seg, seg, translate(seg, QVec{0}), seg_poly({Rat(0), Rat(1)})};
    CoverReport rep = check_cover(seg, pieces);
    CHECK(rep.covered);
    CHECK(rep.pieces_used == 1);  // the full copy alone settles it
}

TEST_CASE("lower-dimensional targets are handled through their hull", "[covers]") {
    Polytope seg2d = from_vertices({QVec{0, 0}, QVec{2, 0}});
    std::vector<Polytope> pieces{cube(2, Rat(1)), translate(cube(2, Rat(1)), QVec{1, 0})};
    CHECK(check_cover(seg2d, pieces).covered);
    CoverReport gap = check_cover(seg2d, {cube(2, Rat(1))});
    REQUIRE_FALSE(gap.covered);
    CHECK((*gap.witness)[0] > 1);
    CHECK((*gap.witness)[1] == 0);
}

TEST_CASE("translate-cover family of a polytope", "[covers]") {
    Polytope tri = dilated_simplex(2, Rat(1));
    CnFamily fam = cn_family(tri, Rat(2));
    CHECK(fam.groups.size() == tri.verts.size());
    auto all = fam.all_translates();
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("unit triangle fails the translate cover at c = 2", "[covers]") {
    CoverReport rep = check_cn_at(unit_simplex(2), Rat(2));
    REQUIRE_FALSE(rep.covered);
    REQUIRE(rep.c.has_value());
    CHECK(*rep.c == 2);
    REQUIRE(rep.witness.has_value());
    const QVec& w = *rep.witness;
    // the uncovered pocket is the open middle triangle of 2P
    CHECK(w[0] + w[1] > 1);
    CHECK(w[0] < 1);
    CHECK(w[1] < 1);
}

TEST_CASE("dilated triangles pass the translate cover on the usual grid", "[covers]") {
    CnReport rep = check_cn(dilated_simplex(2, Rat(6)), Rat(3), {Rat(2), Rat(5, 2), Rat(3)});
    CHECK(rep.holds);
    REQUIRE(rep.per_c.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rep.per_c[i].covered);
        CHECK(*rep.per_c[i].c == rep.grid[i]);
        CHECK(rep.per_c[i].mode == "exact");
    }
    REQUIRE_FALSE(rep.notes.empty());
    CHECK(rep.notes.front().find("grid") != std::string::npos);

    SECTION("grid validation") {
        CHECK_THROWS_AS(check_cn(unit_simplex(2), Rat(3, 2), {Rat(3, 2)}), std::invalid_argument);
        CHECK_THROWS_AS(check_cn(unit_simplex(2), Rat(3), {Rat(7, 2)}), std::invalid_argument);
    }
}

TEST_CASE("failing grid value flips the family verdict", "[covers]") {
    CnReport rep = check_cn(unit_simplex(2), Rat(2), {Rat(2)});
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.per_c.size() == 1);
    CHECK_FALSE(rep.per_c[0].covered);
    CHECK(rep.per_c[0].witness.has_value());
}

TEST_CASE("verdicts and witnesses are identical across worker counts", "[covers]") {
    Polytope tri6 = dilated_simplex(2, Rat(6));
    Polytope uni = unit_simplex(2);
    for (unsigned w : {1u, 2u, 3u, 4u}) {
        CoverOptions o;
        o.workers = w;
        CoverReport base = check_cn_at(tri6, Rat(2));
        CoverReport rep = check_cn_at(tri6, Rat(2), o);
        CHECK(rep.covered == base.covered);
        CHECK(rep.regions_explored == base.regions_explored);
        CHECK(rep.pieces_used == base.pieces_used);

        CoverReport nbase = check_cn_at(uni, Rat(2));
        CoverReport nrep = check_cn_at(uni, Rat(2), o);
        REQUIRE(nrep.witness.has_value());
        CHECK(*nrep.witness == *nbase.witness);
        CHECK(nrep.regions_explored == nbase.regions_explored);
    }
}

TEST_CASE("verdicts are stable under piece shuffles", "[covers]") {
    std::mt19937_64 rng(227);
    Polytope target = cube(2, Rat(2));
    std::vector<Polytope> pieces;
    for (long x = 0; x <= 1; ++x)
        for (long y = 0; y <= 1; ++y) pieces.push_back(translate(cube(2, Rat(1)), QVec{x, y}));
    std::vector<Polytope> missing(pieces.begin(), pieces.end() - 1);
    for (int t = 0; t < 10; ++t) {
        std::shuffle(pieces.begin(), pieces.end(), rng);
        std::shuffle(missing.begin(), missing.end(), rng);
        CHECK(check_cover(target, pieces).covered);
        CoverReport rep = check_cover(target, missing);
        REQUIRE_FALSE(rep.covered);
        CHECK(facet_member(target, *rep.witness));
        for (const Polytope& q : missing) CHECK_FALSE(facet_member(q, *rep.witness));
    }
}

TEST_CASE("exhausting the region budget raises a resumable error", "[covers]") {
    CoverOptions o;
    o.budget = 3;
    try {
        check_cn_at(dilated_simplex(2, Rat(8)), Rat(2), o);
        FAIL("expected budget_exceeded_error");
    } catch (const budget_exceeded_error& e) {
        CHECK(e.partial.regions_explored <= 3);
        CHECK(std::string(e.what()).find("budget") != std::string::npos);
    }
}

TEST_CASE("sampling mode is seeded and clearly labelled", "[covers]") {
    CoverOptions o;
    o.mode = CoverMode::MonteCarlo;
    o.budget = 500;
    o.seed = 42;
    CoverReport a = check_cn_at(unit_simplex(2), Rat(2), o);
    CoverReport b = check_cn_at(unit_simplex(2), Rat(2), o);
    CHECK(a.mode == "mc");
    REQUIRE_FALSE(a.notes.empty());
    CHECK(a.notes.front() == "sampling only; a positive verdict is not a proof");
    CHECK(a.covered == b.covered);
    CHECK(a.regions_explored == b.regions_explored);
    if (a.witness || b.witness) {
        REQUIRE(a.witness.has_value());
        REQUIRE(b.witness.has_value());
        CHECK(*a.witness == *b.witness);
    }

    // a covered instance runs the full sample budget
    CoverReport full = check_cover(cube(2, Rat(1)), {cube(2, Rat(1))}, o);
    CHECK(full.covered);
    CHECK(full.regions_explored == 500);
}

TEST_CASE("translate-cover verdicts are unimodular invariants", "[covers]") {
    std::mt19937_64 rng(229);
    Polytope tri = unit_simplex(2);
    Polytope tri3 = dilated_simplex(2, Rat(3));
    bool base_neg = check_cn_at(tri, Rat(2)).covered;
    bool base_pos = check_cn_at(tri3, Rat(2)).covered;
    for (int t = 0; t < 20; ++t) {
        CHECK(check_cn_at(skew_image(tri, rng, 3), Rat(2)).covered == base_neg);
        if (t < 6)  // the positive side is heavier; a handful suffices
            CHECK(check_cn_at(skew_image(tri3, rng, 2), Rat(2)).covered == base_pos);
    }
}

TEST_CASE("boundary layers of the unit square", "[covers]") {
    BcnReport rep = check_bcn(cube(2, Rat(1)), Rat(2), {Rat(2)});
    CHECK(rep.holds);
    REQUIRE(rep.per_facet_c.size() == 4);  // one entry per facet and grid value
    std::set<std::size_t> facets;
    for (const auto& [f, cr] : rep.per_facet_c) {
        facets.insert(f);
        CHECK(cr.covered);
        CHECK(*cr.c == 2);
    }
    CHECK(facets.size() == 4);
    CHECK_THROWS_AS(check_bcn(cube(2, Rat(1)), Rat(1), {Rat(1)}), std::invalid_argument);
}

TEST_CASE("pyramid layer checks reduce to the base facet on a simplex", "[covers]") {
    Polytope tri = unit_simplex(2);
    // facet 0 carries vertices 1 and 2; vertex 0 is the apex, so the carved
    // pyramid is the whole triangle and the check is the plain boundary check
    CoverReport rep = check_pyramid_layer_cover(tri, 0, 0, Rat(2));
    CoverReport direct = check_bcn_at(tri, 0, Rat(2));
    CHECK(rep.covered == direct.covered);
    CHECK(rep.witness == direct.witness);
    CHECK(rep.regions_explored == direct.regions_explored);
    // vertex 1 = (0,1) lies on facet 0, so no pyramid can be erected there
    CHECK_THROWS_AS(check_pyramid_layer_cover(tri, 1, 0, Rat(2)), std::invalid_argument);
}

TEST_CASE("pyramid layers carved out of non-pyramids", "[covers]") {
    // apex (0,0) over the far facet {x = s} of an s-by-s square: the pyramid is
    // the triangle conv((0,0),(s,0),(s,s)), covered by translates of the square
    CoverReport unit = check_pyramid_layer_cover(cube(2, Rat(1)), 0, 0, Rat(2));
    CHECK(unit.covered);
    CHECK(*unit.c == 2);

    CoverReport big = check_pyramid_layer_cover(cube(2, Rat(24)), 0, 0, Rat(2));
    CHECK(big.covered);

    // vertex 2 = (1,0) lies on the facet {x = 1} itself
    CHECK_THROWS_AS(check_pyramid_layer_cover(cube(2, Rat(1)), 2, 0, Rat(2)),
                    std::invalid_argument);
}

TEST_CASE("vertex homothety covers of the unit square", "[covers]") {
    // low regime: 1 <= c <= (dim+1)/dim = 3/2; high regime: c >= dim+1 = 3
    for (const Rat& c : {Rat(1), Rat(3, 2)})
        CHECK(check_vertex_homothety_cover(cube(2, Rat(1)), c, HomothetyVariant::LowC).covered);
    for (const Rat& c : {Rat(3), Rat(4)})
        CHECK(check_vertex_homothety_cover(cube(2, Rat(1)), c, HomothetyVariant::HighC).covered);
    CHECK(check_vertex_homothety_cover(unit_simplex(2), Rat(3), HomothetyVariant::HighC).covered);
    for (const Rat& c : {Rat(1, 2), Rat(2)})
        CHECK_THROWS_AS(check_vertex_homothety_cover(cube(2, Rat(1)), c, HomothetyVariant::LowC),
                        std::invalid_argument);
    CHECK_THROWS_AS(
        check_vertex_homothety_cover(cube(2, Rat(1)), Rat(2), HomothetyVariant::HighC),
        std::invalid_argument);
}

TEST_CASE("corner regions and their box covers", "[covers]") {
    CornerCoverReport r3 = check_corner_cover(dilated_simplex(2, Rat(3)), 0, 1);
    CHECK(r3.covered);
    CHECK(r3.boxes_per_cone == std::vector<std::size_t>{3});

    CornerCoverReport rc = check_corner_cover(cube(2, Rat(2)), 0, 1);
    CHECK(rc.covered);
    CHECK(rc.boxes_per_cone == std::vector<std::size_t>{4});

    // too small: the trimmed region admits no box translate at all
    CornerCoverReport tiny = check_corner_cover(unit_simplex(2), 0, 1);
    CHECK_FALSE(tiny.covered);
    CHECK(tiny.boxes_per_cone == std::vector<std::size_t>{0});
    REQUIRE(tiny.witness.has_value());
    CHECK(facet_member(unit_simplex(2), *tiny.witness));

    CHECK_THROWS_AS(check_corner_cover(unit_simplex(2), 17, 1), std::out_of_range);
}

TEST_CASE("trimmed corner region of a dilated triangle", "[covers]") {
    Polytope r = corner_region(dilated_simplex(2, Rat(6)), 0, 1);
    CHECK(r == dilated_simplex(2, Rat(4)));  // one lattice step off both far facets
}

TEST_CASE("full parallelepipedal cover of a dilated triangle", "[covers]") {
    SimplexPpdReport rep = simplex_ppd_cover(dilated_simplex(2, Rat(6)));
    CHECK(rep.covered);
    CHECK(rep.homothety_union_covers);
    REQUIRE(rep.boxes_per_vertex.size() == 3);
    for (const auto& boxes : rep.boxes_per_vertex) CHECK(boxes.size() == 15);
    CHECK_FALSE(rep.witness.has_value());

    std::mt19937_64 rng(233);
    SimplexPpdReport skew = simplex_ppd_cover(skew_image(dilated_simplex(2, Rat(6)), rng, 2));
    CHECK(skew.covered);
    CHECK(skew.homothety_union_covers);
    for (const auto& boxes : skew.boxes_per_vertex) CHECK(boxes.size() == 15);
}

TEST_CASE("standard subdivision pieces cover the doubled triangle", "[covers]") {
    Polytope tri = unit_simplex(2);
    std::vector<Polytope> pieces{tri, translate(tri, QVec{1, 0}), translate(tri, QVec{0, 1})};
    CHECK_FALSE(check_cover(dilate(tri, Rat(2)), pieces).covered);
    // adding the reflected middle triangle completes the subdivision
    pieces.push_back(from_vertices({QVec{1, 0}, QVec{0, 1}, QVec{1, 1}}));
    CHECK(check_cover(dilate(tri, Rat(2)), pieces).covered);
    // a polytope trivially covers itself
    CHECK(check_cover(tri, {tri}).covered);
}

TEST_CASE("adding pieces never revokes a positive verdict", "[covers]") {
    std::mt19937_64 rng(239);
    for (int t = 0; t < 10; ++t) {
        Polytope target = random_lattice_polytope(2, 4 + rng() % 3, 2, rng);
        std::vector<Polytope> pieces{target};
        REQUIRE(check_cover(target, pieces).covered);
        for (int extra = 0; extra < 3; ++extra) {
            pieces.push_back(random_lattice_polytope(2, 3 + rng() % 3, 2, rng));
            CHECK(check_cover(target, pieces).covered);
        }
    }
}

TEST_CASE("exact verdicts agree with volume and dense sampling oracles", "[covers]") {
    std::mt19937_64 rng(4242);
    int covered_n = 0, uncovered_n = 0;
    for (int t = 0; t < 50; ++t) {
        Polytope target = random_lattice_polytope(2, 4 + rng() % 3, 2, rng);
        std::vector<Polytope> pieces;
        std::size_t n = 3 + rng() % 4;
        if (t % 2 == 0) pieces.push_back(target);  // force a covered instance
        while (pieces.size() < n) {
            Polytope q = random_lattice_polytope(2, 3 + rng() % 3, 2, rng);
            QVec shift(std::vector<Rat>{Rat(long(rng() % 5) - 2, 2), Rat(long(rng() % 5) - 2, 2)});
            pieces.push_back(translate(q, shift));
        }
        CoverReport rep = check_cover(target, pieces);

        // coverage direction: exact inclusion-exclusion volume of the union
        // inside the target equals the target volume iff covered
        Rat union_vol = 0;
        for (std::size_t mask = 1; mask < (std::size_t(1) << pieces.size()); ++mask) {
            std::vector<Halfspace> hs = halfspaces_of(target);
            std::vector<Hyperplane> eqs = target.aff;
            int bits = 0;
            for (std::size_t i = 0; i < pieces.size(); ++i)
                if (mask >> i & 1) {
                    ++bits;
                    for (const Halfspace& h : halfspaces_of(pieces[i])) hs.push_back(h);
                    for (const Hyperplane& e : pieces[i].aff) eqs.push_back(e);
                }
            auto cap = from_halfspaces(hs, eqs);
            if (!cap) continue;
            union_vol += bits % 2 ? volume(*cap) : -volume(*cap);
        }
        REQUIRE(rep.covered == (union_vol == volume(target)));

        if (rep.covered) {
            ++covered_n;
            // falsification direction: no hole at any 1/64-grid point
            auto [lo, hi] = bounding_box(target);
            for (Int x = ceil_rat(lo[0] * 64); x <= floor_rat(hi[0] * 64); ++x)
                for (Int y = ceil_rat(lo[1] * 64); y <= floor_rat(hi[1] * 64); ++y) {
                    QVec pt(std::vector<Rat>{Rat(x, 64), Rat(y, 64)});
                    if (!target.contains(pt)) continue;
                    bool inside = false;
                    for (const Polytope& q : pieces) inside = inside || facet_member(q, pt);
                    if (!inside) FAIL("uncovered grid point despite a positive verdict");
                }
        } else {
            ++uncovered_n;
            REQUIRE(rep.witness.has_value());
            CHECK(facet_member(target, *rep.witness));
            for (const Polytope& q : pieces) CHECK_FALSE(facet_member(q, *rep.witness));
        }
    }
    CHECK(covered_n >= 10);
    CHECK(uncovered_n >= 10);
}

TEST_CASE("translate families at small and fractional dilations", "[covers]") {
    Polytope tri = unit_simplex(2);
    CnFamily fam = cn_family(tri, Rat(2));
    std::vector<QVec> expect{QVec{0, 0}, QVec{0, 1}, QVec{1, 0}};
    REQUIRE(fam.groups.size() == 3);
    for (const auto& [v, xs] : fam.groups) CHECK(xs == expect);  // integral vertices: one list

    // translating the polytope shifts every translate list along with it
    QVec half(std::vector<Rat>{Rat(1, 2), Rat(0)});
    CnFamily shifted = cn_family(translate(tri, half), Rat(2));
    REQUIRE(shifted.groups.size() == 3);
    for (std::size_t g = 0; g < 3; ++g) {
        REQUIRE(shifted.groups[g].second.size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(shifted.groups[g].second[i] == expect[i] + half);
    }

    // c = 1: the translate family degenerates to the single zero translate
    CnFamily one = cn_family(translate(tri, half), Rat(1));
    for (const auto& [v, xs] : one.groups) CHECK(xs == std::vector<QVec>{QVec{0, 0}});
    CHECK(one.all_translates().size() == 1);
}

TEST_CASE("parallelepipeds are convex-normal at every dilation", "[covers]") {
    CHECK(check_cn_at(cube(2, Rat(1)), Rat(3, 2)).covered);  // c below 2 is fine
    CnReport rep = check_cn(cube(3, Rat(1)), Rat(4), {Rat(2), Rat(3), Rat(4)});
    CHECK(rep.holds);
    REQUIRE(rep.per_c.size() == 3);
    for (const CoverReport& cr : rep.per_c) CHECK(cr.covered);
}

TEST_CASE("hypotenuse layer of the doubled unit triangle is not covered", "[covers]") {
    Polytope tri = unit_simplex(2);
    CoverReport rep = check_bcn_at(tri, 0, Rat(2));  // facet 0 is the hypotenuse
    REQUIRE_FALSE(rep.covered);
    REQUIRE(rep.witness.has_value());
    const QVec& w = *rep.witness;
    // the witness sits in the layer {x+y >= 2 - 1/3} inside the uncovered
    // open middle triangle of the doubled unit triangle
    CHECK(w[0] + w[1] >= Rat(5, 3));
    CHECK(w[0] < 1);
    CHECK(w[1] < 1);
    CHECK(w[0] + w[1] > 1);
}

TEST_CASE("boundary layers of dilated triangles above the recursion threshold", "[covers]") {
    // one-directional property: edge length at or above the d = 2 recursion
    // threshold forces every boundary layer cover on the grid to close
    const Rat k(3);
    Rat threshold = Rat(3, 2) * cn_recursive_bound(1, k + (k - 1) / 2).cn;
    REQUIRE(threshold == Rat(3, 2));
    for (const Rat& c : {Rat(2), Rat(5, 2), Rat(3), Rat(4)}) {
        REQUIRE(c >= threshold);
        BcnReport rep = check_bcn(dilate(unit_simplex(2), c), k, {Rat(2), Rat(5, 2), Rat(3)});
        CHECK(rep.holds);
    }
}

TEST_CASE("translate covers on integer grids imply integral closedness", "[covers]") {
    // one-directional property on lattice polygons: passing the translate
    // cover at every integer dilation in [2, d+1] forces integral closedness
    std::mt19937_64 rng(77);
    std::vector<Polytope> probes{cube(2, Rat(2)), dilated_simplex(2, Rat(6))};
    for (int t = 0; t < 10; ++t) probes.push_back(random_lattice_polytope(2, 4 + rng() % 3, 3, rng));
    int cn_positive = 0;
    for (const Polytope& p : probes) {
        if (!check_cn(p, Rat(3), {Rat(2), Rat(3)}).holds) continue;
        ++cn_positive;
        CHECK(check_integrally_closed(p).integrally_closed);
    }
    CHECK(cn_positive >= 2);  // the square and the big triangle at least
}

TEST_CASE("trimmed corner regions in closed form", "[covers]") {
    // unit square, vertex 0: strips of a third are shaved off the far facets
    Polytope sq = corner_region(cube(2, Rat(1)), 0, 1);
    CHECK(sq == dilate(cube(2, Rat(1)), Rat(2, 3)));
    // rational trim parameters are allowed
    CHECK(corner_region(cube(2, Rat(1)), 0, Rat(3, 2)) == dilate(cube(2, Rat(1)), Rat(7, 9)));
    // a simplex corner region is the homothetic copy of factor dim/(dim+1)
    CHECK(corner_region(unit_simplex(2), 0, 1) == dilate(unit_simplex(2), Rat(2, 3)));
    // large trim parameters approach the whole polytope from inside
    Polytope big = corner_region(dilated_simplex(2, Rat(6)), 0, 100);
    CHECK(big == dilate(unit_simplex(2), Rat(299, 50)));
    CHECK(volume(big) > volume(corner_region(dilated_simplex(2, Rat(6)), 0, 1)));
    CHECK_THROWS_AS(corner_region(cube(2, Rat(1)), 0, Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("admissible box translations at a corner", "[covers]") {
    auto translations = [](const Polytope& p) {
        auto cones = triangulate_corner_cone(p, 0);
        REQUIRE(cones.size() == 1);
        return corner_ppd_region(p, 0, cones.front()).translations;
    };
    // the box anchored at (1,0) would stick out through the hypotenuse
    CHECK(translations(dilated_simplex(2, Rat(2))) == std::vector<ZVec>{ZVec{0, 0}});
    CHECK(translations(cube(2, Rat(1))) == std::vector<ZVec>{ZVec{0, 0}});
    CHECK(translations(dilated_simplex(2, Rat(3))) ==
          std::vector<ZVec>{ZVec{0, 0}, ZVec{0, 1}, ZVec{1, 0}});
}

TEST_CASE("unit cube corner region is covered by its single box", "[covers]") {
    CornerCoverReport rep = check_corner_cover(cube(3, Rat(1)), 0, 1);
    CHECK(rep.covered);
    CHECK(rep.boxes_per_cone == std::vector<std::size_t>{1});
}
