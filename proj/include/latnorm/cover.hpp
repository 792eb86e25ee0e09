#pragma once

// Exact cover decision: does a finite union of polytopes cover a target
// polytope? The engine branches on facet complements of one intersecting
// piece at a time, with AND-of-prefix children, so the children partition the
// uncovered part of a region and no pocket is explored twice:
//
//   region = (region /\ piece) u child_0 u child_1 u ...   (disjoint)
//   child_j = region /\ C_0 /\ ... /\ C_{j-1} /\ (not C_j, strict)
//
// Regions stay canonical (one constraint per direction), parent witnesses are
// reused to skip LPs, and piece candidate lists shrink monotonically down the
// tree (a piece proven disjoint from an ancestor region never returns). The
// search runs in breadth-first waves whose results are reduced in node order,
// so verdict, witness and region count are identical for any worker count.

#include "latnorm/enumerate.hpp"

#include <atomic>
#include <cstdint>
#include <random>
#include <thread>

namespace latnorm {

enum class CoverMode { Exact, MonteCarlo };

struct CoverOptions {
    CoverMode mode = CoverMode::Exact;
    std::size_t budget = 1u << 20;  // regions for Exact, samples for MonteCarlo
    unsigned workers = 1;
    std::uint64_t seed = 1;
};

struct CoverReport {
    bool covered = false;
    std::optional<QVec> witness;      // uncovered point when covered == false
    std::string mode = "exact";
    std::size_t pieces_used = 0;      // distinct pieces branched on
    std::size_t regions_explored = 0; // nodes expanded (exact) or samples (mc)
    std::optional<Rat> c;             // dilation factor, filled by CN wrappers
    std::vector<std::string> notes;
};

struct budget_exceeded_error : std::runtime_error {
    CoverReport partial;
    explicit budget_exceeded_error(CoverReport r)
        : std::runtime_error("cover search budget exceeded"), partial(std::move(r)) {}
};

namespace detail {

template <typename F>
inline void parallel_for(std::size_t n, unsigned workers, F&& f) {
    if (n == 0) return;
    unsigned w = std::min<std::size_t>(workers ? workers : 1, n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t)
        pool.emplace_back([&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    for (std::thread& t : pool) t.join();
}

struct CoverNode {
    Region region;
    std::vector<std::uint32_t> cands;
    std::optional<QVec> hint;  // known feasible point of region
};

struct ExpandResult {
    enum Kind { Dead, Leaf, Branch } kind = Dead;
    std::vector<CoverNode> children;
    QVec leaf_witness;
    std::uint32_t branch_piece = 0;
};

}  // namespace detail

inline CoverReport check_cover(const Polytope& target, const std::vector<Polytope>& pieces_in,
                               const CoverOptions& opts = {}) {
    for (const Polytope& q : pieces_in)
        if (q.ambient != target.ambient)
            throw std::invalid_argument("check_cover: ambient dimension mismatch");

    // Deduplicate pieces and order them by descending overlap of bounding
    // boxes with the target (a cheap proxy for intersection volume), ties by
    // first occurrence. This is the global candidate order.
    std::vector<Polytope> pieces;
    {
        std::vector<std::size_t> first;
        for (std::size_t i = 0; i < pieces_in.size(); ++i) {
            bool dup = false;
            for (const Polytope& q : pieces)
                if (q == pieces_in[i]) {
                    dup = true;
                    break;
                }
            if (!dup) {
                pieces.push_back(pieces_in[i]);
                first.push_back(i);
            }
        }
        auto [tlo, thi] = bounding_box(target);
        std::vector<Rat> overlap(pieces.size());
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            auto [plo, phi] = bounding_box(pieces[i]);
            Rat vol = 1;
            for (std::size_t k = 0; k < target.ambient; ++k) {
                Rat lo = plo[k] > tlo[k] ? plo[k] : tlo[k];
                Rat hi = phi[k] < thi[k] ? phi[k] : thi[k];
                vol *= hi > lo ? hi - lo : Rat(0);
            }
            overlap[i] = vol;
        }
        std::vector<std::size_t> ord(pieces.size());
        for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
        std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
            if (overlap[a] != overlap[b]) return overlap[a] > overlap[b];
            return first[a] < first[b];
        });
        std::vector<Polytope> tmp;
        for (std::size_t i : ord) tmp.push_back(std::move(pieces[i]));
        pieces = std::move(tmp);
    }

    CoverReport rep;
    if (opts.mode == CoverMode::MonteCarlo) {
        rep.mode = "mc";
        rep.notes.push_back("sampling only; a positive verdict is not a proof");
        std::mt19937_64 rng(opts.seed);
        const std::vector<QVec>& vs = target.verts;
        for (std::size_t s = 0; s < opts.budget; ++s) {
            std::size_t k = 1 + static_cast<std::size_t>(rng() % vs.size());
            std::vector<std::size_t> idx(vs.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            for (std::size_t i = 0; i < k; ++i)
                std::swap(idx[i], idx[i + static_cast<std::size_t>(rng() % (idx.size() - i))]);
            QVec pt(target.ambient);
            Int total = 0;
            std::vector<Int> wts(k);
            for (std::size_t i = 0; i < k; ++i) {
                wts[i] = 1 + static_cast<long>(rng() % 64);
                total += wts[i];
            }
            for (std::size_t i = 0; i < k; ++i)
                pt = pt + (Rat(wts[i], total) * vs[idx[i]]);
            ++rep.regions_explored;
            bool inside = false;
            for (const Polytope& q : pieces)
                if (q.contains(pt)) {
                    inside = true;
                    break;
                }
            if (!inside) {
                rep.covered = false;
                rep.witness = pt;
                return rep;
            }
        }
        rep.covered = true;
        return rep;
    }

    // Exact search. Pre-extract every piece's constraint list (facets first
    // in canonical order, then affine equalities as halfspace pairs).
    std::vector<std::vector<Halfspace>> piece_cons(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (const Facet& f : pieces[i].facets) piece_cons[i].emplace_back(f.normal, f.offset);
        for (const Hyperplane& e : pieces[i].aff) {
            piece_cons[i].emplace_back(e.normal, e.offset);
            piece_cons[i].emplace_back(-e.normal, -e.offset);
        }
    }
    auto in_piece = [&](std::size_t i, const QVec& x) {
        for (const Halfspace& h : piece_cons[i])
            if (!h.satisfied_by(x)) return false;
        return true;
    };

    detail::CoverNode root;
    root.region = polytope_region(target);
    root.cands.resize(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) root.cands[i] = static_cast<std::uint32_t>(i);

    std::vector<detail::CoverNode> frontier;
    frontier.push_back(std::move(root));
    std::vector<bool> used(pieces.size(), false);

    auto expand = [&](const detail::CoverNode& node) {
        detail::ExpandResult res;
        std::optional<QVec> w = node.hint;
        if (!w || !node.region.satisfied_by(*w)) w = lp_feasible(node.region);
        if (!w) return res;  // Dead
        // Pass 1: membership of the witness (no LPs).
        std::size_t branch = node.cands.size();
        for (std::size_t ci = 0; ci < node.cands.size(); ++ci)
            if (in_piece(node.cands[ci], *w)) {
                branch = ci;
                break;
            }
        std::vector<std::uint32_t> survivors = node.cands;
        if (branch == node.cands.size()) {
            // Pass 2: LP intersection tests, dropping proven-disjoint pieces.
            // Stops at the first intersecting piece, which then heads the
            // survivor list; candidates after it stay untested (and kept).
            survivors.clear();
            bool found = false;
            for (std::size_t ci = 0; ci < node.cands.size() && !found; ++ci) {
                std::uint32_t id = node.cands[ci];
                Region meet = node.region;
                for (const Halfspace& h : piece_cons[id]) meet.add(h);
                if (lp_feasible(meet)) {
                    found = true;
                    survivors.push_back(id);
                    for (std::size_t rest = ci + 1; rest < node.cands.size(); ++rest)
                        survivors.push_back(node.cands[rest]);
                }  // else: disjoint from this region, gone for the subtree
            }
            if (!found) {
                res.kind = detail::ExpandResult::Leaf;
                res.leaf_witness = simplify_witness(node.region, *w);
                return res;
            }
            branch = 0;
        }
        std::uint32_t piece_id = survivors[branch];
        res.kind = detail::ExpandResult::Branch;
        res.branch_piece = piece_id;
        const std::vector<Halfspace>& cons = piece_cons[piece_id];
        std::vector<std::uint32_t> child_cands;
        child_cands.reserve(survivors.size() - 1);
        for (std::uint32_t id : survivors)
            if (id != piece_id) child_cands.push_back(id);
        for (std::size_t j = 0; j < cons.size(); ++j) {
            detail::CoverNode child;
            child.region = node.region;
            for (std::size_t l = 0; l < j; ++l) child.region.add(cons[l]);
            child.region.add(Halfspace(-cons[j].normal, -cons[j].offset, true));
            if (child.region.trivially_empty) continue;
            child.cands = child_cands;
            if (child.region.satisfied_by(*w)) child.hint = *w;
            res.children.push_back(std::move(child));
        }
        return res;
    };

    while (!frontier.empty()) {
        if (rep.regions_explored + frontier.size() > opts.budget) {
            rep.notes.push_back("budget exceeded");
            throw budget_exceeded_error(rep);
        }
        std::vector<detail::ExpandResult> results(frontier.size());
        detail::parallel_for(frontier.size(), opts.workers,
                             [&](std::size_t i) { results[i] = expand(frontier[i]); });
        rep.regions_explored += frontier.size();
        std::vector<detail::CoverNode> next;
        for (std::size_t i = 0; i < results.size(); ++i) {
            detail::ExpandResult& r = results[i];
            if (r.kind == detail::ExpandResult::Leaf) {
                rep.covered = false;
                rep.witness = r.leaf_witness;
                // Invariant: the witness is in the target and in no piece.
                if (!target.contains(*rep.witness))
                    throw std::logic_error("check_cover: witness escaped the target");
                for (const Polytope& q : pieces)
                    if (q.contains(*rep.witness))
                        throw std::logic_error("check_cover: witness inside a piece");
                for (std::size_t u = 0; u < used.size(); ++u) rep.pieces_used += used[u] ? 1 : 0;
                return rep;
            }
            if (r.kind == detail::ExpandResult::Branch) {
                used[r.branch_piece] = true;
                for (detail::CoverNode& c : r.children) next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    rep.covered = true;
    for (std::size_t u = 0; u < used.size(); ++u) rep.pieces_used += used[u] ? 1 : 0;
    return rep;
}

}  // namespace latnorm
