#pragma once

// Double description: extreme rays of a pointed polyhedral cone
// {y : A y >= 0}. Incremental insertion with the combinatorial adjacency
// test (two rays are adjacent iff no third ray is tight on their common
// tight set). All arithmetic on integer-scaled rows and primitive rays.

#include "latnorm/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latnorm {

struct not_pointed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    Bits and_with(const Bits& o) const {
        Bits r;
        r.w.resize(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
};

}  // namespace detail

inline std::vector<ZVec> extreme_rays(const std::vector<QVec>& rows_q) {
    if (rows_q.empty()) throw std::invalid_argument("extreme_rays: no constraints");
    const std::size_t dim = rows_q[0].size(), m = rows_q.size();
    ZMat rows;
    rows.reserve(m);
    for (const QVec& r : rows_q) rows.push_back(scale_to_primitive(r));

    // Seed with dim independent rows; that subcone's rays are the columns of
    // the inverse. Remaining rows are inserted afterwards.
    std::vector<std::size_t> order;  // processed row indices, seed first
    QMat seed;
    {
        QMat acc;
        for (std::size_t i = 0; i < m && acc.size() < dim; ++i) {
            acc.push_back(to_qvec(rows[i]));
            if (rank(acc) == acc.size())
                order.push_back(i);
            else
                acc.pop_back();
        }
        if (acc.size() < dim) throw not_pointed_error("extreme_rays: cone has lineality");
        seed = acc;
        for (std::size_t i = 0; i < m; ++i)
            if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    }

    auto inv = inverse(seed);
    std::vector<ZVec> rays;
    std::vector<detail::Bits> tight;
    auto recompute_tight = [&](const ZVec& ray, std::size_t upto) {
        detail::Bits b(m);
        for (std::size_t t = 0; t < upto; ++t)
            if (dot(rows[order[t]], ray) == 0) b.set(t);
        return b;
    };
    for (std::size_t j = 0; j < dim; ++j) {
        QVec col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = (*inv)[i][j];
        rays.push_back(scale_to_primitive(col));
        tight.push_back(recompute_tight(rays.back(), dim));
    }

    for (std::size_t t = dim; t < m; ++t) {
        const ZVec& a = rows[order[t]];
        std::vector<Int> val(rays.size());
        bool any_neg = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i]);
            any_neg |= val[i] < 0;
        }
        if (!any_neg) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) tight[i].set(t);
            continue;
        }
        std::vector<ZVec> next;
        std::vector<detail::Bits> next_tight;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] < 0) continue;
            next.push_back(rays[i]);
            detail::Bits b = tight[i];
            if (val[i] == 0) b.set(t);
            next_tight.push_back(b);
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                detail::Bits common = tight[p].and_with(tight[q]);
                if (dim >= 2 && common.count() + 2 < dim) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == p || o == q) continue;
                    if (common.subset_of(tight[o])) adjacent = false;
                }
                if (!adjacent) continue;
                ZVec fresh = primitive_part(val[p] * rays[q] - val[q] * rays[p]);
                next.push_back(fresh);
                next_tight.push_back(recompute_tight(fresh, t + 1));
            }
        }
        rays = std::move(next);
        tight = std::move(next_tight);
    }

    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

}  // namespace latnorm
