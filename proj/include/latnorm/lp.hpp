#pragma once

// Exact linear programming over Q: dense two-phase simplex with Bland's rule
// (termination guaranteed, no cycling). Free variables are split x = u - w.
// Strict feasibility is decided by the shared-slack trick: maximize t subject
// to a.x >= b + t on the strict rows and t <= 1; a strictly feasible point
// exists iff the optimum is positive.

#include "latnorm/matrix.hpp"

#include <optional>
#include <vector>

namespace latnorm {

enum class Rel { GE, LE, EQ };

struct LinCon {
    QVec a;
    Rel rel;
    Rat b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    QVec x;     // primal point in the original variables (valid when Optimal)
    Rat value;  // objective value at x
};

namespace detail {

class SimplexTableau {
public:
    // Standard form min c.z, A z = b, z >= 0 built from free-variable input.
    SimplexTableau(std::size_t nvars, const std::vector<LinCon>& cons) : n_free(nvars) {
        std::size_t m = cons.size();
        nslack = 0;
        for (const LinCon& c : cons)
            if (c.rel != Rel::EQ) ++nslack;
        n_real = 2 * n_free + nslack;
        n_total = n_real + m;  // one artificial per row
        rows.assign(m, QVec(n_total + 1));
        std::size_t s = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const LinCon& c = cons[i];
            if (c.a.size() != n_free) throw std::invalid_argument("lp: constraint arity mismatch");
            for (std::size_t j = 0; j < n_free; ++j) {
                rows[i][j] = c.a[j];
                rows[i][n_free + j] = -c.a[j];
            }
            if (c.rel == Rel::GE) rows[i][2 * n_free + s++] = -1;
            if (c.rel == Rel::LE) rows[i][2 * n_free + s++] = 1;
            rows[i][n_total] = c.b;
            if (rows[i][n_total] < 0)
                for (std::size_t j = 0; j <= n_total; ++j) rows[i][j] = -rows[i][j];
            rows[i][n_real + i] = 1;  // artificial (after any sign flip)
        }
        basis.resize(m);
        for (std::size_t i = 0; i < m; ++i) basis[i] = n_real + i;
    }

    // Phase 1: minimize the artificial sum. Returns false when infeasible.
    bool phase1() {
        QVec cost(n_total);
        for (std::size_t j = n_real; j < n_total; ++j) cost[j] = 1;
        run(cost, n_total);
        if (objective_value() != 0) return false;
        // Pivot artificials out of the basis; rows with no real pivot are
        // redundant equations and are dropped.
        for (std::size_t i = 0; i < rows.size();) {
            if (basis[i] < n_real) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < n_real && rows[i][j] == 0) ++j;
            if (j < n_real) {
                pivot(i, j);
                ++i;
            } else {
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        // Drop artificial columns.
        for (QVec& r : rows) {
            r.c[n_real] = r.c[n_total];
            r.c.resize(n_real + 1);
        }
        n_total = n_real;
        return true;
    }

    // Phase 2 on the real cost vector (length n_real). Returns false when
    // unbounded below.
    bool phase2(const QVec& cost) { return run(cost, n_real); }

    Rat objective_value() const { return -costrow[costrow.size() - 1]; }

    QVec primal(std::size_t nvars) const {
        QVec z(n_total);
        for (std::size_t i = 0; i < rows.size(); ++i) z[basis[i]] = rows[i][n_total];
        QVec x(nvars);
        for (std::size_t j = 0; j < nvars; ++j) x[j] = z[j] - z[nvars + j];
        return x;
    }

private:
    std::size_t n_free, nslack, n_real, n_total;
    std::vector<QVec> rows;  // each length n_total+1 (rhs last)
    std::vector<std::size_t> basis;
    QVec costrow;  // reduced costs + negated objective in the last cell

    void pivot(std::size_t pr, std::size_t pc) {
        Rat p = rows[pr][pc];
        for (Rat& v : rows[pr].c) v /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || rows[i][pc] == 0) continue;
            Rat f = rows[i][pc];
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[pr][j];
        }
        if (!costrow.c.empty() && costrow[pc] != 0) {
            Rat f = costrow[pc];
            for (std::size_t j = 0; j < costrow.size(); ++j) costrow[j] -= f * rows[pr][j];
        }
        basis[pr] = pc;
    }

    // Bland: entering = lowest-index negative reduced cost; leaving = minimal
    // ratio, ties by lowest basic variable index.
    bool run(const QVec& cost, std::size_t width) {
        costrow = QVec(width + 1);
        for (std::size_t j = 0; j < width; ++j) costrow[j] = j < cost.size() ? cost[j] : Rat(0);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (costrow[basis[i]] == 0) continue;
            Rat f = costrow[basis[i]];
            for (std::size_t j = 0; j <= width; ++j) costrow[j] -= f * rows[i][j];
        }
        while (true) {
            std::size_t enter = width;
            for (std::size_t j = 0; j < width; ++j)
                if (costrow[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == width) return true;
            std::size_t leave = rows.size();
            Rat best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rows[i][n_total] / rows[i][enter];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return false;  // unbounded direction
            pivot(leave, enter);
        }
    }
};

}  // namespace detail

inline LpResult lp_solve(std::size_t nvars, const std::vector<LinCon>& cons, const QVec& objective,
                         bool maximize) {
    if (objective.size() != nvars) throw std::invalid_argument("lp_solve: objective arity mismatch");
    detail::SimplexTableau t(nvars, cons);
    LpResult res;
    if (!t.phase1()) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    QVec cost(2 * nvars);  // slack costs are zero
    for (std::size_t j = 0; j < nvars; ++j) {
        cost[j] = maximize ? -objective[j] : objective[j];
        cost[nvars + j] = -cost[j];
    }
    if (!t.phase2(cost)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x = t.primal(nvars);
    res.value = 0;
    for (std::size_t j = 0; j < nvars; ++j) res.value += objective[j] * res.x[j];
    return res;
}

}  // namespace latnorm
