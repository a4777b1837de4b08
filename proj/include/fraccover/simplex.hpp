#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fraccover/bitset.hpp"
#include "fraccover/rational.hpp"

namespace fraccover {

// min sum(x)  s.t.  for every row r: sum{x_c : r in columns[c]} >= 1, x >= 0.
// One row per vertex to cover; each column is the row-incidence of a variable.
struct CoveringLp {
    int num_rows = 0;
    std::vector<Bitset> columns;
};

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> primal;          // per column
    std::vector<Rational> dual;            // per row
    Rational objective;
    std::optional<int> uncovered_row;      // set when Infeasible

    // Re-checks both certificates by direct substitution, including exact
    // strong duality and the weight range [0,1].
    bool verify(const CoveringLp& lp) const {
        if (status != LpStatus::Optimal) return false;
        if (primal.size() != lp.columns.size()) return false;
        if (static_cast<int>(dual.size()) != lp.num_rows) return false;
        Rational primal_obj;
        for (std::size_t c = 0; c < primal.size(); ++c) {
            if (primal[c] < Rational(0) || primal[c] > Rational(1)) return false;
            primal_obj += primal[c];
        }
        if (primal_obj != objective) return false;
        for (int r = 0; r < lp.num_rows; ++r) {
            Rational row_sum;
            for (std::size_t c = 0; c < lp.columns.size(); ++c)
                if (lp.columns[c].test(r)) row_sum += primal[c];
            if (row_sum < Rational(1)) return false;
        }
        Rational dual_obj;
        for (const auto& y : dual) {
            if (y < Rational(0)) return false;
            dual_obj += y;
        }
        for (const auto& col : lp.columns) {
            Rational col_sum;
            for (int r = col.next(0); r >= 0; r = col.next(r + 1))
                col_sum += dual[static_cast<std::size_t>(r)];
            if (col_sum > Rational(1)) return false;
        }
        return dual_obj == objective;  // exact strong duality
    }
};

namespace detail {

// Dense-tableau two-phase primal simplex with Bland's anti-cycling rule.
// Column layout: [structural n | surplus m | artificial m], rhs kept apart.
// Artificial columns stay in the tableau (barred from re-entering) so the
// duals can be read off their reduced costs: y_r = -z[artificial_r].
class CoveringSimplex {
public:
    explicit CoveringSimplex(const CoveringLp& lp)
        : m_(lp.num_rows), n_(static_cast<int>(lp.columns.size())) {
        width_ = n_ + 2 * m_;
        tableau_.assign(static_cast<std::size_t>(m_),
                        std::vector<Rational>(static_cast<std::size_t>(width_)));
        rhs_.assign(static_cast<std::size_t>(m_), Rational(1));
        basis_.assign(static_cast<std::size_t>(m_), 0);
        for (int r = 0; r < m_; ++r) {
            auto& row = tableau_[static_cast<std::size_t>(r)];
            for (int c = 0; c < n_; ++c)
                if (lp.columns[static_cast<std::size_t>(c)].test(r)) row[static_cast<std::size_t>(c)] = Rational(1);
            row[static_cast<std::size_t>(n_ + r)] = Rational(-1);      // surplus
            row[static_cast<std::size_t>(n_ + m_ + r)] = Rational(1);  // artificial
            basis_[static_cast<std::size_t>(r)] = n_ + m_ + r;
        }
    }

    LpSolution solve() {
        phase1();
        drive_out_artificials();
        phase2();
        return extract();
    }

private:
    bool is_artificial(int j) const { return j >= n_ + m_; }

    void compute_cost_row(bool phase1) {
        z_.assign(static_cast<std::size_t>(width_), Rational(0));
        objective_ = Rational(0);
        for (int j = 0; j < width_; ++j) z_[static_cast<std::size_t>(j)] = cost(j, phase1);
        for (int r = 0; r < m_; ++r) {
            Rational cb = cost(basis_[static_cast<std::size_t>(r)], phase1);
            if (cb == Rational(0)) continue;
            const auto& row = tableau_[static_cast<std::size_t>(r)];
            for (int j = 0; j < width_; ++j)
                z_[static_cast<std::size_t>(j)] -= cb * row[static_cast<std::size_t>(j)];
            objective_ += cb * rhs_[static_cast<std::size_t>(r)];
        }
    }

    Rational cost(int j, bool phase1) const {
        if (phase1) return is_artificial(j) ? Rational(1) : Rational(0);
        return j < n_ ? Rational(1) : Rational(0);
    }

    // Bland: entering = lowest-index eligible column with negative reduced
    // cost; leaving = tightest ratio, ties by lowest basis variable index.
    void run_pivots() {
        while (true) {
            int entering = -1;
            for (int j = 0; j < n_ + m_; ++j) {
                if (z_[static_cast<std::size_t>(j)].sign() < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return;
            int leaving = -1;
            Rational best_ratio;
            for (int r = 0; r < m_; ++r) {
                const Rational& coef =
                    tableau_[static_cast<std::size_t>(r)][static_cast<std::size_t>(entering)];
                if (coef.sign() <= 0) continue;
                Rational ratio = rhs_[static_cast<std::size_t>(r)] / coef;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving < 0)
                throw std::logic_error("covering simplex: unbounded pivot (objective is >= 0)");
            pivot(leaving, entering);
        }
    }

    void pivot(int r, int jin) {
        auto& prow = tableau_[static_cast<std::size_t>(r)];
        Rational inv = Rational(1) / prow[static_cast<std::size_t>(jin)];
        for (auto& x : prow) x *= inv;
        rhs_[static_cast<std::size_t>(r)] *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == r) continue;
            auto& row = tableau_[static_cast<std::size_t>(i)];
            Rational mult = row[static_cast<std::size_t>(jin)];
            if (mult.sign() == 0) continue;
            for (int j = 0; j < width_; ++j) {
                const Rational& p = prow[static_cast<std::size_t>(j)];
                if (p.sign() != 0) row[static_cast<std::size_t>(j)] -= mult * p;
            }
            rhs_[static_cast<std::size_t>(i)] -= mult * rhs_[static_cast<std::size_t>(r)];
        }
        Rational zmult = z_[static_cast<std::size_t>(jin)];
        if (zmult.sign() != 0) {
            for (int j = 0; j < width_; ++j) {
                const Rational& p = prow[static_cast<std::size_t>(j)];
                if (p.sign() != 0) z_[static_cast<std::size_t>(j)] -= zmult * p;
            }
            objective_ += zmult * rhs_[static_cast<std::size_t>(r)];
        }
        basis_[static_cast<std::size_t>(r)] = jin;
    }

    void phase1() {
        compute_cost_row(true);
        run_pivots();
        if (objective_.sign() != 0)
            throw std::logic_error("covering simplex: phase 1 ended positive on a covered instance");
    }

    // Degenerate pivots remove zero-level artificials from the basis where
    // possible; an all-zero row is redundant and keeps its artificial at 0.
    void drive_out_artificials() {
        for (int r = 0; r < m_; ++r) {
            if (!is_artificial(basis_[static_cast<std::size_t>(r)])) continue;
            const auto& row = tableau_[static_cast<std::size_t>(r)];
            for (int j = 0; j < n_ + m_; ++j) {
                if (row[static_cast<std::size_t>(j)].sign() != 0) {
                    pivot(r, j);
                    break;
                }
            }
        }
    }

    void phase2() {
        compute_cost_row(false);
        run_pivots();
    }

    LpSolution extract() const {
        LpSolution sol;
        sol.status = LpStatus::Optimal;
        sol.primal.assign(static_cast<std::size_t>(n_), Rational(0));
        for (int r = 0; r < m_; ++r) {
            int b = basis_[static_cast<std::size_t>(r)];
            if (b < n_) sol.primal[static_cast<std::size_t>(b)] = rhs_[static_cast<std::size_t>(r)];
        }
        sol.dual.assign(static_cast<std::size_t>(m_), Rational(0));
        for (int r = 0; r < m_; ++r)
            sol.dual[static_cast<std::size_t>(r)] = -z_[static_cast<std::size_t>(n_ + m_ + r)];
        sol.objective = objective_;
        return sol;
    }

    int m_;
    int n_;
    int width_;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> rhs_;
    std::vector<Rational> z_;
    std::vector<int> basis_;
    Rational objective_;
};

}  // namespace detail

// Exact optimum with primal and dual certificates. Infeasible iff some row
// appears in no column (reported with the offending row id). The pivot
// sequence is deterministic, so equal inputs give identical solutions.
inline LpSolution solve_covering_lp(const CoveringLp& lp) {
    if (lp.num_rows < 1) throw std::invalid_argument("solve_covering_lp: need num_rows >= 1");
    for (const auto& col : lp.columns)
        if (col.capacity() != lp.num_rows)
            throw std::invalid_argument("solve_covering_lp: column capacity mismatch");
    for (int r = 0; r < lp.num_rows; ++r) {
        bool covered = false;
        for (const auto& col : lp.columns)
            if (col.test(r)) {
                covered = true;
                break;
            }
        if (!covered) {
            LpSolution sol;
            sol.status = LpStatus::Infeasible;
            sol.uncovered_row = r;
            return sol;
        }
    }
    detail::CoveringSimplex simplex(lp);
    LpSolution sol = simplex.solve();
    if (!sol.verify(lp))
        throw std::logic_error("solve_covering_lp: certificate verification failed");
    return sol;
}

}  // namespace fraccover
