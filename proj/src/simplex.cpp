#include "sepbip/simplex.hpp"

#include "sepbip/error.hpp"

namespace sepbip {

namespace {

// Dense tableau in canonical form. Column layout: the structural columns,
// then m surplus columns, then m artificial columns, then the right-hand
// side. Row m is the reduced-cost row; its rhs cell holds minus the current
// objective value.
class Tableau {
public:
    Tableau(int rows, const std::vector<std::vector<int>>& columns)
        : m_(rows), ns_(static_cast<int>(columns.size())) {
        ncols_ = ns_ + 2 * m_;
        t_.assign(m_ + 1, std::vector<Rational>(ncols_ + 1, Rational(0)));
        basis_.resize(m_);
        for (int j = 0; j < ns_; ++j)
            for (int i : columns[j]) t_[i][j] = 1;
        for (int i = 0; i < m_; ++i) {
            t_[i][ns_ + i] = -1;          // surplus
            t_[i][ns_ + m_ + i] = 1;      // artificial
            t_[i][ncols_] = 1;            // rhs
            basis_[i] = ns_ + m_ + i;
        }
    }

    void run_phase1() {
        // cost 1 on artificials; canonicalize the reduced-cost row
        std::vector<Rational> cost(ncols_, Rational(0));
        for (int i = 0; i < m_; ++i) cost[ns_ + m_ + i] = 1;
        install_costs(cost);
        iterate();
        if (t_[m_][ncols_] != 0)
            fail(ErrorCode::Internal, "cover LP phase 1 ended infeasible");
        evict_artificials();
    }

    void run_phase2() {
        std::vector<Rational> cost(ncols_, Rational(0));
        for (int j = 0; j < ns_; ++j) cost[j] = 1;
        install_costs(cost);
        iterate();
    }

    CoverLpResult extract() const {
        CoverLpResult res;
        res.value = -t_[m_][ncols_];
        res.x.assign(ns_, Rational(0));
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < ns_) res.x[basis_[i]] = t_[i][ncols_];
        res.y.assign(m_, Rational(0));
        // reduced cost of surplus i equals the dual weight of row i
        for (int i = 0; i < m_; ++i) res.y[i] = t_[m_][ns_ + i];
        return res;
    }

private:
    void install_costs(const std::vector<Rational>& cost) {
        for (int j = 0; j <= ncols_; ++j) {
            Rational r = j < ncols_ ? cost[j] : Rational(0);
            for (int i = 0; i < m_; ++i) r -= cost[basis_[i]] * t_[i][j];
            t_[m_][j] = r;
        }
    }

    void pivot(int row, int col) {
        Rational inv = 1 / t_[row][col];
        for (int j = 0; j <= ncols_; ++j) t_[row][j] *= inv;
        for (int i = 0; i <= m_; ++i) {
            if (i == row) continue;
            Rational f = t_[i][col];
            if (f == 0) continue;
            for (int j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    // Bland's rule: entering column is the lowest index with negative reduced
    // cost; leaving row is the ratio-test minimum, ties by lowest basis index.
    // Artificials never re-enter once evicted.
    void iterate() {
        int limit = ns_ + m_;
        while (true) {
            int col = -1;
            for (int j = 0; j < limit; ++j)
                if (t_[m_][j] < 0) {
                    col = j;
                    break;
                }
            if (col == -1) return;
            int row = -1;
            Rational best;
            for (int i = 0; i < m_; ++i) {
                if (t_[i][col] <= 0) continue;
                Rational ratio = t_[i][ncols_] / t_[i][col];
                if (row == -1 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[row])) {
                    row = i;
                    best = ratio;
                }
            }
            if (row == -1) fail(ErrorCode::Internal, "cover LP unbounded");
            pivot(row, col);
        }
    }

    // after phase 1, degenerate basic artificials are pivoted out
    void evict_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < ns_ + m_) continue;
            int col = -1;
            for (int j = 0; j < ns_ + m_; ++j)
                if (t_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == -1) fail(ErrorCode::Internal, "cover LP has a dependent row");
            pivot(i, col);
        }
    }

    int m_;
    int ns_;
    int ncols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_;
};

} // namespace

CoverLpResult solve_cover_lp(int rows, const std::vector<std::vector<int>>& columns) {
    if (rows == 0) {
        CoverLpResult res;
        res.value = 0;
        res.x.assign(columns.size(), Rational(0));
        return res;
    }
    for (const auto& col : columns)
        for (int i : col)
            if (i < 0 || i >= rows) fail(ErrorCode::BadParameter, "cover LP column out of range");
    // feasibility needs every row covered by some column
    std::vector<bool> covered(rows, false);
    for (const auto& col : columns)
        for (int i : col) covered[i] = true;
    for (int i = 0; i < rows; ++i)
        if (!covered[i]) fail(ErrorCode::BadParameter, "cover LP row uncoverable");

    Tableau tab(rows, columns);
    tab.run_phase1();
    tab.run_phase2();
    return tab.extract();
}

} // namespace sepbip
