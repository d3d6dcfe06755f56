#pragma once

#include <vector>

#include "sepbip/rational.hpp"

namespace sepbip {

// Exact solution of the covering LP
//   min sum_j x_j   s.t.  sum_{j : row i in columns[j]} x_j >= 1,  x >= 0
// by a dense two-phase simplex over rationals with Bland's rule.
// The dual (a fractional clique when rows are vertices and columns are
// stable sets) is read off the final tableau:
//   max sum_i y_i   s.t.  sum_{i in columns[j]} y_i <= 1,  y >= 0.
struct CoverLpResult {
    Rational value;
    std::vector<Rational> x; // one weight per column
    std::vector<Rational> y; // one dual weight per row, same optimum value
};

CoverLpResult solve_cover_lp(int rows, const std::vector<std::vector<int>>& columns);

} // namespace sepbip
