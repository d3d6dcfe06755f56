#pragma once

#include <cstdint>
#include <vector>

#include "sepbip/graph.hpp"
#include "sepbip/rational.hpp"

namespace sepbip {

// Complete enumeration of the stable sets of a graph, empty set included.
// Order is the depth-first order over vertex ids, excluding a vertex before
// including it; deterministic and documented so sampling is reproducible.
struct StableSetFamily {
    std::vector<VertexSet> all_sets;
    uint64_t count() const { return all_sets.size(); }
};

inline constexpr uint64_t kDefaultStableSetBudget = uint64_t(1) << 20;

StableSetFamily enumerate_stable_sets(const Graph& g,
                                      uint64_t budget = kDefaultStableSetBudget);

// Exact uniform draw over the full family (errors instead of degrading when
// the family exceeds the budget).
VertexSet uniform_stable_set(const Graph& g, uint64_t seed,
                             uint64_t budget = kDefaultStableSetBudget);

// E(sum of d(v) over v in S) for S uniform over all stable sets.
Rational expected_degree_sum(const Graph& g, uint64_t budget = kDefaultStableSetBudget);

// X_v = d(v)*|{v} ∩ S| + |N(v) ∩ S|; s must be stable.
Rational x_statistic(const Graph& g, int v, const VertexSet& s);

// (d + k*2^(k-1)) / (2^k + 1), exact; requires 1 <= d and 0 <= k <= d.
Rational conditional_expectation(long d, long k);

struct AppendixReport {
    uint64_t pairs_checked = 0;
    uint64_t violations = 0;
    // certified lower bound on the slack lhs - ln(d)/2, and where it occurs
    Rational min_slack;
    long min_d = 0;
    long min_k = 0;
};

// Checks (d + k*2^(k-1))/(2^k+1) >= ln(d)/2 for all 1 <= d <= d_max and
// 0 <= k <= min(d, k_cap), comparing against the upper end of a certified
// rational enclosure of ln d. Failures are reported, not thrown.
AppendixReport verify_appendix_inequality(long d_max, long k_cap);

struct AuxMinimum {
    double x = 0;
    double value = 0;
};

// Unimodal minimum of x -> (1 - ln x/(2x)) * log2(2x/ln x - 1) - ln x over
// x > 1, located by ternary search to absolute tolerance 1e-3.
AuxMinimum appendix_aux_minimum();

// Lexicographically least maximum-cardinality stable set. The search is
// branch-and-bound; `node_budget` caps explored nodes.
VertexSet max_stable_set(const Graph& g, uint64_t node_budget = uint64_t(1) << 32);

} // namespace sepbip
