#pragma once

#include <cstdint>

#include "sepbip/coloring.hpp"
#include "sepbip/graph.hpp"
#include "sepbip/rational.hpp"

namespace sepbip {

// Two disjoint stable sets of the host graph together with exact density
// accounting. Verification recomputes everything from the host graph.
struct BipartiteWitness {
    VertexSet part1;
    VertexSet part2;
    long edge_count = 0;   // edges between the parts (all induced edges)
    Rational avg_degree;   // 2*edge_count / (|part1|+|part2|), 0 when empty
    int min_degree = 0;    // min within-witness degree, 0 when empty

    void verify(const Graph& host) const;
    bool lex_less(const BipartiteWitness& o) const;
};

BipartiteWitness make_bipartite_witness(const Graph& host, const VertexSet& part1,
                                        const VertexSet& part2);

// A stable part against an arbitrary disjoint part; only cross edges count.
struct SemiBipartiteWitness {
    VertexSet stable_part;
    VertexSet other_part;
    long cross_edge_count = 0;
    Rational avg_degree; // 2*cross / (|stable|+|other|), 0 when empty

    void verify(const Graph& host) const;
    bool lex_less(const SemiBipartiteWitness& o) const;
};

SemiBipartiteWitness make_semi_witness(const Graph& host, const VertexSet& stable_part,
                                       const VertexSet& other_part);

inline constexpr uint64_t kDefaultPairBudget = uint64_t(1) << 24;

// Scans all ordered support pairs (S1, S2) of a flattened distribution, keeps
// the pairs whose edge surplus |E(G[S1 u S2])| - (|S1|+|S2|)*d/(2k) is
// nonnegative (one always exists), discards S1 n S2 and returns the best
// witness by average degree. Guarantee: avg_degree >= d/k for d the average
// degree of g and 1/k the uniform marginal.
BipartiteWitness extract_from_distribution(const Graph& g, const StableSetDistribution& dist,
                                           uint64_t pair_budget = kDefaultPairBudget);

// Picks the color-class pair maximizing edges/(size sum), then peels inside
// the induced bipartite subgraph at threshold min_degree(g)/(2k).
// Guarantee: witness min_degree >= min_degree(g)/(2k).
BipartiteWitness extract_from_coloring(const Graph& g, const ProperColoring& c);

struct AksPeeling {
    std::vector<VertexSet> classes; // extracted maximum stable sets, in order
    VertexSet leftover;
    int covered = 0;        // vertices in the extracted classes
    int min_class_size = 0; // 0 when no class was extracted
};

// Repeatedly extracts a maximum stable set while more than `threshold`
// vertices remain; the classes form a proper partial coloring whose class
// count is at most covered/min_class_size.
AksPeeling aks_peeling_coloring(const Graph& g, int threshold);

enum class SemiMode { Exact, Sampled, LocalSearch };

// Exact mode maximizes the cross-edge average degree over every stable set S
// against V \ S (vertices isolated in the cross graph are trimmed first).
// Guarantee in exact mode: avg_degree >= ln(min_degree)/2 when min degree >= 1.
// Sampled mode draws `trials` uniform stable sets; local-search mode runs
// seeded hill-climbing with add/drop moves, `trials` restarts.
SemiBipartiteWitness best_semi_bipartite(const Graph& g, SemiMode mode, uint64_t seed = 0,
                                         int trials = 64,
                                         uint64_t budget = kDefaultStableSetBudget);

struct TrimResult {
    VertexSet a_trimmed;
    Rational avg_before; // of (a, b)
    Rational avg_after;  // of (a_trimmed, b)
    bool certified = false; // 2*avg_after >= avg_before, exact
};

// Keeps the |b| vertices of `a` with the largest degree into `b`
// (ties by lowest id). Requires a, b disjoint and |a| >= |b|.
TrimResult trim_equal_parts(const Graph& g, const VertexSet& a, const VertexSet& b);

// Exhaustive ground truth: the maximum average degree over all induced
// bipartite subgraphs. n <= budget_n.
BipartiteWitness max_bip_induced_oracle(const Graph& g, int budget_n = 16);

} // namespace sepbip
