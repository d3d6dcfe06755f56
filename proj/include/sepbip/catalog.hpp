#pragma once

#include <cstdint>
#include <vector>

#include "sepbip/graph.hpp"

namespace sepbip {

// Isomorphism-free catalogs of small graphs, generated by vertex augmentation
// with canonical-code deduplication. Practical up to n = 8
// (12346 graphs, 11117 of them connected).

// Minimum over all vertex orderings of the upper-triangle adjacency bits,
// read row by row, earlier bits most significant. n <= 10.
uint64_t canonical_code(const Graph& g);

// All graphs on exactly n vertices, one per isomorphism class,
// sorted by canonical code.
const std::vector<Graph>& graphs_on(int n);

// Connected members of graphs_on(n).
const std::vector<Graph>& connected_graphs_on(int n);

bool is_connected(const Graph& g);

} // namespace sepbip
