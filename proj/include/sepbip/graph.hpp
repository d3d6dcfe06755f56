#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sepbip/rational.hpp"

namespace sepbip {

// Sorted, duplicate-free set of vertex ids. The carrier for stable sets,
// witness parts and peeling results.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members);

    static VertexSet full(int n);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;

    bool operator==(const VertexSet&) const = default;
    // lexicographic on the sorted member list
    bool operator<(const VertexSet& other) const { return members_ < other.members_; }

private:
    std::vector<int> members_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in range, no self-loops, no duplicate pairs.
    static Graph build(int n, std::span<const std::pair<int, int>> edge_list);
    static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list) {
        return build(n, std::span<const std::pair<int, int>>(edge_list));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool adjacent(int u, int v) const;

    int min_degree() const;
    int max_degree() const;
    Rational average_degree() const; // 2m/n, 0 for the empty graph

    // Row bitmasks, only valid when n <= 64; used by the enumeration kernels.
    const std::vector<uint64_t>& adjacency_masks() const;

    bool is_stable_set(const VertexSet& s) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    mutable std::vector<uint64_t> masks_; // lazily built
};

struct DegeneracyResult {
    std::vector<int> ordering; // repeated removal of a min-degree vertex
    int degeneracy = 0;        // max degree at removal time
};

DegeneracyResult degeneracy_order(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// All triangles, each once, as ascending triples in lexicographic order.
std::vector<std::array<int, 3>> list_triangles(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host; // new id -> host id (ascending)
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct BipartitenessResult {
    bool bipartite = false;
    std::vector<int> side;      // per-vertex 0/1 when bipartite (-1 for isolated convention: side 0)
    std::vector<int> odd_cycle; // vertex sequence of an odd cycle when not
};

BipartitenessResult is_bipartite(const Graph& g);

// Repeatedly deletes the lowest-id vertex whose current degree is below
// `threshold` (exact rational comparison). May return the empty set.
VertexSet peel_to_min_degree(const Graph& g, const Rational& threshold);

} // namespace sepbip
