#include <doctest.h>

#include <algorithm>

#include "sepbip/catalog.hpp"
#include "sepbip/generators.hpp"

using namespace sepbip;

TEST_CASE("catalog counts match the known census") {
    // numbers of graphs / connected graphs on n unlabeled vertices
    const int all_counts[] = {1, 2, 4, 11, 34, 156, 1044};
    const int connected_counts[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(static_cast<int>(graphs_on(n).size()) == all_counts[n - 1]);
        CHECK(static_cast<int>(connected_graphs_on(n).size()) == connected_counts[n - 1]);
    }
}

TEST_CASE("canonical code is invariant under relabeling") {
    Graph pet = named_fixture("petersen");
    uint64_t ref = canonical_code(pet);
    // relabel by a fixed permutation
    std::vector<int> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pet.edges()) edges.emplace_back(perm[u], perm[v]);
    CHECK(canonical_code(Graph::build(10, edges)) == ref);

    // different graphs on equal vertex counts separate
    CHECK(canonical_code(cycle_graph(6)) != canonical_code(complete_bipartite(3, 3)));
}

TEST_CASE("catalog members are pairwise non-isomorphic by code") {
    const auto& g6 = graphs_on(6);
    std::vector<uint64_t> codes;
    for (const Graph& g : g6) codes.push_back(canonical_code(g));
    std::sort(codes.begin(), codes.end());
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
}

TEST_CASE("connectivity filter") {
    CHECK(is_connected(cycle_graph(4)));
    Graph two = Graph::build(4, std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(!is_connected(two));
}
