#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "sepbip/catalog.hpp"
#include "sepbip/edgelist_io.hpp"
#include "sepbip/error.hpp"
#include "sepbip/generators.hpp"
#include "sepbip/graph.hpp"

using namespace sepbip;

namespace {

// brute-force oracles, independent of the library paths they check

int brute_degeneracy(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int mindeg = n;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            int d = 0;
            for (int u : g.neighbors(v))
                if (mask >> u & 1) ++d;
            mindeg = std::min(mindeg, d);
        }
        best = std::max(best, mindeg);
    }
    return best;
}

int brute_girth(const Graph& g) {
    // shortest simple cycle by DFS over paths from every start vertex
    int n = g.vertex_count();
    int best = -1;
    std::vector<bool> used(n, false);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3) {
                int len = static_cast<int>(path.size());
                if (best == -1 || len < best) best = len;
            } else if (!used[w] && w > start) {
                used[w] = true;
                path.push_back(w);
                self(self, start, w);
                path.pop_back();
                used[w] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = true;
        path = {s};
        dfs(dfs, s, s);
        used[s] = false;
    }
    return best;
}

} // namespace

TEST_CASE("build_graph basics and error cases") {
    Graph empty = Graph::build(0, std::vector<std::pair<int, int>>{});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Graph c5 = cycle_graph(5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    std::vector<std::pair<int, int>> k4edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4edges.emplace_back(u, v);
    Graph k4 = Graph::build(4, k4edges);
    CHECK(k4.average_degree() == Rational(3));

    CHECK_THROWS_AS(Graph::build(3, std::vector<std::pair<int, int>>{{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::build(3, std::vector<std::pair<int, int>>{{1, 1}}), Error);
    CHECK_THROWS_AS(Graph::build(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}), Error);
    try {
        Graph::build(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateEdge);
    }

    // degree sum identity
    int degsum = 0;
    for (int v = 0; v < 5; ++v) degsum += c5.degree(v);
    CHECK(degsum == 2 * c5.edge_count());
}

TEST_CASE("degeneracy of standard graphs") {
    CHECK(degeneracy_order(cycle_graph(5)).degeneracy == 2);

    Graph tree = Graph::build(6, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    CHECK(degeneracy_order(tree).degeneracy == 1);

    std::vector<std::pair<int, int>> k4edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4edges.emplace_back(u, v);
    CHECK(degeneracy_order(Graph::build(4, k4edges)).degeneracy == 3);
}

TEST_CASE("degeneracy order: exhaustive suffix property on catalog up to 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : graphs_on(n)) {
            DegeneracyResult res = degeneracy_order(g);
            CHECK(res.degeneracy == brute_degeneracy(g));
            // every suffix of the removal order induces min degree <= degeneracy
            for (size_t i = 0; i < res.ordering.size(); ++i) {
                VertexSet suffix(std::vector<int>(res.ordering.begin() + i, res.ordering.end()));
                Graph h = induced_subgraph(g, suffix).graph;
                if (h.vertex_count() > 0) CHECK(h.min_degree() <= res.degeneracy);
            }
        }
    }
}

TEST_CASE("girth of standard graphs") {
    std::vector<std::pair<int, int>> k4edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4edges.emplace_back(u, v);
    CHECK(girth(Graph::build(4, k4edges)) == 3);
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK(girth(named_fixture("petersen")) == 5);
    Graph tree = Graph::build(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
    CHECK(!girth(tree).has_value());
}

TEST_CASE("girth: BFS equals exhaustive cycle enumeration up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : graphs_on(n)) {
            auto fast = girth(g);
            int slow = brute_girth(g);
            if (slow == -1) {
                CHECK(!fast.has_value());
            } else {
                REQUIRE(fast.has_value());
                CHECK(*fast == slow);
            }
        }
    }
}

TEST_CASE("triangle listing") {
    CHECK(list_triangles(cycle_graph(5)).empty());
    CHECK(list_triangles(complete_bipartite(3, 3)).empty());

    std::vector<std::pair<int, int>> k4edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4edges.emplace_back(u, v);
    auto tris = list_triangles(Graph::build(4, k4edges));
    REQUIRE(tris.size() == 4);
    CHECK(tris[0] == std::array<int, 3>{0, 1, 2});
    CHECK(tris[3] == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("induced subgraphs with relabeling") {
    Graph c5 = cycle_graph(5);
    auto whole = induced_subgraph(c5, VertexSet::full(5));
    CHECK(whole.graph.edge_count() == 5);

    auto arc = induced_subgraph(c5, VertexSet({0, 1, 2}));
    CHECK(arc.graph.edge_count() == 2);
    CHECK(arc.graph.degree(1) == 2); // path center
    CHECK(arc.to_host == std::vector<int>{0, 1, 2});

    std::vector<std::pair<int, int>> k4edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4edges.emplace_back(u, v);
    auto pair = induced_subgraph(Graph::build(4, k4edges), VertexSet({0, 1}));
    CHECK(pair.graph.edge_count() == 1);

    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet({0, 9})), Error);
}

TEST_CASE("bipartiteness with verified witnesses") {
    auto r4 = is_bipartite(cycle_graph(4));
    CHECK(r4.bipartite);

    auto r5 = is_bipartite(cycle_graph(5));
    CHECK(!r5.bipartite);
    REQUIRE(r5.odd_cycle.size() >= 3);
    CHECK(r5.odd_cycle.size() % 2 == 1);
    // odd cycle witness is a real cycle in the graph
    Graph c5 = cycle_graph(5);
    for (size_t i = 0; i < r5.odd_cycle.size(); ++i)
        CHECK(c5.adjacent(r5.odd_cycle[i], r5.odd_cycle[(i + 1) % r5.odd_cycle.size()]));

    CHECK(is_bipartite(complete_bipartite(3, 3)).bipartite);

    // 2-coloring witness is proper on every bipartite catalog graph
    for (const Graph& g : graphs_on(6)) {
        auto res = is_bipartite(g);
        if (res.bipartite) {
            for (auto [u, v] : g.edges()) CHECK(res.side[u] != res.side[v]);
        } else {
            CHECK(res.odd_cycle.size() % 2 == 1);
            for (size_t i = 0; i < res.odd_cycle.size(); ++i)
                CHECK(g.adjacent(res.odd_cycle[i], res.odd_cycle[(i + 1) % res.odd_cycle.size()]));
        }
    }
}

TEST_CASE("peeling to a degree threshold") {
    CHECK(peel_to_min_degree(cycle_graph(5), Rational(2)).size() == 5);

    Graph star = complete_bipartite(1, 5);
    CHECK(peel_to_min_degree(star, Rational(2)).empty());

    // K_4 plus pendant vertex: peeling at 3 keeps exactly the K_4
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
    edges.emplace_back(3, 4);
    Graph g = Graph::build(5, edges);
    CHECK(peel_to_min_degree(g, Rational(3)) == VertexSet({0, 1, 2, 3}));
}

TEST_CASE("peeling guarantee: half the average degree survives") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : graphs_on(n)) {
            Rational avg = g.average_degree();
            if (avg == 0) continue;
            VertexSet core = peel_to_min_degree(g, avg / 2);
            REQUIRE(!core.empty());
            Graph h = induced_subgraph(g, core).graph;
            CHECK(Rational(h.min_degree()) >= avg / 2);
            CHECK(h.average_degree() >= avg / 2);
        }
    }
}

TEST_CASE("edge list round trip") {
    Graph g = named_fixture("petersen");
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    Graph back = read_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());

    std::istringstream bad("3");
    CHECK_THROWS_AS(read_edge_list(bad), Error);
}
