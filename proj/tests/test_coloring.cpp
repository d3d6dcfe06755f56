#include <doctest.h>

#include "sepbip/catalog.hpp"
#include "sepbip/coloring.hpp"
#include "sepbip/error.hpp"
#include "sepbip/generators.hpp"
#include "sepbip/simplex.hpp"

using namespace sepbip;

namespace {

Graph k_n(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

// independent dual feasibility check: y is a fractional clique
void check_dual_certificate(const Graph& g, const FractionalSolution& sol) {
    Rational dual_value = 0;
    for (const Rational& y : sol.dual) {
        CHECK(y >= 0);
        dual_value += y;
    }
    CHECK(dual_value == sol.coloring.value);
    // every stable set S must satisfy sum_{v in S} y_v <= 1; checking all
    // stable sets covers the maximal ones
    StableSetFamily fam = enumerate_stable_sets(g);
    for (const VertexSet& s : fam.all_sets) {
        Rational total = 0;
        for (int v : s.members()) total += sol.dual[v];
        CHECK(total <= 1);
    }
}

} // namespace

TEST_CASE("greedy coloring stays within degeneracy + 1") {
    Graph tree = Graph::build(6, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    ProperColoring t = greedy_coloring(tree);
    t.validate(tree);
    CHECK(t.k <= 2);

    ProperColoring c5 = greedy_coloring(cycle_graph(5));
    c5.validate(cycle_graph(5));
    CHECK(c5.k <= 3);

    Graph kdd = complete_bipartite(4, 4);
    ProperColoring b = greedy_coloring(kdd);
    b.validate(kdd);
    CHECK(b.k <= degeneracy_order(kdd).degeneracy + 1);
    CHECK(b.k == 2); // realized by the degeneracy order

    for (const Graph& g : graphs_on(6)) {
        ProperColoring c = greedy_coloring(g);
        c.validate(g);
        CHECK(c.k <= degeneracy_order(g).degeneracy + 1);
    }
}

TEST_CASE("exact chromatic number") {
    CHECK(chromatic_number_exact(cycle_graph(5)).first == 3);
    CHECK(chromatic_number_exact(complete_bipartite(3, 3)).first == 2);
    CHECK(chromatic_number_exact(named_fixture("petersen")).first == 3);
    CHECK(chromatic_number_exact(named_fixture("grotzsch")).first == 4);
    CHECK(chromatic_number_exact(k_n(7)).first == 7);

    auto [k, col] = chromatic_number_exact(named_fixture("petersen"));
    col.validate(named_fixture("petersen"));
    CHECK(col.k == k);

    CHECK_THROWS_AS(chromatic_number_exact(gnp(25, Rational(1, 2), 1)), Error);
}

TEST_CASE("exact fractional chromatic number") {
    FractionalSolution c5 = fractional_chromatic_exact(cycle_graph(5));
    CHECK(c5.coloring.value == Rational(5, 2));
    check_dual_certificate(cycle_graph(5), c5);

    CHECK(fractional_chromatic_exact(complete_bipartite(3, 3)).coloring.value == 2);
    CHECK(fractional_chromatic_exact(k_n(4)).coloring.value == 4);
    CHECK(fractional_chromatic_exact(named_fixture("petersen")).coloring.value == Rational(5, 2));

    // Kneser-type value demands non-integrality; weights reconstruct it exactly
    Rational total = 0;
    for (const Rational& w : c5.coloring.weights) total += w;
    CHECK(total == Rational(5, 2));
}

TEST_CASE("fractional optimum certified by duality on the catalog") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : graphs_on(n)) {
            FractionalSolution sol = fractional_chromatic_exact(g);
            check_dual_certificate(g, sol);
            // chi_f <= chi exactly
            auto [chi, witness] = chromatic_number_exact(g);
            CHECK(sol.coloring.value <= chi);
        }
    }
}

TEST_CASE("coloring to distribution") {
    Graph c4 = cycle_graph(4);
    auto [k, col] = chromatic_number_exact(c4);
    StableSetDistribution dist = coloring_to_distribution(c4, col);
    CHECK(dist.support.size() == 2);
    for (const Rational& p : dist.probabilities) CHECK(p == Rational(1, 2));
    for (const Rational& m : dist.marginals) CHECK(m == Rational(1, 2));

    Graph k3 = k_n(3);
    StableSetDistribution d3 = coloring_to_distribution(k3, chromatic_number_exact(k3).second);
    CHECK(d3.support.size() == 3);
    for (const VertexSet& s : d3.support) CHECK(s.size() == 1);
    for (const Rational& m : d3.marginals) CHECK(m == Rational(1, 3));
}

TEST_CASE("fractional distribution flattening") {
    // C_5 optimum is already uniform at 2/5
    Graph c5 = cycle_graph(5);
    FractionalSolution sol = fractional_chromatic_exact(c5);
    StableSetDistribution dist = fractional_to_distribution(c5, sol.coloring);
    for (const Rational& m : dist.marginals) CHECK(m == Rational(2, 5));

    // single vertex: point mass forced
    Graph k1 = Graph::build(1, std::vector<std::pair<int, int>>{});
    StableSetDistribution d1 =
        fractional_to_distribution(k1, fractional_chromatic_exact(k1).coloring);
    CHECK(d1.support.size() == 1);
    CHECK(d1.support[0] == VertexSet({0}));
    CHECK(d1.probabilities[0] == 1);

    // flattening normalizes every catalog graph to marginals exactly 1/k
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : graphs_on(n)) {
            FractionalSolution s = fractional_chromatic_exact(g);
            StableSetDistribution d = fractional_to_distribution(g, s.coloring);
            Rational target = 1 / s.coloring.value;
            for (const Rational& m : d.marginals) CHECK(m == target);
            Rational total = 0;
            for (const Rational& p : d.probabilities) total += p;
            CHECK(total == 1);
        }
    }
}

TEST_CASE("cover LP on hand-checked systems") {
    // rows {0,1}, columns {0}, {1}, {0,1}: optimum picks the double cover
    CoverLpResult lp = solve_cover_lp(2, {{0}, {1}, {0, 1}});
    CHECK(lp.value == 1);
    CHECK(lp.x[2] == 1);
    CHECK(lp.y[0] + lp.y[1] == 1);

    // rows pairwise covered: fractional optimum 3/2 (odd triangle cover)
    CoverLpResult tri = solve_cover_lp(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.value == Rational(3, 2));
}
