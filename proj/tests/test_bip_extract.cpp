#include <doctest.h>

#include "sepbip/bip_extract.hpp"
#include "sepbip/catalog.hpp"
#include "sepbip/error.hpp"
#include "sepbip/generators.hpp"
#include "sepbip/rng.hpp"

using namespace sepbip;

namespace {

Graph k_n(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

} // namespace

TEST_CASE("witness construction recomputes and verifies") {
    Graph k33 = complete_bipartite(3, 3);
    BipartiteWitness w = make_bipartite_witness(k33, VertexSet({0, 1, 2}), VertexSet({3, 4, 5}));
    CHECK(w.edge_count == 9);
    CHECK(w.avg_degree == 3);
    CHECK(w.min_degree == 3);

    // parts sharing a vertex are rejected
    CHECK_THROWS_AS(make_bipartite_witness(k33, VertexSet({0, 1}), VertexSet({1, 3})), Error);
    // non-stable part rejected
    CHECK_THROWS_AS(make_bipartite_witness(cycle_graph(4), VertexSet({0, 1}), VertexSet({2})), Error);
}

TEST_CASE("extraction from a distribution") {
    Graph k33 = complete_bipartite(3, 3);
    auto [k, col] = chromatic_number_exact(k33);
    BipartiteWitness w = extract_from_distribution(k33, coloring_to_distribution(k33, col));
    CHECK(w.avg_degree == 3); // whole graph; guarantee was only 3/2
    CHECK(w.avg_degree >= k33.average_degree() / Rational(2));

    // C_5 through the flattened optimal fractional coloring: d/k = 2/(5/2)
    Graph c5 = cycle_graph(5);
    StableSetDistribution dist =
        fractional_to_distribution(c5, fractional_chromatic_exact(c5).coloring);
    BipartiteWitness wc5 = extract_from_distribution(c5, dist);
    CHECK(wc5.avg_degree >= Rational(4, 5));
    CHECK(wc5.edge_count >= 1);

    // single edge with its 2-coloring: the edge itself
    Graph k2 = k_n(2);
    BipartiteWitness we =
        extract_from_distribution(k2, coloring_to_distribution(k2, chromatic_number_exact(k2).second));
    CHECK(we.avg_degree == 1);
    CHECK(we.part1 == VertexSet({0}));
    CHECK(we.part2 == VertexSet({1}));

    // non-uniform marginals are a precondition violation
    StableSetDistribution bad;
    bad.support = {VertexSet({0}), VertexSet({1}), VertexSet({0})};
    CHECK_THROWS_AS(extract_from_distribution(k2, bad), Error);
}

TEST_CASE("extraction from a proper coloring") {
    Graph k33 = complete_bipartite(3, 3);
    BipartiteWitness w = extract_from_coloring(k33, chromatic_number_exact(k33).second);
    CHECK(w.min_degree == 3);
    CHECK(w.min_degree >= 1); // guarantee 3/4 rounds up to an edge

    Graph c5 = cycle_graph(5);
    BipartiteWitness wc5 = extract_from_coloring(c5, chromatic_number_exact(c5).second);
    CHECK(Rational(wc5.min_degree) >= Rational(2, 6));
    CHECK(wc5.min_degree >= 1);

    Graph k4 = k_n(4);
    BipartiteWitness wk4 = extract_from_coloring(k4, chromatic_number_exact(k4).second);
    CHECK(wk4.edge_count == 1);
    CHECK(wk4.min_degree == 1);
    CHECK(Rational(wk4.min_degree) >= Rational(3, 8));
}

TEST_CASE("aks peeling") {
    Graph c6 = cycle_graph(6);
    AksPeeling whole = aks_peeling_coloring(c6, 0);
    REQUIRE(whole.classes.size() == 2);
    CHECK(whole.classes[0].size() == 3);
    CHECK(whole.classes[1].size() == 3);
    CHECK(whole.leftover.empty());

    AksPeeling none = aks_peeling_coloring(c6, 6);
    CHECK(none.classes.empty());
    CHECK(none.leftover.size() == 6);

    // any two maximum stable sets of the petersen graph intersect, so after
    // the first class of 4 only 3-sets remain
    AksPeeling pet = aks_peeling_coloring(named_fixture("petersen"), 2);
    REQUIRE(pet.classes.size() == 3);
    CHECK(pet.classes[0] == VertexSet({0, 2, 8, 9}));
    CHECK(pet.classes[1].size() == 3);
    CHECK(pet.classes[2].size() == 3);
    CHECK(pet.leftover.empty());
    CHECK(pet.covered == 10);
    CHECK(pet.min_class_size == 3);

    // classes are disjoint stable sets
    for (size_t i = 0; i < pet.classes.size(); ++i) {
        CHECK(named_fixture("petersen").is_stable_set(pet.classes[i]));
        for (size_t j = i + 1; j < pet.classes.size(); ++j)
            for (int v : pet.classes[i].members()) CHECK(!pet.classes[j].contains(v));
    }
}

TEST_CASE("best semi-bipartite subgraph") {
    Graph k33 = complete_bipartite(3, 3);
    SemiBipartiteWitness w = best_semi_bipartite(k33, SemiMode::Exact);
    CHECK(w.avg_degree == 3);

    // C_5: a non-adjacent pair against the rest, 4 cross edges, 8/5
    Graph c5 = cycle_graph(5);
    SemiBipartiteWitness wc5 = best_semi_bipartite(c5, SemiMode::Exact);
    CHECK(wc5.avg_degree == Rational(8, 5));
    CHECK(wc5.stable_part.size() == 2);
    CHECK(wc5.other_part.size() == 3);
    CHECK(wc5.cross_edge_count == 4);
    LnInterval ln2 = ln_interval(2);
    CHECK(wc5.avg_degree >= ln2.hi / 2);

    // heuristic modes never beat exact and their witnesses verify
    SemiBipartiteWitness sampled = best_semi_bipartite(c5, SemiMode::Sampled, 11, 50);
    CHECK(sampled.avg_degree <= wc5.avg_degree);
    SemiBipartiteWitness local = best_semi_bipartite(c5, SemiMode::LocalSearch, 11, 8);
    CHECK(local.avg_degree <= wc5.avg_degree);
    CHECK(local.avg_degree == wc5.avg_degree); // c5 is easy to hill-climb

    // determinism
    SemiBipartiteWitness again = best_semi_bipartite(c5, SemiMode::LocalSearch, 11, 8);
    CHECK(again.stable_part == local.stable_part);
    CHECK(again.other_part == local.other_part);
}

TEST_CASE("semi-bipartite guarantee holds on the small catalog") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : connected_graphs_on(n)) {
            if (g.min_degree() < 1) continue;
            SemiBipartiteWitness w = best_semi_bipartite(g, SemiMode::Exact);
            LnInterval iv = ln_interval(static_cast<unsigned long>(g.min_degree()));
            CHECK(w.avg_degree >= iv.hi / 2);
        }
    }
}

TEST_CASE("trim to equal parts") {
    // |a| = |b|: unchanged
    Graph k33 = complete_bipartite(3, 3);
    TrimResult same = trim_equal_parts(k33, VertexSet({0, 1, 2}), VertexSet({3, 4, 5}));
    CHECK(same.a_trimmed == VertexSet({0, 1, 2}));
    CHECK(same.certified);

    // degrees into b of (3,2,1,0): keeps the two largest
    std::vector<std::pair<int, int>> edges = {
        {0, 4}, {0, 5}, {0, 6}, // degree 3 into b
        {1, 4}, {1, 5},         // degree 2
        {2, 4},                 // degree 1
    };
    Graph g = Graph::build(7, edges);
    TrimResult top = trim_equal_parts(g, VertexSet({0, 1, 2, 3}), VertexSet({4, 5}));
    CHECK(top.a_trimmed == VertexSet({0, 1}));
    CHECK(top.certified);

    CHECK_THROWS_AS(trim_equal_parts(g, VertexSet({0, 1}), VertexSet({1, 2})), Error);
    CHECK_THROWS_AS(trim_equal_parts(g, VertexSet({0}), VertexSet({4, 5})), Error);

    // random bipartite instances: certified ratio always holds, exactly
    SeqRng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        int a = 2 + static_cast<int>(rng.below(5));
        int b = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(a)));
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (rng.next() % 2) es.emplace_back(u, a + v);
        Graph h = Graph::build(a + b, es);
        std::vector<int> av, bv;
        for (int u = 0; u < a; ++u) av.push_back(u);
        for (int v = 0; v < b; ++v) bv.push_back(a + v);
        TrimResult r = trim_equal_parts(h, VertexSet(av), VertexSet(bv));
        CHECK(r.certified);
        CHECK(2 * r.avg_after >= r.avg_before);
    }
}

TEST_CASE("exhaustive bipartite oracle") {
    BipartiteWitness c5 = max_bip_induced_oracle(cycle_graph(5));
    CHECK(c5.avg_degree == Rational(3, 2)); // induced path on 4 vertices

    CHECK(max_bip_induced_oracle(complete_bipartite(3, 3)).avg_degree == 3);
    CHECK(max_bip_induced_oracle(k_n(4)).avg_degree == 1);

    CHECK_THROWS_AS(max_bip_induced_oracle(gnp(20, Rational(1, 2), 3)), Error);
}

TEST_CASE("oracle dominates every extraction method") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : connected_graphs_on(n)) {
            BipartiteWitness oracle = max_bip_induced_oracle(g);

            auto [chi, col] = chromatic_number_exact(g);
            CHECK(oracle.avg_degree >= extract_from_coloring(g, col).avg_degree);
            CHECK(oracle.avg_degree >=
                  extract_from_distribution(g, coloring_to_distribution(g, col)).avg_degree);

            StableSetDistribution flat =
                fractional_to_distribution(g, fractional_chromatic_exact(g).coloring);
            CHECK(oracle.avg_degree >= extract_from_distribution(g, flat).avg_degree);
        }
    }
}

TEST_CASE("fractional and integral extraction guarantees on the small catalog") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : connected_graphs_on(n)) {
            Rational d_avg = g.average_degree();
            FractionalSolution frac = fractional_chromatic_exact(g);
            StableSetDistribution dist = fractional_to_distribution(g, frac.coloring);
            BipartiteWitness wf = extract_from_distribution(g, dist);
            CHECK(wf.avg_degree >= d_avg / frac.coloring.value);

            auto [chi, col] = chromatic_number_exact(g);
            BipartiteWitness wi = extract_from_coloring(g, col);
            CHECK(Rational(wi.min_degree) >= Rational(g.min_degree(), 2 * chi));
        }
    }
}
