#include <doctest.h>

#include "sepbip/catalog.hpp"
#include "sepbip/error.hpp"
#include "sepbip/generators.hpp"
#include "sepbip/graph.hpp"

using namespace sepbip;

TEST_CASE("gnp endpoints and determinism") {
    CHECK(gnp(30, Rational(0), 7).edge_count() == 0);
    CHECK(gnp(5, Rational(1), 7).edge_count() == 10);

    Graph a = gnp(1000, Rational(1, 100), 1);
    Graph b = gnp(1000, Rational(1, 100), 1);
    CHECK(a.edges() == b.edges());
    Graph c = gnp(1000, Rational(1, 100), 2);
    CHECK(a.edges() != c.edges());

    // edge frequency sane at p = 1/2 (choose(60,2) = 1770 pairs)
    Graph half = gnp(60, Rational(1, 2), 3);
    CHECK(half.edge_count() > 700);
    CHECK(half.edge_count() < 1070);

    CHECK_THROWS_AS(gnp(5, Rational(3, 2), 0), Error);
}

TEST_CASE("triangle-free construction postconditions") {
    for (uint64_t seed = 0; seed < 4; ++seed) {
        auto [g, stats] = triangle_free_construction(500, Rational(1, 2), seed);
        CHECK(list_triangles(g).empty());
        CHECK(g.vertex_count() == 500 - stats.vertices_deleted);
        CHECK(stats.vertices_after == g.vertex_count());
        CHECK(stats.edges_after == g.edge_count());
    }
    CHECK_THROWS_AS(triangle_free_construction(100, Rational(9, 10), 0), Error);
    CHECK_THROWS_AS(triangle_free_construction(100, Rational(0), 0), Error);
}

TEST_CASE("triangle-free construction matches its statistics at scale") {
    // one full-size instance; the acceptance suite sweeps 20 seeds
    auto [g, stats] = triangle_free_construction(10000, Rational(1, 2), 1);
    CHECK(list_triangles(g).empty());
    // initial triangle count concentrates near D^3*n/6 ~ 208
    CHECK(stats.initial_triangles > 80);
    CHECK(stats.initial_triangles < 450);
    // most degrees inside the asymptotic window [~2.36, ~16.16]
    int in_window = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d >= 3 && d <= 16) ++in_window;
    }
    CHECK(in_window > g.vertex_count() * 8 / 10);
}

TEST_CASE("kr-free construction") {
    for (uint64_t seed = 0; seed < 3; ++seed) {
        auto [g, stats] = kr_free_construction(300, 4, seed);
        CHECK(!has_clique(g, 4));
        CHECK(stats.vertices_deleted >= 0);
    }
    // r=3 is the triangle-free regime: same p-scale, output triangle-free
    auto [g3, st3] = kr_free_construction(400, 3, 5);
    CHECK(list_triangles(g3).empty());
    auto [gt, stt] = triangle_free_construction(400, Rational(1, 2), 5);
    CHECK(st3.p == stt.p);
    CHECK_THROWS_AS(kr_free_construction(50, 2, 0), Error);
}

TEST_CASE("high-girth construction") {
    for (uint64_t seed = 0; seed < 3; ++seed) {
        auto [g, stats] = high_girth_construction(300, 5, seed);
        auto gi = girth(g);
        if (gi.has_value()) CHECK(*gi >= 5);
        CHECK(g.vertex_count() == 300 - stats.vertices_deleted);
    }
    auto [g4, st4] = high_girth_construction(400, 4, 9);
    CHECK(list_triangles(g4).empty());
    CHECK_THROWS_AS(high_girth_construction(50, 3, 0), Error);
}

TEST_CASE("high-girth keeps a usable graph at the spec scale") {
    auto [g, stats] = high_girth_construction(2000, 5, 1);
    auto gi = girth(g);
    if (gi.has_value()) CHECK(*gi >= 5);
    CHECK(g.vertex_count() > 1900);
    CHECK(g.edge_count() > 0);
}

TEST_CASE("fixed constructions") {
    Graph k33 = complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(k33.degree(v) == 3);

    CHECK(canonical_code(cycle_graph(4)) == canonical_code(complete_bipartite(2, 2)));

    Graph pet = named_fixture("petersen");
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(girth(pet) == 5);

    Graph gro = named_fixture("grotzsch");
    CHECK(gro.vertex_count() == 11);
    CHECK(gro.edge_count() == 20);
    CHECK(list_triangles(gro).empty());

    CHECK_THROWS_AS(named_fixture("heawood"), Error);
}

TEST_CASE("generator determinism across kinds") {
    GenSpec spec;
    spec.kind = GenKind::TriangleFree;
    spec.n = 400;
    spec.d_param = Rational(1, 2);
    spec.seed = 42;
    Graph a = generate(spec);
    Graph b = generate(spec);
    CHECK(a.edges() == b.edges());
}
