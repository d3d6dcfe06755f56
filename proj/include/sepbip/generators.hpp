#pragma once

#include <cstdint>
#include <string>

#include "sepbip/graph.hpp"
#include "sepbip/rational.hpp"

namespace sepbip {

enum class GenKind {
    Gnp,
    TriangleFree,
    KrFree,
    HighGirth,
    CompleteBipartite,
    Cycle,
    NamedFixture,
};

GenKind parse_gen_kind(const std::string& s);
std::string gen_kind_name(GenKind k);

// One record per construction; rational parameters, 64-bit seed.
struct GenSpec {
    GenKind kind = GenKind::Gnp;
    int n = 0;
    int b = 0;             // second part size for complete_bipartite
    Rational p = 0;        // gnp edge probability
    Rational d_param = 0;  // triangle-free density parameter D
    Rational c_param = Rational(1, 2); // leading constant for kr_free / high_girth
    int r = 0;             // forbidden clique order
    int g = 0;             // girth target
    std::string fixture;
    uint64_t seed = 0;
};

// G(n,p): pair (u,v), u < v, has rank u*n - u*(u+1)/2 + (v-u-1); the pair is
// an edge iff stream_u64(seed, rank) < floor(p * 2^64). Sampling order never
// affects the result.
Graph gnp(int n, const Rational& p, uint64_t seed);

struct TriangleFreeStats {
    Rational p;            // realized edge probability
    int initial_triangles = 0;
    int vertices_deleted = 0;
    int min_degree_before = 0;
    int max_degree_before = 0;
    int min_degree_after = 0;
    int max_degree_after = 0;
    int vertices_after = 0;
    int edges_after = 0;
};

// G(n, D*n^(-2/3)) followed by repeated deletion of the lowest-id vertex of
// the lexicographically first triangle, until triangle-free.
// Requires 0 < D < 2^(-1/4).
std::pair<Graph, TriangleFreeStats> triangle_free_construction(int n, const Rational& D,
                                                               uint64_t seed);

struct DeletionStats {
    Rational p;
    int vertices_deleted = 0;
};

// G(n, c*n^(-2/r)) followed by deletion of the lowest-id vertex of the
// lexicographically first K_r until K_r-free. r >= 3.
std::pair<Graph, DeletionStats> kr_free_construction(int n, int r, uint64_t seed,
                                                     const Rational& c = Rational(1, 2));

// G(n, c*n^(-1+1/(g-1))) followed by deletion of the lowest-id vertex on a
// shortest cycle until girth >= g. g >= 4.
std::pair<Graph, DeletionStats> high_girth_construction(int n, int g, uint64_t seed,
                                                        const Rational& c = Rational(1, 2));

// Independent bounded search, used to verify the K_r-free postcondition.
bool has_clique(const Graph& g, int r);

Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph named_fixture(const std::string& name); // petersen, grotzsch

Graph generate(const GenSpec& spec, TriangleFreeStats* tf_stats = nullptr,
               DeletionStats* del_stats = nullptr);

} // namespace sepbip
