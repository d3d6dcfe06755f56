#include "sepbip/generators.hpp"

#include <algorithm>
#include <deque>

#include "sepbip/error.hpp"
#include "sepbip/rng.hpp"

namespace sepbip {

GenKind parse_gen_kind(const std::string& s) {
    if (s == "gnp") return GenKind::Gnp;
    if (s == "triangle_free") return GenKind::TriangleFree;
    if (s == "kr_free") return GenKind::KrFree;
    if (s == "high_girth") return GenKind::HighGirth;
    if (s == "complete_bipartite") return GenKind::CompleteBipartite;
    if (s == "cycle") return GenKind::Cycle;
    if (s == "named_fixture") return GenKind::NamedFixture;
    fail(ErrorCode::BadParameter, "unknown generator kind: " + s);
}

std::string gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Gnp: return "gnp";
        case GenKind::TriangleFree: return "triangle_free";
        case GenKind::KrFree: return "kr_free";
        case GenKind::HighGirth: return "high_girth";
        case GenKind::CompleteBipartite: return "complete_bipartite";
        case GenKind::Cycle: return "cycle";
        case GenKind::NamedFixture: return "named_fixture";
    }
    return "?";
}

namespace {

// floor(p * 2^64), clamped to [0, 2^64]; the pair is kept iff hash < threshold.
// Keeping probability matches p to within 2^-64.
struct EdgeThreshold {
    bool all = false;
    bool none = false;
    uint64_t t = 0;
};

EdgeThreshold make_threshold(const Rational& p) {
    EdgeThreshold th;
    if (p <= 0) {
        th.none = true;
        return th;
    }
    if (p >= 1) {
        th.all = true;
        return th;
    }
    BigInt scaled = p.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 64);
    BigInt q = scaled / p.get_den();
    th.t = mpz_get_ui(q.get_mpz_t()); // p < 1 so q < 2^64; low limb on 64-bit
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 64) fail(ErrorCode::Internal, "threshold overflow");
    return th;
}

uint64_t pair_rank(int u, int v, int n) {
    // u < v
    return static_cast<uint64_t>(u) * n - static_cast<uint64_t>(u) * (u + 1) / 2 + (v - u - 1);
}

std::vector<std::pair<int, int>> sample_pairs(int n, const Rational& p, uint64_t seed) {
    EdgeThreshold th = make_threshold(p);
    std::vector<std::pair<int, int>> edges;
    if (th.none) return edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (th.all || stream_u64(seed, pair_rank(u, v, n)) < th.t)
                edges.emplace_back(u, v);
        }
    }
    return edges;
}

// Compact adjacency-bitset workspace for the deletion loops.
struct Bitsets {
    int n;
    int words;
    std::vector<uint64_t> rows;
    std::vector<bool> alive;

    Bitsets(int n_, const std::vector<std::pair<int, int>>& edges)
        : n(n_), words((n_ + 63) / 64), rows(static_cast<size_t>(n_) * words, 0), alive(n_, true) {
        for (auto [u, v] : edges) {
            set(u, v);
            set(v, u);
        }
    }
    void set(int u, int v) { rows[static_cast<size_t>(u) * words + v / 64] |= uint64_t(1) << (v % 64); }
    bool get(int u, int v) const {
        return rows[static_cast<size_t>(u) * words + v / 64] >> (v % 64) & 1;
    }
    void kill(int v) {
        alive[v] = false;
        for (int u = 0; u < n; ++u)
            rows[static_cast<size_t>(u) * words + v / 64] &= ~(uint64_t(1) << (v % 64));
        uint64_t* row = &rows[static_cast<size_t>(v) * words];
        std::fill(row, row + words, 0);
    }
    const uint64_t* row(int v) const { return &rows[static_cast<size_t>(v) * words]; }
};

Graph compact(const Bitsets& bs) {
    std::vector<int> remap(bs.n, -1);
    int next = 0;
    for (int v = 0; v < bs.n; ++v)
        if (bs.alive[v]) remap[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < bs.n; ++u) {
        if (!bs.alive[u]) continue;
        const uint64_t* row = bs.row(u);
        for (int w = u / 64; w < bs.words; ++w) {
            uint64_t word = row[w];
            if (w == u / 64) word &= ~((uint64_t(2) << (u % 64)) - 1); // v > u only
            while (word) {
                int v = w * 64 + __builtin_ctzll(word);
                word &= word - 1;
                edges.emplace_back(remap[u], remap[v]);
            }
        }
    }
    return Graph::build(next, edges);
}

int count_triangles(const Graph& g) {
    int count = 0;
    for (auto [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) ++i;
            else if (nu[i] > nv[j]) ++j;
            else {
                if (nu[i] > v) ++count;
                ++i, ++j;
            }
        }
    }
    return count;
}

// First vertex of the lexicographically first triangle with least vertex
// >= start, or -1.
int first_triangle_vertex(const Bitsets& bs, int start) {
    for (int i = start; i < bs.n; ++i) {
        if (!bs.alive[i]) continue;
        const uint64_t* ri = bs.row(i);
        for (int j = i + 1; j < bs.n; ++j) {
            if (!bs.get(i, j)) continue;
            const uint64_t* rj = bs.row(j);
            for (int w = j / 64; w < bs.words; ++w) {
                uint64_t common = ri[w] & rj[w];
                if (w == j / 64) common &= ~((uint64_t(2) << (j % 64)) - 1); // only k > j
                if (common) return i;
            }
        }
    }
    return -1;
}

} // namespace

Graph gnp(int n, const Rational& p, uint64_t seed) {
    if (n < 0) fail(ErrorCode::BadParameter, "negative n");
    if (p < 0 || p > 1) fail(ErrorCode::BadParameter, "p outside [0,1]");
    return Graph::build(n, sample_pairs(n, p, seed));
}

std::pair<Graph, TriangleFreeStats> triangle_free_construction(int n, const Rational& D,
                                                               uint64_t seed) {
    if (D <= 0 || D * D * D * D >= Rational(1, 2))
        fail(ErrorCode::BadParameter, "need 0 < D < 2^(-1/4)");
    TriangleFreeStats stats;
    stats.p = D * neg_power(n, 2, 3);
    if (stats.p > 1) stats.p = 1;
    Graph initial = gnp(n, stats.p, seed);
    stats.initial_triangles = count_triangles(initial);
    stats.min_degree_before = initial.min_degree();
    stats.max_degree_before = initial.max_degree();

    Bitsets bs(n, initial.edges());
    int start = 0;
    while (true) {
        int victim = first_triangle_vertex(bs, start);
        if (victim == -1) break;
        bs.kill(victim);
        ++stats.vertices_deleted;
        start = victim + 1; // remaining triangles have least vertex > victim
    }
    Graph out = compact(bs);
    stats.min_degree_after = out.min_degree();
    stats.max_degree_after = out.max_degree();
    stats.vertices_after = out.vertex_count();
    stats.edges_after = out.edge_count();
    return {std::move(out), stats};
}

namespace {

// Lexicographically first r-clique with least vertex >= start; empty if none.
std::vector<int> first_clique(const Bitsets& bs, int r, int start) {
    std::vector<int> prefix;
    std::vector<uint64_t> all(bs.words, 0);
    for (int v = 0; v < bs.n; ++v)
        if (bs.alive[v]) all[v / 64] |= uint64_t(1) << (v % 64);

    std::vector<int> result;
    // depth-first, candidates ascending: first complete clique is lex-least
    auto rec = [&](auto&& self, const std::vector<uint64_t>& candidates, int depth) -> bool {
        if (depth == r) {
            result = prefix;
            return true;
        }
        int popcount = 0;
        for (uint64_t w : candidates) popcount += __builtin_popcountll(w);
        if (depth + popcount < r) return false;
        for (int w = 0; w < bs.words; ++w) {
            uint64_t word = candidates[w];
            while (word) {
                int bit = __builtin_ctzll(word);
                word &= word - 1;
                int v = w * 64 + bit;
                std::vector<uint64_t> next(bs.words);
                const uint64_t* rv = bs.row(v);
                for (int x = 0; x < bs.words; ++x) next[x] = candidates[x] & rv[x];
                // restrict to > v
                next[v / 64] &= ~((uint64_t(2) << (v % 64)) - 1);
                for (int x = 0; x < v / 64; ++x) next[x] = 0;
                prefix.push_back(v);
                if (self(self, next, depth + 1)) return true;
                prefix.pop_back();
            }
        }
        return false;
    };
    std::vector<uint64_t> init = all;
    if (start > 0) {
        for (int x = 0; x < start / 64; ++x) init[x] = 0;
        if (start / 64 < bs.words) init[start / 64] &= ~((uint64_t(1) << (start % 64)) - 1);
    }
    rec(rec, init, 0);
    return result;
}

struct ShortCycle {
    int length = -1;
    std::vector<int> vertices;
};

// Shortest cycle of length < g among alive vertices; deterministic choice:
// roots scanned ascending, strictly better lengths replace.
ShortCycle find_short_cycle(const Bitsets& bs, const std::vector<std::vector<int>>& adj, int g) {
    ShortCycle best;
    int n = bs.n;
    int cap = g / 2; // BFS depth sufficient to detect any cycle shorter than g
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        if (!bs.alive[root]) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        int found = -1, fu = -1, fw = -1;
        while (!q.empty() && found == -1) {
            int u = q.front();
            q.pop_front();
            if (dist[u] >= cap) break;
            for (int w : adj[u]) {
                if (!bs.alive[w]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (len < g) {
                        found = len;
                        fu = u;
                        fw = w;
                        break;
                    }
                }
            }
        }
        if (found != -1 && (best.length == -1 || found < best.length)) {
            // reconstruct through the BFS tree; the walk contains a cycle of
            // length <= found, and trimming at the meeting vertex yields it
            std::vector<int> pu{fu}, pw{fw};
            int a = fu, b = fw;
            while (dist[a] > dist[b]) pu.push_back(a = parent[a]);
            while (dist[b] > dist[a]) pw.push_back(b = parent[b]);
            while (a != b) {
                pu.push_back(a = parent[a]);
                pw.push_back(b = parent[b]);
            }
            std::vector<int> cyc = pu;
            for (auto it = pw.rbegin(); it != pw.rend(); ++it)
                if (*it != a) cyc.push_back(*it);
            best.length = found;
            best.vertices = cyc;
        }
    }
    return best;
}

} // namespace

std::pair<Graph, DeletionStats> kr_free_construction(int n, int r, uint64_t seed,
                                                     const Rational& c) {
    if (r < 3) fail(ErrorCode::BadParameter, "kr_free needs r >= 3");
    if (c <= 0) fail(ErrorCode::BadParameter, "kr_free needs c > 0");
    DeletionStats stats;
    stats.p = c * neg_power(n, 2, static_cast<unsigned long>(r));
    if (stats.p > 1) stats.p = 1;
    Graph initial = gnp(n, stats.p, seed);
    Bitsets bs(n, initial.edges());
    int start = 0;
    while (true) {
        std::vector<int> clique = first_clique(bs, r, start);
        if (clique.empty()) break;
        bs.kill(clique[0]);
        ++stats.vertices_deleted;
        start = clique[0] + 1;
    }
    return {compact(bs), stats};
}

std::pair<Graph, DeletionStats> high_girth_construction(int n, int g, uint64_t seed,
                                                        const Rational& c) {
    if (g < 4) fail(ErrorCode::BadParameter, "high_girth needs g >= 4");
    if (c <= 0) fail(ErrorCode::BadParameter, "high_girth needs c > 0");
    DeletionStats stats;
    // p = c * n^(1/(g-1)) / n
    BigInt root = scaled_root(BigInt(n), static_cast<unsigned long>(g - 1));
    Rational scale(root, BigInt(n) << 32);
    scale.canonicalize();
    stats.p = c * scale;
    if (stats.p > 1) stats.p = 1;
    Graph initial = gnp(n, stats.p, seed);
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : initial.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    Bitsets bs(n, initial.edges());
    while (true) {
        ShortCycle cyc = find_short_cycle(bs, adj, g);
        if (cyc.length == -1) break;
        int victim = *std::min_element(cyc.vertices.begin(), cyc.vertices.end());
        bs.kill(victim);
        ++stats.vertices_deleted;
    }
    return {compact(bs), stats};
}

bool has_clique(const Graph& g, int r) {
    if (r <= 1) return g.vertex_count() >= r;
    Bitsets bs(g.vertex_count(), g.edges());
    return !first_clique(bs, r, 0).empty();
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) fail(ErrorCode::BadParameter, "negative part size");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::build(a + b, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) fail(ErrorCode::BadParameter, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, edges);
}

Graph named_fixture(const std::string& name) {
    if (name == "petersen") {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5); // outer cycle
            edges.emplace_back(i, i + 5);       // spoke
            edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        }
        return Graph::build(10, edges);
    }
    if (name == "grotzsch") {
        // Mycielski construction over C_5: 0..4 cycle, 5..9 shadows, 10 apex
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(5 + i, (i + 1) % 5);
            edges.emplace_back(5 + i, (i + 4) % 5);
            edges.emplace_back(5 + i, 10);
        }
        return Graph::build(11, edges);
    }
    fail(ErrorCode::UnknownFixture, "unknown fixture: " + name);
}

Graph generate(const GenSpec& spec, TriangleFreeStats* tf_stats, DeletionStats* del_stats) {
    switch (spec.kind) {
        case GenKind::Gnp:
            return gnp(spec.n, spec.p, spec.seed);
        case GenKind::TriangleFree: {
            auto [g, st] = triangle_free_construction(spec.n, spec.d_param, spec.seed);
            if (tf_stats) *tf_stats = st;
            return std::move(g);
        }
        case GenKind::KrFree: {
            auto [g, st] = kr_free_construction(spec.n, spec.r, spec.seed, spec.c_param);
            if (del_stats) *del_stats = st;
            return std::move(g);
        }
        case GenKind::HighGirth: {
            auto [g, st] = high_girth_construction(spec.n, spec.g, spec.seed, spec.c_param);
            if (del_stats) *del_stats = st;
            return std::move(g);
        }
        case GenKind::CompleteBipartite:
            return complete_bipartite(spec.n, spec.b);
        case GenKind::Cycle:
            return cycle_graph(spec.n);
        case GenKind::NamedFixture:
            return named_fixture(spec.fixture);
    }
    fail(ErrorCode::Internal, "unreachable generator kind");
}

} // namespace sepbip
