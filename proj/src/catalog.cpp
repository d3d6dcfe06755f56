#include "sepbip/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "sepbip/error.hpp"

namespace sepbip {

namespace {

// Graphs live as adjacency row masks during generation.
using Rows = std::vector<uint16_t>;

Rows to_rows(const Graph& g) {
    Rows rows(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        rows[u] |= uint16_t(1) << v;
        rows[v] |= uint16_t(1) << u;
    }
    return rows;
}

Graph from_code(int n, uint64_t code) {
    // mirrors the encoder: row i contributes bits for j = i-1 down to 0
    std::vector<std::pair<int, int>> edges;
    int bits = n * (n - 1) / 2;
    int idx = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (code >> (bits - 1 - idx) & 1) edges.emplace_back(j, i);
            ++idx;
        }
    }
    return Graph::build(n, edges);
}

// Lexicographically minimal code over all orderings. Partial orderings are
// advanced level by level, keeping exactly the prefixes that achieve the
// minimal row bits so far. States with identical placed-sets and identical
// adjacency patterns of the unplaced vertices are interchangeable and
// deduplicated, which tames the symmetric worst cases.
uint64_t canonical_code_rows(const Rows& rows) {
    int n = static_cast<int>(rows.size());
    if (n <= 1) return 0;

    struct State {
        uint16_t placed_mask;
        std::vector<uint16_t> pattern; // per vertex: adjacency bits to placed order

        bool operator<(const State& o) const {
            if (placed_mask != o.placed_mask) return placed_mask < o.placed_mask;
            return pattern < o.pattern;
        }
        bool operator==(const State& o) const {
            return placed_mask == o.placed_mask && pattern == o.pattern;
        }
    };

    std::vector<State> frontier{{0, std::vector<uint16_t>(n, 0)}};
    uint64_t code = 0;
    for (int level = 0; level < n; ++level) {
        // minimal achievable row value at this level
        uint16_t best_row = 0xFFFF;
        for (const State& st : frontier)
            for (int v = 0; v < n; ++v)
                if (!(st.placed_mask >> v & 1)) best_row = std::min(best_row, st.pattern[v]);

        std::vector<State> next;
        for (const State& st : frontier) {
            for (int v = 0; v < n; ++v) {
                if (st.placed_mask >> v & 1) continue;
                if (st.pattern[v] != best_row) continue;
                State ns;
                ns.placed_mask = st.placed_mask | uint16_t(1) << v;
                ns.pattern.assign(n, 0);
                for (int u = 0; u < n; ++u) {
                    if (ns.placed_mask >> u & 1) continue;
                    ns.pattern[u] =
                        static_cast<uint16_t>(st.pattern[u] | ((rows[u] >> v & 1) << level));
                }
                next.push_back(std::move(ns));
            }
        }
        // placed-set plus unplaced patterns fully determine the continuation
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        // append best_row's `level` bits, most significant first
        for (int b = level - 1; b >= 0; --b) code = code << 1 | (best_row >> b & 1);
        frontier = std::move(next);
    }
    return code;
}

std::vector<Graph> generate_level(int n, const std::vector<Graph>& previous) {
    std::unordered_set<uint64_t> codes;
    if (n == 1) {
        codes.insert(0);
    } else {
        for (const Graph& parent : previous) {
            Rows base = to_rows(parent);
            base.push_back(0);
            for (uint32_t nb = 0; nb < (uint32_t(1) << (n - 1)); ++nb) {
                Rows rows = base;
                rows[n - 1] = static_cast<uint16_t>(nb);
                for (int u = 0; u < n - 1; ++u)
                    if (nb >> u & 1) rows[u] |= uint16_t(1) << (n - 1);
                codes.insert(canonical_code_rows(rows));
            }
        }
    }
    std::vector<uint64_t> sorted(codes.begin(), codes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Graph> out;
    out.reserve(sorted.size());
    for (uint64_t c : sorted) out.push_back(from_code(n, c));
    return out;
}

struct CatalogCache {
    std::mutex mu;
    std::map<int, std::vector<Graph>> all;
    std::map<int, std::vector<Graph>> connected;
};

CatalogCache& cache() {
    static CatalogCache c;
    return c;
}

} // namespace

uint64_t canonical_code(const Graph& g) {
    if (g.vertex_count() > 10) fail(ErrorCode::BudgetExceeded, "canonical_code needs n <= 10");
    return canonical_code_rows(to_rows(g));
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> vis(n, false);
    std::vector<int> stack{0};
    vis[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (!vis[w]) {
                vis[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

const std::vector<Graph>& graphs_on(int n) {
    if (n < 1 || n > 8) fail(ErrorCode::BudgetExceeded, "catalog supports 1 <= n <= 8");
    CatalogCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    for (int k = 1; k <= n; ++k)
        if (!c.all.count(k)) c.all[k] = generate_level(k, k == 1 ? std::vector<Graph>{} : c.all[k - 1]);
    return c.all[n];
}

const std::vector<Graph>& connected_graphs_on(int n) {
    CatalogCache& c = cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.connected.find(n);
        if (it != c.connected.end()) return it->second;
    }
    const std::vector<Graph>& all = graphs_on(n);
    std::vector<Graph> conn;
    for (const Graph& g : all)
        if (is_connected(g)) conn.push_back(g);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.connected.emplace(n, std::move(conn)).first->second;
}

} // namespace sepbip
