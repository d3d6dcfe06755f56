#include "sepbip/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <string>

#include "sepbip/error.hpp"

namespace sepbip {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return VertexSet(std::move(all));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::build(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0) fail(ErrorCode::BadParameter, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorCode::OutOfRange,
                 "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            fail(ErrorCode::DuplicateEdge,
                 "duplicate edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
    for (auto [u, v] : seen) {
        g.edges_.emplace_back(u, v);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
    return adj_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    if (v < 0 || v >= n_) fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : static_cast<int>(adj_[0].size());
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

Rational Graph::average_degree() const {
    if (n_ == 0) return Rational(0);
    Rational r(2 * edge_count(), n_);
    r.canonicalize();
    return r;
}

const std::vector<uint64_t>& Graph::adjacency_masks() const {
    if (n_ > 64) fail(ErrorCode::BudgetExceeded, "adjacency masks need n <= 64");
    if (masks_.empty() && n_ > 0) {
        masks_.assign(n_, 0);
        for (auto [u, v] : edges_) {
            masks_[u] |= uint64_t(1) << v;
            masks_[v] |= uint64_t(1) << u;
        }
    }
    return masks_;
}

bool Graph::is_stable_set(const VertexSet& s) const {
    const auto& m = s.members();
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = i + 1; j < m.size(); ++j)
            if (adjacent(m[i], m[j])) return false;
    return true;
}

DegeneracyResult degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    DegeneracyResult res;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        res.ordering.push_back(best);
        res.degeneracy = std::max(res.degeneracy, deg[best]);
        for (int u : g.neighbors(best))
            if (!removed[u]) --deg[u];
    }
    return res;
}

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (best != -1 && 2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::vector<std::array<int, 3>> list_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (auto [u, v] : g.edges()) {
        // u < v; count each triangle once via w > v
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) {
                ++i;
            } else if (nu[i] > nv[j]) {
                ++j;
            } else {
                if (nu[i] > v) out.push_back({u, v, nu[i]});
                ++i;
                ++j;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> map_to_new(g.vertex_count(), -1);
    const auto& m = s.members();
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0 || m[i] >= g.vertex_count())
            fail(ErrorCode::OutOfRange, "vertex " + std::to_string(m[i]));
        map_to_new[m[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (map_to_new[u] != -1 && map_to_new[v] != -1)
            edges.emplace_back(map_to_new[u], map_to_new[v]);
    InducedSubgraph out;
    out.graph = Graph::build(s.size(), edges);
    out.to_host = m;
    return out;
}

BipartitenessResult is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    BipartitenessResult res;
    res.side.assign(n, -1);
    std::vector<int> parent(n, -1), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (res.side[root] != -1) continue;
        res.side[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.neighbors(u)) {
                if (res.side[w] == -1) {
                    res.side[w] = 1 - res.side[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    q.push_back(w);
                } else if (res.side[w] == res.side[u]) {
                    // walk both endpoints up to their lowest common ancestor
                    std::vector<int> pu{u}, pw{w};
                    int a = u, b = w;
                    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
                    while (a != b) {
                        pu.push_back(a = parent[a]);
                        pw.push_back(b = parent[b]);
                    }
                    res.odd_cycle = pu;
                    for (auto it = pw.rbegin(); it != pw.rend(); ++it)
                        if (*it != a) res.odd_cycle.push_back(*it);
                    res.bipartite = false;
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

VertexSet peel_to_min_degree(const Graph& g, const Rational& threshold) {
    int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    while (true) {
        // lowest-id minimum-degree vertex among those below threshold
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && Rational(deg[v]) < threshold && (pick == -1 || deg[v] < deg[pick]))
                pick = v;
        if (pick == -1) break;
        alive[pick] = false;
        for (int u : g.neighbors(pick))
            if (alive[u]) --deg[u];
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    return VertexSet(std::move(keep));
}

} // namespace sepbip
