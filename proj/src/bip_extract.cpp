#include "sepbip/bip_extract.hpp"

#include <algorithm>

#include "sepbip/error.hpp"
#include "sepbip/rng.hpp"
#include "sepbip/stable_sets.hpp"

namespace sepbip {

namespace {

long edges_within(const Graph& g, const std::vector<bool>& in) {
    long count = 0;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) ++count;
    return count;
}

std::vector<bool> to_flags(const Graph& g, const VertexSet& s) {
    std::vector<bool> f(g.vertex_count(), false);
    for (int v : s.members()) f[v] = true;
    return f;
}

long cross_edges(const Graph& g, const std::vector<bool>& a, const std::vector<bool>& b) {
    long count = 0;
    for (auto [u, v] : g.edges())
        if ((a[u] && b[v]) || (a[v] && b[u])) ++count;
    return count;
}

} // namespace

BipartiteWitness make_bipartite_witness(const Graph& host, const VertexSet& part1,
                                        const VertexSet& part2) {
    BipartiteWitness w;
    w.part1 = part1;
    w.part2 = part2;
    std::vector<bool> in1 = to_flags(host, part1);
    std::vector<bool> in2 = to_flags(host, part2);
    std::vector<bool> in(host.vertex_count());
    for (int v = 0; v < host.vertex_count(); ++v) in[v] = in1[v] || in2[v];
    w.edge_count = edges_within(host, in);
    int total = part1.size() + part2.size();
    w.avg_degree = total == 0 ? Rational(0) : Rational(2 * w.edge_count, total);
    w.avg_degree.canonicalize();
    w.min_degree = 0;
    if (total > 0) {
        w.min_degree = host.vertex_count();
        for (int v : part1.members()) {
            int d = 0;
            for (int u : host.neighbors(v))
                if (in[u]) ++d;
            w.min_degree = std::min(w.min_degree, d);
        }
        for (int v : part2.members()) {
            int d = 0;
            for (int u : host.neighbors(v))
                if (in[u]) ++d;
            w.min_degree = std::min(w.min_degree, d);
        }
    }
    w.verify(host);
    return w;
}

void BipartiteWitness::verify(const Graph& host) const {
    if (!host.is_stable_set(part1) || !host.is_stable_set(part2))
        fail(ErrorCode::Internal, "witness part not stable");
    for (int v : part1.members())
        if (part2.contains(v)) fail(ErrorCode::Internal, "witness parts not disjoint");
    std::vector<bool> in1 = to_flags(host, part1);
    std::vector<bool> in2 = to_flags(host, part2);
    long cross = cross_edges(host, in1, in2);
    if (cross != edge_count) fail(ErrorCode::Internal, "witness edge count wrong");
    int total = part1.size() + part2.size();
    Rational avg = total == 0 ? Rational(0) : Rational(2 * edge_count, total);
    avg.canonicalize();
    if (avg != avg_degree) fail(ErrorCode::Internal, "witness avg degree wrong");
}

bool BipartiteWitness::lex_less(const BipartiteWitness& o) const {
    if (part1 < o.part1) return true;
    if (o.part1 < part1) return false;
    return part2 < o.part2;
}

SemiBipartiteWitness make_semi_witness(const Graph& host, const VertexSet& stable_part,
                                       const VertexSet& other_part) {
    SemiBipartiteWitness w;
    w.stable_part = stable_part;
    w.other_part = other_part;
    std::vector<bool> a = to_flags(host, stable_part);
    std::vector<bool> b = to_flags(host, other_part);
    w.cross_edge_count = cross_edges(host, a, b);
    int total = stable_part.size() + other_part.size();
    w.avg_degree = total == 0 ? Rational(0) : Rational(2 * w.cross_edge_count, total);
    w.avg_degree.canonicalize();
    w.verify(host);
    return w;
}

void SemiBipartiteWitness::verify(const Graph& host) const {
    if (!host.is_stable_set(stable_part)) fail(ErrorCode::Internal, "semi stable part not stable");
    for (int v : stable_part.members())
        if (other_part.contains(v)) fail(ErrorCode::Internal, "semi parts not disjoint");
    std::vector<bool> a = to_flags(host, stable_part);
    std::vector<bool> b = to_flags(host, other_part);
    if (cross_edges(host, a, b) != cross_edge_count)
        fail(ErrorCode::Internal, "semi cross count wrong");
    int total = stable_part.size() + other_part.size();
    Rational avg = total == 0 ? Rational(0) : Rational(2 * cross_edge_count, total);
    avg.canonicalize();
    if (avg != avg_degree) fail(ErrorCode::Internal, "semi avg degree wrong");
}

bool SemiBipartiteWitness::lex_less(const SemiBipartiteWitness& o) const {
    if (stable_part < o.stable_part) return true;
    if (o.stable_part < stable_part) return false;
    return other_part < o.other_part;
}

BipartiteWitness extract_from_distribution(const Graph& g, const StableSetDistribution& dist,
                                           uint64_t pair_budget) {
    dist.validate(g);
    int n = g.vertex_count();
    if (n == 0) return make_bipartite_witness(g, VertexSet(), VertexSet());
    Rational inv_k = dist.marginals.empty() ? Rational(0) : dist.marginals[0];
    for (const Rational& m : dist.marginals)
        if (m != inv_k) fail(ErrorCode::BadParameter, "distribution marginals not uniform");
    Rational d = g.average_degree();
    // per-vertex charge d/(2k) = d*inv_k/2
    Rational charge = d * inv_k / 2;

    size_t ns = dist.support.size();
    if (ns * ns > pair_budget) fail(ErrorCode::BudgetExceeded, "support-pair budget");

    bool have = false;
    BipartiteWitness best;
    for (size_t i = 0; i < ns; ++i) {
        std::vector<bool> in1 = to_flags(g, dist.support[i]);
        for (size_t j = 0; j < ns; ++j) {
            const VertexSet& s2 = dist.support[j];
            std::vector<bool> in(in1);
            for (int v : s2.members()) in[v] = true;
            long edges = edges_within(g, in);
            int size_sum = dist.support[i].size() + s2.size();
            // the probabilistic-method surplus; nonnegative pairs exist
            if (Rational(edges) < size_sum * charge) continue;
            // vertices in both sets are isolated in the union; discard them
            std::vector<int> p1, p2;
            for (int v : dist.support[i].members())
                if (!s2.contains(v)) p1.push_back(v);
            for (int v : s2.members())
                if (!dist.support[i].contains(v)) p2.push_back(v);
            BipartiteWitness w = make_bipartite_witness(g, VertexSet(p1), VertexSet(p2));
            if (!have || w.avg_degree > best.avg_degree ||
                (w.avg_degree == best.avg_degree && w.lex_less(best))) {
                have = true;
                best = w;
            }
        }
    }
    if (!have) fail(ErrorCode::Internal, "no nonnegative support pair found");
    return best;
}

BipartiteWitness extract_from_coloring(const Graph& g, const ProperColoring& c) {
    c.validate(g);
    std::vector<VertexSet> classes = c.classes();
    int k = c.k;
    if (k < 2) return make_bipartite_witness(g, VertexSet(), VertexSet());

    // best pair by edges/(size sum), ties by lowest (a, b)
    int best_a = -1, best_b = -1;
    Rational best_ratio(-1);
    std::vector<std::vector<bool>> flags;
    flags.reserve(k);
    for (const VertexSet& cls : classes) flags.push_back(to_flags(g, cls));
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            long e = cross_edges(g, flags[a], flags[b]);
            Rational ratio(2 * e, classes[a].size() + classes[b].size());
            ratio.canonicalize();
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best_a = a;
                best_b = b;
            }
        }
    }

    // peel the induced bipartite subgraph down to min degree d/(2k)
    std::vector<int> both = classes[best_a].members();
    for (int v : classes[best_b].members()) both.push_back(v);
    InducedSubgraph sub = induced_subgraph(g, VertexSet(both));
    Rational threshold(g.min_degree(), 2 * k);
    threshold.canonicalize();
    VertexSet core = peel_to_min_degree(sub.graph, threshold);

    std::vector<int> p1, p2;
    for (int local : core.members()) {
        int v = sub.to_host[local];
        if (classes[best_a].contains(v))
            p1.push_back(v);
        else
            p2.push_back(v);
    }
    return make_bipartite_witness(g, VertexSet(p1), VertexSet(p2));
}

AksPeeling aks_peeling_coloring(const Graph& g, int threshold) {
    if (threshold < 0) fail(ErrorCode::BadParameter, "negative threshold");
    AksPeeling out;
    std::vector<int> alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;
    while (static_cast<int>(alive.size()) > threshold) {
        InducedSubgraph sub = induced_subgraph(g, VertexSet(alive));
        VertexSet local = max_stable_set(sub.graph);
        std::vector<int> cls;
        for (int idx : local.members()) cls.push_back(sub.to_host[idx]);
        VertexSet host_class(cls);
        out.classes.push_back(host_class);
        out.covered += host_class.size();
        out.min_class_size = out.min_class_size == 0
                                 ? host_class.size()
                                 : std::min(out.min_class_size, host_class.size());
        std::vector<int> next;
        for (int v : alive)
            if (!host_class.contains(v)) next.push_back(v);
        alive = std::move(next);
    }
    out.leftover = VertexSet(alive);
    return out;
}

namespace {

SemiBipartiteWitness semi_from_stable(const Graph& g, const VertexSet& s) {
    // trim vertices isolated in the cross graph
    std::vector<int> stable_part, other_part;
    std::vector<bool> in_s = to_flags(g, s);
    for (int v : s.members())
        if (g.degree(v) > 0) stable_part.push_back(v);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_s[v]) continue;
        for (int u : g.neighbors(v))
            if (in_s[u]) {
                other_part.push_back(v);
                break;
            }
    }
    return make_semi_witness(g, VertexSet(stable_part), VertexSet(other_part));
}

bool better_semi(const SemiBipartiteWitness& cand, const SemiBipartiteWitness& best, bool have) {
    if (!have) return true;
    if (cand.avg_degree != best.avg_degree) return cand.avg_degree > best.avg_degree;
    return cand.lex_less(best);
}

// greedy stable set from a seeded vertex order
VertexSet random_stable_start(const Graph& g, SeqRng& rng) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(static_cast<uint64_t>(i) + 1)]);
    std::vector<int> chosen;
    std::vector<bool> blocked(n, false);
    for (int v : order) {
        if (blocked[v]) continue;
        chosen.push_back(v);
        for (int u : g.neighbors(v)) blocked[u] = true;
    }
    return VertexSet(chosen);
}

} // namespace

SemiBipartiteWitness best_semi_bipartite(const Graph& g, SemiMode mode, uint64_t seed, int trials,
                                         uint64_t budget) {
    int n = g.vertex_count();
    if (n == 0) return make_semi_witness(g, VertexSet(), VertexSet());

    SemiBipartiteWitness best;
    bool have = false;

    if (mode == SemiMode::Exact) {
        StableSetFamily fam = enumerate_stable_sets(g, budget);
        for (const VertexSet& s : fam.all_sets) {
            SemiBipartiteWitness w = semi_from_stable(g, s);
            if (better_semi(w, best, have)) {
                best = w;
                have = true;
            }
        }
        return best;
    }

    if (mode == SemiMode::Sampled) {
        StableSetFamily fam = enumerate_stable_sets(g, budget);
        SeqRng rng(seed);
        for (int t = 0; t < trials; ++t) {
            const VertexSet& s = fam.all_sets[rng.below(fam.count())];
            SemiBipartiteWitness w = semi_from_stable(g, s);
            if (better_semi(w, best, have)) {
                best = w;
                have = true;
            }
        }
        return best;
    }

    // local search: seeded hill climbing over stable sets with add/drop moves
    SeqRng rng(seed);
    for (int restart = 0; restart < trials; ++restart) {
        VertexSet current = random_stable_start(g, rng);
        SemiBipartiteWitness cw = semi_from_stable(g, current);
        bool improved = true;
        while (improved) {
            improved = false;
            std::vector<bool> in_s = to_flags(g, current);
            // add moves: any vertex with no neighbor in the set
            for (int v = 0; v < n && !improved; ++v) {
                if (in_s[v]) continue;
                bool ok = true;
                for (int u : g.neighbors(v))
                    if (in_s[u]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::vector<int> next = current.members();
                next.push_back(v);
                SemiBipartiteWitness w = semi_from_stable(g, VertexSet(next));
                if (w.avg_degree > cw.avg_degree) {
                    current = VertexSet(next);
                    cw = w;
                    improved = true;
                }
            }
            // drop moves
            std::vector<int> mem = current.members();
            for (int v : mem) {
                if (improved) break;
                std::vector<int> next;
                for (int u : mem)
                    if (u != v) next.push_back(u);
                SemiBipartiteWitness w = semi_from_stable(g, VertexSet(next));
                if (w.avg_degree > cw.avg_degree) {
                    current = VertexSet(next);
                    cw = w;
                    improved = true;
                }
            }
        }
        if (better_semi(cw, best, have)) {
            best = cw;
            have = true;
        }
    }
    return best;
}

TrimResult trim_equal_parts(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a.members())
        if (b.contains(v)) fail(ErrorCode::BadParameter, "parts not disjoint");
    if (a.size() < b.size()) fail(ErrorCode::BadParameter, "need |a| >= |b|");

    std::vector<bool> in_b = to_flags(g, b);
    auto degree_into_b = [&](int v) {
        int d = 0;
        for (int u : g.neighbors(v))
            if (in_b[u]) ++d;
        return d;
    };
    std::vector<int> ordered = a.members();
    std::stable_sort(ordered.begin(), ordered.end(), [&](int x, int y) {
        int dx = degree_into_b(x), dy = degree_into_b(y);
        if (dx != dy) return dx > dy;
        return x < y;
    });
    ordered.resize(b.size());
    TrimResult res;
    res.a_trimmed = VertexSet(ordered);

    std::vector<bool> in_a = to_flags(g, a);
    std::vector<bool> in_t = to_flags(g, res.a_trimmed);
    long e_before = cross_edges(g, in_a, in_b);
    long e_after = cross_edges(g, in_t, in_b);
    int total_before = a.size() + b.size();
    res.avg_before = total_before == 0 ? Rational(0) : Rational(2 * e_before, total_before);
    res.avg_before.canonicalize();
    int total_after = res.a_trimmed.size() + b.size();
    res.avg_after = total_after == 0 ? Rational(0) : Rational(2 * e_after, total_after);
    res.avg_after.canonicalize();
    res.certified = 2 * res.avg_after >= res.avg_before;
    return res;
}

BipartiteWitness max_bip_induced_oracle(const Graph& g, int budget_n) {
    int n = g.vertex_count();
    if (n > budget_n || n > 30) fail(ErrorCode::BudgetExceeded, "oracle budget");
    const std::vector<uint64_t>& adj = g.adjacency_masks();

    bool have = false;
    BipartiteWitness best;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        // 2-color the induced subgraph; component roots go to side 0
        std::vector<int> side(n, -1);
        bool ok = true;
        std::vector<int> p1, p2;
        for (int root = 0; root < n && ok; ++root) {
            if (!(mask >> root & 1) || side[root] != -1) continue;
            side[root] = 0;
            std::vector<int> stack{root};
            while (!stack.empty() && ok) {
                int u = stack.back();
                stack.pop_back();
                uint64_t nbrs = adj[u] & mask;
                while (nbrs) {
                    int w = __builtin_ctzll(nbrs);
                    nbrs &= nbrs - 1;
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        stack.push_back(w);
                    } else if (side[w] == side[u]) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) continue;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            (side[v] == 0 ? p1 : p2).push_back(v);
        }
        BipartiteWitness w = make_bipartite_witness(g, VertexSet(p1), VertexSet(p2));
        if (!have || w.avg_degree > best.avg_degree ||
            (w.avg_degree == best.avg_degree && w.lex_less(best))) {
            have = true;
            best = w;
        }
    }
    if (!have) fail(ErrorCode::Internal, "oracle found nothing");
    return best;
}

} // namespace sepbip
