#include "sepbip/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sepbip/error.hpp"
#include "sepbip/simplex.hpp"

namespace sepbip {

std::vector<VertexSet> ProperColoring::classes() const {
    std::vector<std::vector<int>> cls(k);
    for (size_t v = 0; v < colors.size(); ++v) cls[colors[v]].push_back(static_cast<int>(v));
    std::vector<VertexSet> out;
    out.reserve(k);
    for (auto& c : cls) out.emplace_back(std::move(c));
    return out;
}

void ProperColoring::validate(const Graph& g) const {
    if (static_cast<int>(colors.size()) != g.vertex_count())
        fail(ErrorCode::Internal, "coloring size mismatch");
    std::vector<bool> used(k, false);
    for (size_t v = 0; v < colors.size(); ++v) {
        if (colors[v] < 0 || colors[v] >= k) fail(ErrorCode::Internal, "color out of range");
        used[colors[v]] = true;
    }
    for (int c = 0; c < k; ++c)
        if (!used[c]) fail(ErrorCode::Internal, "empty color class");
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) fail(ErrorCode::Internal, "improper coloring");
}

ProperColoring greedy_coloring(const Graph& g) {
    int n = g.vertex_count();
    DegeneracyResult deg = degeneracy_order(g);
    ProperColoring col;
    col.colors.assign(n, -1);
    for (auto it = deg.ordering.rbegin(); it != deg.ordering.rend(); ++it) {
        int v = *it;
        std::vector<bool> taken(n + 1, false);
        for (int u : g.neighbors(v))
            if (col.colors[u] != -1) taken[col.colors[u]] = true;
        int c = 0;
        while (taken[c]) ++c;
        col.colors[v] = c;
        col.k = std::max(col.k, c + 1);
    }
    return col;
}

namespace {

// exact max clique = max stable set of the complement
int max_clique_size(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> co_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) co_edges.emplace_back(u, v);
    return max_stable_set(Graph::build(n, co_edges)).size();
}

bool k_colorable(const Graph& g, const std::vector<int>& order, int k, std::vector<int>& out) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    // symmetry break: a new color id may only follow all smaller ones
    auto rec = [&](auto&& self, int idx, int used) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        int cap = std::min(used + 1, k);
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, idx + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0, 0)) return false;
    out = color;
    return true;
}

} // namespace

std::pair<int, ProperColoring> chromatic_number_exact(const Graph& g, int budget_n) {
    int n = g.vertex_count();
    if (n > budget_n) fail(ErrorCode::BudgetExceeded, "chromatic_number_exact budget");
    if (n == 0) return {0, ProperColoring{}};

    ProperColoring greedy = greedy_coloring(g);
    int ub = greedy.k;
    int lb = std::max(1, max_clique_size(g));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    for (int k = lb; k < ub; ++k) {
        std::vector<int> colors;
        if (k_colorable(g, order, k, colors)) {
            ProperColoring col;
            col.colors = colors;
            col.k = k;
            col.validate(g);
            return {k, col};
        }
    }
    return {ub, greedy};
}

void FractionalColoring::validate(const Graph& g) const {
    if (support.size() != weights.size()) fail(ErrorCode::Internal, "support/weight mismatch");
    Rational sum = 0;
    std::vector<Rational> marginal(g.vertex_count(), Rational(0));
    for (size_t i = 0; i < support.size(); ++i) {
        if (!g.is_stable_set(support[i])) fail(ErrorCode::Internal, "support set not stable");
        if (weights[i] <= 0) fail(ErrorCode::Internal, "nonpositive weight");
        sum += weights[i];
        for (int v : support[i].members()) marginal[v] += weights[i];
    }
    if (sum != value) fail(ErrorCode::Internal, "value != weight sum");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (marginal[v] < 1) fail(ErrorCode::Internal, "vertex not fractionally covered");
}

FractionalSolution fractional_chromatic_exact(const Graph& g, uint64_t budget) {
    int n = g.vertex_count();
    StableSetFamily fam = enumerate_stable_sets(g, budget);

    // only maximal stable sets enter the LP; dominance keeps the optimum
    std::vector<std::vector<int>> columns;
    std::vector<const VertexSet*> column_sets;
    for (const VertexSet& s : fam.all_sets) {
        if (s.empty() && n > 0) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (s.contains(v)) continue;
            bool open = true;
            for (int u : g.neighbors(v))
                if (s.contains(u)) {
                    open = false;
                    break;
                }
            if (open) maximal = false;
        }
        if (!maximal) continue;
        columns.push_back(s.members());
        column_sets.push_back(&s);
    }

    CoverLpResult lp = solve_cover_lp(n, columns);

    FractionalSolution sol;
    sol.coloring.value = lp.value;
    for (size_t j = 0; j < columns.size(); ++j) {
        if (lp.x[j] > 0) {
            sol.coloring.support.push_back(*column_sets[j]);
            sol.coloring.weights.push_back(lp.x[j]);
        }
    }
    sol.dual = lp.y;
    sol.coloring.validate(g);
    return sol;
}

void StableSetDistribution::validate(const Graph& g) const {
    if (support.size() != probabilities.size()) fail(ErrorCode::Internal, "support/prob mismatch");
    Rational sum = 0;
    std::vector<Rational> m(g.vertex_count(), Rational(0));
    for (size_t i = 0; i < support.size(); ++i) {
        if (!g.is_stable_set(support[i])) fail(ErrorCode::Internal, "support set not stable");
        if (probabilities[i] <= 0) fail(ErrorCode::Internal, "nonpositive probability");
        sum += probabilities[i];
        for (int v : support[i].members()) m[v] += probabilities[i];
    }
    if (sum != 1) fail(ErrorCode::Internal, "probabilities do not sum to 1");
    if (m != marginals) fail(ErrorCode::Internal, "cached marginals inconsistent");
}

Rational StableSetDistribution::min_marginal() const {
    Rational r = marginals.empty() ? Rational(0) : marginals[0];
    for (const Rational& m : marginals) r = std::min(r, m);
    return r;
}

StableSetDistribution coloring_to_distribution(const Graph& g, const ProperColoring& c) {
    c.validate(g);
    StableSetDistribution dist;
    dist.support = c.classes();
    dist.probabilities.assign(c.k, Rational(1, c.k));
    dist.marginals.assign(g.vertex_count(), Rational(1, c.k));
    dist.validate(g);
    return dist;
}

StableSetDistribution fractional_to_distribution(const Graph& g, const FractionalColoring& f) {
    f.validate(g);
    Rational k = f.value;
    Rational target = 1 / k;

    std::map<VertexSet, Rational> weight;
    for (size_t i = 0; i < f.support.size(); ++i) weight[f.support[i]] += f.weights[i] / k;

    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational marginal = 0;
        for (const auto& [s, p] : weight)
            if (s.contains(v)) marginal += p;
        if (marginal == target) continue;
        if (marginal < target) fail(ErrorCode::Internal, "marginal below 1/k");
        Rational keep = target / marginal; // retain v with this probability
        std::map<VertexSet, Rational> next;
        for (const auto& [s, p] : weight) {
            if (!s.contains(v)) {
                next[s] += p;
                continue;
            }
            std::vector<int> without = s.members();
            without.erase(std::find(without.begin(), without.end(), v));
            next[s] += p * keep;
            next[VertexSet(std::move(without))] += p * (1 - keep);
        }
        weight = std::move(next);
    }

    StableSetDistribution dist;
    for (auto& [s, p] : weight) {
        if (p == 0) continue;
        dist.support.push_back(s);
        dist.probabilities.push_back(p);
    }
    dist.marginals.assign(g.vertex_count(), Rational(0));
    for (size_t i = 0; i < dist.support.size(); ++i)
        for (int v : dist.support[i].members()) dist.marginals[v] += dist.probabilities[i];
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist.marginals[v] != target) fail(ErrorCode::Internal, "flattening failed");
    dist.validate(g);
    return dist;
}

} // namespace sepbip
