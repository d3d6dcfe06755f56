#include "sepbip/stable_sets.hpp"

#include <cmath>

#include "sepbip/error.hpp"
#include "sepbip/rng.hpp"

namespace sepbip {

StableSetFamily enumerate_stable_sets(const Graph& g, uint64_t budget) {
    int n = g.vertex_count();
    StableSetFamily fam;
    std::vector<int> current;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (fam.all_sets.size() >= budget)
                fail(ErrorCode::BudgetExceeded, "stable-set family exceeds budget");
            fam.all_sets.emplace_back(current);
            return;
        }
        self(self, v + 1); // exclude v first
        bool ok = true;
        for (int u : current)
            if (g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return fam;
}

VertexSet uniform_stable_set(const Graph& g, uint64_t seed, uint64_t budget) {
    StableSetFamily fam = enumerate_stable_sets(g, budget);
    SeqRng rng(seed);
    return fam.all_sets[rng.below(fam.count())];
}

Rational expected_degree_sum(const Graph& g, uint64_t budget) {
    StableSetFamily fam = enumerate_stable_sets(g, budget);
    long total = 0;
    for (const VertexSet& s : fam.all_sets)
        for (int v : s.members()) total += g.degree(v);
    Rational r(BigInt(total), BigInt(fam.count()));
    r.canonicalize();
    return r;
}

Rational x_statistic(const Graph& g, int v, const VertexSet& s) {
    if (!g.is_stable_set(s)) fail(ErrorCode::NotStable, "x_statistic needs a stable set");
    long x = 0;
    if (s.contains(v)) x += g.degree(v);
    for (int u : g.neighbors(v))
        if (s.contains(u)) ++x;
    return Rational(x);
}

Rational conditional_expectation(long d, long k) {
    if (d < 1) fail(ErrorCode::BadParameter, "conditional_expectation needs d >= 1");
    if (k < 0 || k > d) fail(ErrorCode::BadParameter, "conditional_expectation needs 0 <= k <= d");
    BigInt pow2k = BigInt(1) << static_cast<unsigned long>(k);
    BigInt num(d);
    if (k >= 1) num += k * (BigInt(1) << static_cast<unsigned long>(k - 1));
    Rational r(num, pow2k + 1);
    r.canonicalize();
    return r;
}

AppendixReport verify_appendix_inequality(long d_max, long k_cap) {
    AppendixReport rep;
    bool have_slack = false;
    for (long d = 1; d <= d_max; ++d) {
        // conservative side: compare against the upper end of the enclosure
        Rational half_ln_hi = ln_interval(static_cast<unsigned long>(d)).hi / 2;
        long kmax = std::min(d, k_cap);
        for (long k = 0; k <= kmax; ++k) {
            Rational lhs = conditional_expectation(d, k);
            Rational slack = lhs - half_ln_hi;
            ++rep.pairs_checked;
            if (slack < 0) ++rep.violations;
            if (!have_slack || slack < rep.min_slack) {
                have_slack = true;
                rep.min_slack = slack;
                rep.min_d = d;
                rep.min_k = k;
            }
        }
    }
    return rep;
}

AuxMinimum appendix_aux_minimum() {
    auto f = [](double x) {
        double lx = std::log(x);
        return (1 - lx / (2 * x)) * std::log2(2 * x / lx - 1) - lx;
    };
    double lo = 2.0, hi = 100.0;
    while (hi - lo > 1e-4) {
        double m1 = lo + (hi - lo) / 3;
        double m2 = hi - (hi - lo) / 3;
        if (f(m1) < f(m2))
            hi = m2;
        else
            lo = m1;
    }
    AuxMinimum out;
    out.x = (lo + hi) / 2;
    out.value = f(out.x);
    return out;
}

VertexSet max_stable_set(const Graph& g, uint64_t node_budget) {
    int n = g.vertex_count();
    if (n == 0) return VertexSet();
    if (n > 64) fail(ErrorCode::BudgetExceeded, "max_stable_set supports n <= 64");
    const auto& adj = g.adjacency_masks();
    uint64_t full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;

    std::vector<int> best, current;
    uint64_t nodes = 0;
    // include-first ascending search: the first set of maximum size found is
    // the lexicographically least one
    auto rec = [&](auto&& self, uint64_t candidates) -> void {
        if (++nodes > node_budget) fail(ErrorCode::BudgetExceeded, "max_stable_set node budget");
        if (current.size() + static_cast<size_t>(__builtin_popcountll(candidates)) <=
            best.size() && !best.empty())
            return;
        if (!candidates) {
            if (current.size() > best.size()) best = current;
            return;
        }
        int v = __builtin_ctzll(candidates);
        uint64_t rest = candidates & ~(uint64_t(1) << v);
        current.push_back(v);
        self(self, rest & ~adj[v]);
        current.pop_back();
        if (current.size() + static_cast<size_t>(__builtin_popcountll(rest)) > best.size())
            self(self, rest);
    };
    rec(rec, full);
    return VertexSet(best);
}

} // namespace sepbip
