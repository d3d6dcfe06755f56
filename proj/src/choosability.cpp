#include "sepbip/choosability.hpp"

#include <algorithm>
#include <map>

#include "sepbip/error.hpp"
#include "sepbip/rng.hpp"

namespace sepbip {

void ListAssignment::validate(const Graph& g) const {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        fail(ErrorCode::MissingList, "assignment does not cover every vertex");
    for (const auto& list : lists) {
        if (static_cast<int>(list.size()) != k)
            fail(ErrorCode::BadParameter, "list size differs from k");
        if (!std::is_sorted(list.begin(), list.end()))
            fail(ErrorCode::BadParameter, "list not sorted");
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            fail(ErrorCode::BadParameter, "duplicate color in list");
        if (!list.empty() && list.front() < 0) fail(ErrorCode::BadParameter, "negative color");
    }
}

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++count;
            ++i, ++j;
        }
    }
    return count;
}

} // namespace

bool has_max_separation(const Graph& g, const ListAssignment& L) {
    L.validate(g);
    for (auto [u, v] : g.edges())
        if (intersection_size(L.lists[u], L.lists[v]) > 1) return false;
    return true;
}

ColoringSearch is_L_colorable(const Graph& g, const ListAssignment& L) {
    L.validate(g);
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c : L.lists[v]) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    ColoringSearch res;
    res.colorable = rec(rec, 0);
    if (res.colorable) res.coloring = color;
    return res;
}

EdgeLabeling labeling_from_lists(const Graph& g, const ListAssignment& L) {
    if (!has_max_separation(g, L))
        fail(ErrorCode::SeparationViolated, "labeling needs maximum separation");
    int max_color = -1;
    for (const auto& list : L.lists)
        for (int c : list) max_color = std::max(max_color, c);
    EdgeLabeling ell;
    ell.sentinel = max_color + 1;
    ell.labels.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        int label = ell.sentinel;
        for (int c : L.lists[u])
            if (std::binary_search(L.lists[v].begin(), L.lists[v].end(), c)) {
                label = c;
                break;
            }
        ell.labels.push_back(label);
    }
    return ell;
}

ColoringSearch is_adapted_colorable(const Graph& g, const ListAssignment& L,
                                    const EdgeLabeling& ell) {
    L.validate(g);
    if (ell.labels.size() != g.edges().size())
        fail(ErrorCode::BadParameter, "labeling does not cover every edge");
    int n = g.vertex_count();
    // per-vertex incident constraints: (neighbor, label)
    std::vector<std::vector<std::pair<int, int>>> incident(n);
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        incident[u].emplace_back(v, ell.labels[e]);
        incident[v].emplace_back(u, ell.labels[e]);
    }
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c : L.lists[v]) {
            bool ok = true;
            for (auto [u, label] : incident[v])
                if (u < v && color[u] == c && label == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    ColoringSearch res;
    res.colorable = rec(rec, 0);
    if (res.colorable) res.coloring = color;
    return res;
}

namespace {

// Canonical enumeration state: per color, the set of earlier vertices whose
// lists contain it. Colors with equal membership sets are interchangeable,
// so shared colors are chosen as per-class counts, lowest ids first.
class SepEnumerator {
public:
    SepEnumerator(const Graph& g, int k, uint64_t budget,
                  const std::function<bool(const ListAssignment&)>& fn)
        : g_(g), n_(g.vertex_count()), k_(k), budget_(budget), fn_(fn) {
        assignment_.k = k;
        assignment_.lists.resize(n_);
    }

    // returns false when stopped early (budget or callback)
    bool run() {
        if (n_ == 0) {
            ++visited_;
            return fn_(assignment_);
        }
        return vertex(0);
    }

    uint64_t visited() const { return visited_; }
    bool budget_hit() const { return budget_hit_; }

private:
    bool vertex(int v) {
        // group existing colors into interchangeability classes
        std::map<uint64_t, std::vector<int>> classes;
        for (size_t c = 0; c < type_.size(); ++c) classes[type_[c]].push_back(static_cast<int>(c));
        std::vector<std::pair<uint64_t, std::vector<int>>> class_list(classes.begin(),
                                                                      classes.end());
        uint64_t nbr_mask = 0;
        for (int u : g_.neighbors(v))
            if (u < v) nbr_mask |= uint64_t(1) << u;
        std::vector<int> chosen;
        return pick_class(v, class_list, 0, nbr_mask, nbr_mask, chosen);
    }

    // chooses how many shared colors to take from each class; an adjacent
    // earlier list may contribute at most one shared color in total, so a
    // class touching a spent neighbor is closed entirely
    bool pick_class(int v, const std::vector<std::pair<uint64_t, std::vector<int>>>& class_list,
                    size_t idx, uint64_t adj_mask, uint64_t nbr_budget, std::vector<int>& chosen) {
        if (static_cast<int>(chosen.size()) == k_ || idx == class_list.size())
            return emit(v, chosen);
        const auto& [mask, ids] = class_list[idx];
        uint64_t spent = adj_mask & ~nbr_budget;
        int cap = std::min<int>(static_cast<int>(ids.size()), k_ - static_cast<int>(chosen.size()));
        if (mask & spent) cap = 0;
        else if (mask & nbr_budget) cap = std::min(cap, 1);
        for (int take = 0; take <= cap; ++take) {
            if (take > 0) chosen.insert(chosen.end(), ids.begin(), ids.begin() + take);
            uint64_t next_budget = take > 0 ? (nbr_budget & ~mask) : nbr_budget;
            bool keep_going = pick_class(v, class_list, idx + 1, adj_mask, next_budget, chosen);
            if (take > 0) chosen.resize(chosen.size() - take);
            if (!keep_going) return false;
        }
        return true;
    }

    bool emit(int v, const std::vector<int>& shared) {
        std::vector<int> list = shared;
        int fresh = k_ - static_cast<int>(list.size());
        int base = static_cast<int>(type_.size());
        for (int i = 0; i < fresh; ++i) list.push_back(base + i);
        std::sort(list.begin(), list.end());
        assignment_.lists[v] = list;
        for (int i = 0; i < fresh; ++i) type_.push_back(0);
        for (int c : list) type_[c] |= uint64_t(1) << v;

        bool keep_going;
        if (v + 1 == n_) {
            if (visited_ == budget_) {
                budget_hit_ = true;
                keep_going = false;
            } else {
                ++visited_;
                keep_going = fn_(assignment_);
            }
        } else {
            keep_going = vertex(v + 1);
        }

        for (int c : list) type_[c] &= ~(uint64_t(1) << v);
        type_.resize(type_.size() - fresh);
        assignment_.lists[v].clear();
        return keep_going;
    }

    const Graph& g_;
    int n_;
    int k_;
    uint64_t budget_;
    const std::function<bool(const ListAssignment&)>& fn_;
    ListAssignment assignment_;
    std::vector<uint64_t> type_;
    uint64_t visited_ = 0;
    bool budget_hit_ = false;
};

} // namespace

uint64_t for_each_max_separation_assignment(const Graph& g, int k, uint64_t budget,
                                            const std::function<bool(const ListAssignment&)>& fn,
                                            bool* exhausted) {
    if (k < 1) fail(ErrorCode::BadParameter, "k must be positive");
    if (g.vertex_count() > 64) fail(ErrorCode::BudgetExceeded, "enumeration supports n <= 64");
    SepEnumerator e(g, k, budget, fn);
    bool completed = e.run();
    if (exhausted) *exhausted = completed || !e.budget_hit();
    return e.visited();
}

SepDecision decide_sep_choosable(const Graph& g, int k, uint64_t budget) {
    SepDecision dec;
    std::optional<ListAssignment> bad;
    bool exhausted = false;
    dec.assignments_checked = for_each_max_separation_assignment(
        g, k, budget,
        [&](const ListAssignment& L) {
            if (!is_L_colorable(g, L).colorable) {
                bad = L;
                return false;
            }
            return true;
        },
        &exhausted);
    if (bad) {
        // independent re-verification of the witness
        if (!has_max_separation(g, *bad))
            fail(ErrorCode::Internal, "bad assignment lacks separation");
        if (is_L_colorable(g, *bad).colorable)
            fail(ErrorCode::Internal, "bad assignment is colorable after all");
        dec.status = SepStatus::NotChoosable;
        dec.witness = bad;
    } else if (exhausted) {
        dec.status = SepStatus::Choosable;
    } else {
        dec.status = SepStatus::Unknown;
    }
    return dec;
}

std::optional<ListAssignment> search_bad_assignment(const Graph& g, int k, int trials,
                                                    uint64_t seed) {
    if (k < 1) fail(ErrorCode::BadParameter, "k must be positive");
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;

    // bipartition when available, otherwise BFS parity as a near-bipartition
    BipartitenessResult bip = is_bipartite(g);
    std::vector<int> side = bip.side;
    if (!bip.bipartite) {
        side.assign(n, -1);
        for (int root = 0; root < n; ++root) {
            if (side[root] != -1) continue;
            side[root] = 0;
            std::vector<int> queue{root};
            for (size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int w : g.neighbors(u))
                    if (side[w] == -1) {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    }
            }
        }
    }

    SeqRng rng(seed);
    int pool = k == 1 ? 1 : 2 * k; // stage-one colors
    for (int trial = 0; trial < trials; ++trial) {
        ListAssignment L;
        L.k = k;
        L.lists.assign(n, {});
        // stage one: random k-subsets of the pool on side 0
        for (int v = 0; v < n; ++v) {
            if (side[v] != 0) continue;
            std::vector<int> colors(pool);
            for (int i = 0; i < pool; ++i) colors[i] = i;
            for (int i = pool - 1; i > 0; --i)
                std::swap(colors[i], colors[rng.below(static_cast<uint64_t>(i) + 1)]);
            colors.resize(k);
            std::sort(colors.begin(), colors.end());
            L.lists[v] = colors;
        }
        // stage two: covering lists on side 1, greedy by neighbor coverage,
        // at most one shared color per adjacent list
        int fresh = pool;
        for (int v = 0; v < n; ++v) {
            if (side[v] != 1) continue;
            std::map<int, int> coverage; // color -> #neighbor lists containing it
            for (int u : g.neighbors(v))
                for (int c : L.lists[u]) ++coverage[c];
            std::vector<std::pair<int, int>> ranked; // (-count, color)
            for (auto [c, cnt] : coverage) ranked.emplace_back(-cnt, c);
            std::sort(ranked.begin(), ranked.end());
            std::vector<int> picked;
            for (auto [negcnt, c] : ranked) {
                if (static_cast<int>(picked.size()) == k) break;
                bool ok = true;
                for (int u : g.neighbors(v)) {
                    const auto& lu = L.lists[u];
                    if (!std::binary_search(lu.begin(), lu.end(), c)) continue;
                    for (int p : picked)
                        if (std::binary_search(lu.begin(), lu.end(), p)) {
                            ok = false;
                            break;
                        }
                    if (!ok) break;
                }
                if (ok) picked.push_back(c);
            }
            while (static_cast<int>(picked.size()) < k) picked.push_back(fresh++);
            std::sort(picked.begin(), picked.end());
            L.lists[v] = picked;
        }
        if (!has_max_separation(g, L)) continue; // non-bipartite leftovers
        if (!is_L_colorable(g, L).colorable) return L;
    }
    return std::nullopt;
}

} // namespace sepbip
