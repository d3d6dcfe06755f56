#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sepbip/graph.hpp"

namespace sepbip {

// Per-vertex color lists of common size k; colors are nonnegative integers.
struct ListAssignment {
    std::vector<std::vector<int>> lists; // sorted
    int k = 0;

    void validate(const Graph& g) const;
};

// |L(u) ∩ L(v)| <= 1 for every edge uv.
bool has_max_separation(const Graph& g, const ListAssignment& L);

struct ColoringSearch {
    bool colorable = false;
    std::vector<int> coloring; // witness when colorable
};

// Proper coloring with c(v) in L(v), by backtracking over vertex ids.
ColoringSearch is_L_colorable(const Graph& g, const ListAssignment& L);

struct EdgeLabeling {
    std::vector<int> labels; // parallel to g.edges()
    int sentinel = 0;        // outside every list
};

// Per edge the unique shared color when the endpoint lists intersect,
// otherwise a sentinel color no list contains. Requires maximum separation.
EdgeLabeling labeling_from_lists(const Graph& g, const ListAssignment& L);

// Coloring from the lists such that no edge has c(u) = c(v) = label(e).
ColoringSearch is_adapted_colorable(const Graph& g, const ListAssignment& L,
                                    const EdgeLabeling& ell);

// Enumerates every maximum-separation k-list-assignment up to color
// renaming. Lists are assigned in vertex order; a new list takes shared
// colors class-by-class, where two colors are equivalent when exactly the
// same earlier lists contain them, and fills up with fresh color ids.
//
// A color universe of size k*n suffices: each list introduces at most k
// colors never seen before, and renaming any assignment list-by-list onto
// the first unused ids is a color isomorphism, so every assignment is
// equivalent to one over at most k*n colors. Two enumerated assignments with
// different class-count choices differ in some intersection pattern, which
// renaming preserves, so the enumeration is duplicate-free and complete.
//
// The callback returns false to stop early. Returns the number of complete
// assignments visited; sets *exhausted=false when the budget cut it short.
uint64_t for_each_max_separation_assignment(const Graph& g, int k, uint64_t budget,
                                            const std::function<bool(const ListAssignment&)>& fn,
                                            bool* exhausted = nullptr);

enum class SepStatus { Choosable, NotChoosable, Unknown };

struct SepDecision {
    SepStatus status = SepStatus::Unknown;
    std::optional<ListAssignment> witness; // bad assignment when NotChoosable
    uint64_t assignments_checked = 0;
};

inline constexpr uint64_t kDefaultSepBudget = 100000000;

// Exact decision by canonical enumeration; "unknown" when the budget runs
// out before exhaustion. A found witness is re-verified before returning.
SepDecision decide_sep_choosable(const Graph& g, int k, uint64_t budget = kDefaultSepBudget);

// Seeded two-stage heuristic: random lists on one side of a (near-)
// bipartition, covering lists on the other; any returned assignment has
// maximum separation and defeats the backtracking colorer.
std::optional<ListAssignment> search_bad_assignment(const Graph& g, int k, int trials,
                                                    uint64_t seed);

} // namespace sepbip
