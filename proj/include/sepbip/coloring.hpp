#pragma once

#include <vector>

#include "sepbip/graph.hpp"
#include "sepbip/rational.hpp"
#include "sepbip/stable_sets.hpp"

namespace sepbip {

struct ProperColoring {
    std::vector<int> colors; // per vertex, 0..k-1
    int k = 0;

    std::vector<VertexSet> classes() const;
    void validate(const Graph& g) const; // proper, every class nonempty
};

// Colors in reverse degeneracy order with the least absent color;
// uses at most degeneracy+1 colors.
ProperColoring greedy_coloring(const Graph& g);

// Exact chromatic number by branch and bound: highest-degree-first vertex
// order, exact-clique lower bound, greedy upper bound.
std::pair<int, ProperColoring> chromatic_number_exact(const Graph& g, int budget_n = 20);

struct FractionalColoring {
    std::vector<VertexSet> support; // stable sets with positive weight
    std::vector<Rational> weights;
    Rational value; // sum of weights

    void validate(const Graph& g) const;
};

struct FractionalSolution {
    FractionalColoring coloring;
    // optimal fractional clique of equal total weight; the exactness
    // certificate for the primal optimum (weak duality)
    std::vector<Rational> dual;
};

// Exact optimum of the covering LP over all maximal stable sets,
// solved in rational arithmetic.
FractionalSolution fractional_chromatic_exact(const Graph& g,
                                              uint64_t budget = kDefaultStableSetBudget);

struct StableSetDistribution {
    std::vector<VertexSet> support;
    std::vector<Rational> probabilities; // positive, sum exactly 1
    std::vector<Rational> marginals;     // per vertex membership probability

    void validate(const Graph& g) const;
    // largest r with Pr(v in S) >= r for all v
    Rational min_marginal() const;
};

// Uniform distribution over the k color classes; every marginal is 1/k.
StableSetDistribution coloring_to_distribution(const Graph& g, const ProperColoring& c);

// Normalizes weights to probabilities, then flattens every marginal to
// exactly 1/k by splitting each support set S containing an over-covered
// vertex v into S and S\{v} with exact weights.
StableSetDistribution fractional_to_distribution(const Graph& g, const FractionalColoring& f);

} // namespace sepbip
