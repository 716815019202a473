#ifndef GRAPHLIM_COUNTING_HPP
#define GRAPHLIM_COUNTING_HPP

#include <string>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "graph.hpp"
#include "multigraph.hpp"
#include "numbers.hpp"
#include "target.hpp"

namespace graphlim {

// Edge-preserving vertex maps V(G) -> V(H); the empty graph has exactly one.
BigInt hom_count(const SimpleGraph& g, const SimpleGraph& h,
                 const Budgets& budgets = default_budgets());
// Injective edge-preserving maps.
BigInt inj_count(const SimpleGraph& g, const SimpleGraph& h,
                 const Budgets& budgets = default_budgets());
// Injective maps whose image induces exactly G (adjacency and non-adjacency
// both preserved).
BigInt ind_count(const SimpleGraph& g, const SimpleGraph& h,
                 const Budgets& budgets = default_budgets());

// Sum over all maps V(G) -> [k] of prod vertex weights * prod edge weights.
Rational weighted_hom_exact(const SimpleGraph& g, const WeightedTarget& h,
                            const Budgets& budgets = default_budgets());
// log of the same sum, accumulated max-shifted; -infinity when the sum is 0.
double log_weighted_hom(const SimpleGraph& g, const WeightedTarget& h,
                        const Budgets& budgets = default_budgets());
double weighted_hom(const SimpleGraph& g, const WeightedTarget& h,
                    const Budgets& budgets = default_budgets());

// t = weighted_hom / k^{v(G)}; the log form fails with a hard-core-zero
// domain error when the sum vanishes.
double t_density(const SimpleGraph& g, const WeightedTarget& h,
                 const Budgets& budgets = default_budgets());
double log_t_density(const SimpleGraph& g, const WeightedTarget& h,
                     const Budgets& budgets = default_budgets());
Rational t_density_exact(const SimpleGraph& g, const WeightedTarget& h,
                         const Budgets& budgets = default_budgets());

// One entry of a pattern profile: i(F,G) for the pattern class of `rep`.
struct PatternCount {
    EdgeLabeledMultigraph rep;
    CanonicalCode code;
    std::string name;
    BigInt count;
};

// All m^l ordered edge tuples of G tallied by the canonical form of their
// induced labeled pattern, ordered by (vertex count, canonical code).
std::vector<PatternCount> i_profile(const SimpleGraph& g, int length,
                                    const Budgets& budgets = default_budgets());

struct BallDistribution {
    int radius = 0;
    // canonical rooted code -> exact frequency, code-sorted; sums to 1
    std::vector<std::pair<CanonicalCode, Rational>> freqs;
};

BallDistribution ball_distribution(const SimpleGraph& g, int radius);

}  // namespace graphlim

#endif
