#ifndef GRAPHLIM_CUMULANT_HPP
#define GRAPHLIM_CUMULANT_HPP

#include <utility>
#include <vector>

#include "budget.hpp"
#include "counting.hpp"
#include "graph.hpp"
#include "multigraph.hpp"
#include "numbers.hpp"
#include "partitions.hpp"
#include "target.hpp"

namespace graphlim {

// Exact color statistics of one coloring: X_i = share of vertices with color
// i, X_ij = X_ji = (#edges with endpoint colors {i,j}) / v(G).
struct ColorStatistics {
    int k = 0;
    int v = 0;
    std::vector<Rational> vertex_share;            // X_i
    std::vector<std::vector<Rational>> edge_share; // X_ij, symmetric
};

// Colors are 0-based here and everywhere inside the library.
ColorStatistics color_statistics(const SimpleGraph& g, const std::vector<int>& coloring, int k);

// A pattern together with a witness coloring of its vertices; the edge color
// pairs it induces are what x and kappa consume.
struct ColorPattern {
    EdgeLabeledMultigraph pattern;
    std::vector<int> colors;  // pattern vertex -> color in [0,k)
    int k = 0;

    // per edge label, the (ordered as stored, u < v) endpoint colors
    std::vector<std::pair<int, int>> pairs() const;
};

ColorPattern make_color_pattern(EdgeLabeledMultigraph pattern, std::vector<int> colors, int k);

// The joint distribution, over uniform k-colorings of V(G), of the integer
// count vector (per-color vertex counts, then per unordered color pair edge
// counts). Everything downstream of exact cumulants reads from this.
struct CountVectorDistribution {
    int k = 0;
    int n = 0;  // v(G)
    int m = 0;  // |E(G)|
    // atom: coordinate vector (size k + k(k+1)/2) and how many colorings
    // realize it; sorted by vector for deterministic iteration
    std::vector<std::pair<std::vector<int>, BigInt>> atoms;
    BigInt total;  // k^n

    int coord_count() const { return k + k * (k + 1) / 2; }
};

// Index of a coordinate in the count vector: vertex color c -> c; unordered
// pair {i,j} -> k + rank of (min,max) in lexicographic order.
int vertex_coord_index(int k, int c);
int pair_coord_index(int k, int i, int j);

CountVectorDistribution count_vector_distribution(const SimpleGraph& g, int k,
                                                  const Budgets& budgets = default_budgets());

// f_{G,k}(lambda) = (1/v) log E exp(<lambda, v X>), exact expectation over
// all k^v colorings, max-shifted log-sum-exp accumulation.
double cgf_value(const CountVectorDistribution& dist, const LambdaVector& lambda);
double cgf_value(const SimpleGraph& g, int k, const LambdaVector& lambda,
                 const Budgets& budgets = default_budgets());

// x(E,J): probability that a uniform k-coloring of the pattern's vertices
// gives every labeled edge p the endpoint color multiset {i_p, j_p}.
Rational x_value(const EdgeLabeledMultigraph& e_pattern,
                 const std::vector<std::pair<int, int>>& pairs, int k,
                 const Budgets& budgets = default_budgets());
Rational x_value(const ColorPattern& colored, const Budgets& budgets = default_budgets());

// F_pi: disjoint union of the per-block edge subgraphs of F, edge labels kept.
EdgeLabeledMultigraph f_pi(const EdgeLabeledMultigraph& f, const SetPartition& partition);

// kappa(F,J) = sum over partitions pi of (|pi|-1)! (-1)^{|pi|-1} x(F_pi, J).
Rational kappa_fj(const EdgeLabeledMultigraph& f, const std::vector<std::pair<int, int>>& pairs,
                  int k, const Budgets& budgets = default_budgets());

// Joint cumulant of count-vector coordinates listed with multiplicity.
Rational coordinate_cumulant(const CountVectorDistribution& dist, const std::vector<int>& coords);

enum class KappaRoute { direct, decomposition };

// kappa_G(J) for J given as the color pair sequence: either the direct joint
// cumulant of the edge-count coordinates, or sum_F i(F,G) kappa(F,J) over the
// connected patterns realized in G.
Rational kappa_gj(const SimpleGraph& g, const std::vector<std::pair<int, int>>& pairs, int k,
                  KappaRoute route, const Budgets& budgets = default_budgets());

}  // namespace graphlim

#endif
