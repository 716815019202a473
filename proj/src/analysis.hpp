#ifndef GRAPHLIM_ANALYSIS_HPP
#define GRAPHLIM_ANALYSIS_HPP

#include <string>
#include <vector>

#include "budget.hpp"
#include "cumulant.hpp"
#include "graph.hpp"
#include "numbers.hpp"
#include "rng.hpp"
#include "target.hpp"

namespace graphlim {

// Auxiliary graph on W = V(G) followed by E(G): a vertex node meets its
// incident edges; an edge node meets its two endpoints and every edge sharing
// an endpoint. Max degree is at most 2 * max_degree(G).
struct DependencyGraph {
    int vertex_nodes = 0;
    int edge_nodes = 0;
    std::vector<std::vector<int>> adjacency;
    int max_degree = 0;

    int node_count() const { return vertex_nodes + edge_nodes; }
};

DependencyGraph dependency_graph(const SimpleGraph& g);

// 2^{r-1} r^{r-2} |W| (delta+1)^{r-1} A^r; r = 1 reads r^{r-2} as 1 and gives
// |W| A.
double fmn_bound(int r, int w_size, int delta, double a);
BigInt fmn_bound_exact(int r, int w_size, int delta);  // A = 1

// Directions with unit effective coordinates: vertex entries, diagonal edge
// entries, and off-diagonal pair sums all in {-1,+1} (split evenly across the
// two raw off-diagonal slots), so each per-vertex and per-edge contribution
// to Y = <lambda0, v X> stays in [-1, 1].
LambdaVector all_ones_direction(int k);
LambdaVector random_sign_direction(int k, Rng& rng);
// Effective coordinates uniform in [-cap, cap], rescaled so the largest
// magnitude equals cap exactly.
LambdaVector random_effective_lambda(int k, double cap, Rng& rng);
// Every raw coordinate uniform in [-cap, cap].
LambdaVector random_raw_lambda(int k, double cap, Rng& rng);

struct DirectionCumulants {
    int r_max = 0;
    int w_size = 0;   // v + m
    int delta = 0;    // 2 * degree bound
    std::vector<Rational> kappa;   // kappa_1 .. kappa_{r_max}
    std::vector<BigInt> bound;     // fmn_bound_exact per order
    bool first_within = false;     // |kappa_1| <= bound_1
    bool rest_strict = false;      // |kappa_r| < bound_r for r >= 2
};

// Exact cumulants of Y = <lambda0, v X> over the uniform coloring, compared
// against the dependency-graph bound with A = 1.
DirectionCumulants direction_cumulants(const CountVectorDistribution& dist, const SimpleGraph& g,
                                       const LambdaVector& lambda0, int r_max);
DirectionCumulants direction_cumulants(const SimpleGraph& g, int k, const LambdaVector& lambda0,
                                       int r_max, const Budgets& budgets = default_budgets());

// One edge subset checked against |kappa| <= 2^{r-1} tree(H_dep), where the
// variables are cross-color indicators of the subset's edges and H_dep links
// edges sharing an endpoint.
struct TreeCheck {
    std::vector<int> edge_subset;
    int r = 0;
    bool dep_connected = false;
    BigInt tree_count;
    Rational kappa;
    bool passed = false;
};

std::vector<TreeCheck> spanning_tree_cumulant_checks(const SimpleGraph& g, int k, int max_r,
                                                     const Budgets& budgets = default_budgets());

// Taylor coefficients of f_{G,k} at 0 over the effective coordinates
// (k vertex coords, then unordered pair coords in pair_coord_index order).
struct TaylorTerm {
    std::vector<int> alpha;  // multi-index, size k + k(k+1)/2
    int order = 0;
    Rational coefficient;    // kappa_alpha / (v * alpha!)
    double coefficient_dbl = 0.0;
};

struct TaylorModel {
    int k = 0;
    int order = 0;
    int n = 0;
    int m = 0;
    int degree_bound = 0;
    std::vector<TaylorTerm> terms;  // (order, alpha) ascending; alpha = 0 excluded
};

TaylorModel taylor_model(const SimpleGraph& g, int k, int order,
                         const Budgets& budgets = default_budgets());

// Evaluate the model truncated to |alpha| <= truncate_order (-1 = full).
// inside_radius, when given, reports ||lambda||_inf < radius(degree_bound).
double taylor_eval(const TaylorModel& model, const LambdaVector& lambda, int truncate_order = -1,
                   bool* inside_radius = nullptr);

double radius(int degree_bound);  // 1 / (4 e D)

// Sum over l > order of 2^{l-2} l^{l-2} (D+2) (2D+1)^{l-1} z^l / l!  (the
// per-order derivative bound divided by v(G) and l!). +infinity once the
// term ratio bound 2(2D+1)ez reaches 1.
double tail_majorant(int degree_bound, int order, double z);

std::string serialize_taylor_model(const TaylorModel& model);

// Family diagnostics across n: exact i(F,G_n)/v(G_n) columns per connected
// catalog pattern, inj/ind densities for small simple graphs, f values at
// sampled lambdas, ball-distribution summaries, successive differences.
struct SequenceSpec {
    std::string family;  // cycle | path | torus | complete | random_regular
    int n_min = 0;
    int n_max = 0;
    int n_step = 1;
    int k = 2;
    int max_pattern_length = 2;  // L
    std::vector<LambdaVector> lambdas;
    std::vector<int> ball_radii = {1, 2, 3};
    int regular_degree = 3;
    std::uint64_t seed = 1;
};

struct SequenceCell {
    bool present = false;
    bool exact = false;
    Rational q;          // when exact
    double x = 0.0;      // numeric mirror (also set for exact cells)
    std::string text;    // rendered value (digest columns etc.)
    bool numeric = false;
    std::string note;    // why absent
};

struct SequenceReport {
    SequenceSpec spec;
    std::vector<std::string> columns;
    struct Row {
        int index = 0;  // family parameter
        int n = 0;      // v(G_n)
        bool skipped = false;
        std::string skip_reason;
        std::vector<SequenceCell> cells;
    };
    std::vector<Row> rows;
    struct ColumnDiff {
        std::string column;
        std::vector<double> deltas;  // successive differences over present rows
        double slope_vs_inv_n = 0.0; // least-squares slope of |delta| against 1/n
    };
    std::vector<ColumnDiff> diffs;
};

SequenceReport sequence_report(const SequenceSpec& spec,
                               const Budgets& budgets = default_budgets());
std::string sequence_report_csv(const SequenceReport& report);
std::string sequence_report_json(const SequenceReport& report);

}  // namespace graphlim

#endif
