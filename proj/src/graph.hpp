#ifndef GRAPHLIM_GRAPH_HPP
#define GRAPHLIM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphlim {

using Edge = std::pair<int, int>;  // stored with first < second

// Finite undirected simple graph on vertices 0..n-1. Immutable after
// construction; the constructor validates every invariant (no loops, no
// duplicates, indices in range, declared degree bound respected).
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, std::vector<Edge> edges,
                std::optional<int> declared_degree_bound = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }
    std::optional<int> declared_degree_bound() const { return degree_bound_; }

    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    // Declared bound when present, otherwise the actual maximum degree
    // (at least 1, so radius formulas stay finite).
    int effective_degree_bound() const;

    SimpleGraph with_degree_bound(int bound) const;

    bool connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::optional<int> degree_bound_;
    std::vector<std::vector<int>> adjacency_;
};

// Edge-list document (External Interfaces): first line "n m", then m lines
// "u v"; '#' starts a comment line; blank lines ignored. Errors carry the
// 1-based line number of the offending line.
SimpleGraph parse_graph(const std::string& text);
std::string serialize_graph(const SimpleGraph& g);

// Deterministic generator families. Degree bounds are declared as 2 for
// cycles and paths, 4 for tori, n-1 for complete graphs and d for random
// regular graphs.
SimpleGraph make_cycle(int n);
SimpleGraph make_path(int n);
SimpleGraph make_torus(int a, int b);
SimpleGraph make_complete(int n);
// Configuration model with rejection of loops and parallel edges, at most
// 1000 attempts. Reproducible for a fixed seed.
SimpleGraph make_random_regular(int n, int d, std::uint64_t seed);

struct RootedBall {
    SimpleGraph graph;  // induced subgraph on the ball, vertices renumbered
    int root = 0;       // index of the root inside `graph`
    int radius = 0;
};

// Induced subgraph on all vertices at distance <= radius from root.
RootedBall extract_ball(const SimpleGraph& g, int root, int radius);

}  // namespace graphlim

#endif
