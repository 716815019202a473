#ifndef GRAPHLIM_MULTIGRAPH_HPP
#define GRAPHLIM_MULTIGRAPH_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "numbers.hpp"

namespace graphlim {

// Loop-free multigraph with edges labeled by their position 1..l and no
// isolated vertices expected for catalog members. Parallel edges are
// distinct labels on the same endpoint pair.
class EdgeLabeledMultigraph {
public:
    EdgeLabeledMultigraph() = default;
    EdgeLabeledMultigraph(int vertex_count, std::vector<Edge> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int label) const { return edges_[label]; }

    bool has_isolated_vertex() const;
    bool connected() const;
    int degree(int v) const;  // counts multiplicity

    // Connected components as sorted vertex index lists, and the edge labels
    // inside each component.
    struct Component {
        std::vector<int> vertices;
        std::vector<int> edge_labels;
    };
    std::vector<Component> components() const;

    // Deduplicates parallel edges; resulting simple graph keeps this
    // multigraph's vertex numbering.
    SimpleGraph simple_reduction() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Opaque byte string; equal codes hold exactly for isomorphic objects
// (label-preserving for patterns, root-preserving for balls).
struct CanonicalCode {
    std::string bytes;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
    std::string hex() const;
};

// The multigraph induced by an ordered tuple of edge indices of G; vertices
// are the endpoints of the chosen edges only, numbered by sorted original
// index. Repeated indices give parallel edges.
EdgeLabeledMultigraph induced_pattern(const SimpleGraph& g,
                                      const std::vector<int>& edge_tuple);

// Exact canonical form by minimization over all vertex orderings; pattern
// vertex counts stay at most 2l <= 8, so exhaustive search is fine.
CanonicalCode canonical_form(const EdgeLabeledMultigraph& pattern);

// Human-readable name derived from the canonical form, e.g. "0-1,0-2" for
// the 2-path with edge 1 = {0,1}, edge 2 = {0,2}.
std::string pattern_name(const EdgeLabeledMultigraph& pattern);

// Canonical edge list of the minimizing relabeling (the edges behind
// pattern_name / canonical_form).
std::vector<Edge> canonical_edges(const EdgeLabeledMultigraph& pattern);

// Root-preserving canonical form via iterated degree/layer refinement plus
// exhaustive search inside the refined classes.
CanonicalCode canonical_rooted(const RootedBall& ball);

// Exact spanning tree count via an integer reduced-Laplacian determinant
// (Bareiss elimination). 0 for disconnected graphs with >= 2 vertices,
// 1 for a single vertex. Parallel edges contribute multiplicity.
BigInt spanning_tree_count(const SimpleGraph& g);
BigInt spanning_tree_count(const EdgeLabeledMultigraph& g);

}  // namespace graphlim

#endif
