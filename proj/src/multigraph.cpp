#include "multigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "error.hpp"

namespace graphlim {

EdgeLabeledMultigraph::EdgeLabeledMultigraph(int vertex_count, std::vector<Edge> edge_list)
    : n_(vertex_count), edges_(std::move(edge_list)) {
    if (n_ < 0) fail(ErrorCode::invalid_argument, "negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) fail(ErrorCode::invalid_argument, "loop edge in multigraph");
        if (u < 0 || v >= n_) fail(ErrorCode::invalid_argument, "edge endpoint out of range");
    }
}

bool EdgeLabeledMultigraph::has_isolated_vertex() const {
    std::vector<char> seen(n_, 0);
    for (const auto& [u, v] : edges_) seen[u] = seen[v] = 1;
    for (int v = 0; v < n_; ++v)
        if (!seen[v]) return true;
    return false;
}

int EdgeLabeledMultigraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<EdgeLabeledMultigraph::Component> EdgeLabeledMultigraph::components() const {
    std::vector<int> comp(n_, -1);
    int count = 0;
    for (int start = 0; start < n_; ++start) {
        if (comp[start] >= 0) continue;
        comp[start] = count;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (const auto& [a, b] : edges_) {
                int other = -1;
                if (a == v) other = b;
                else if (b == v) other = a;
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = count;
                    bfs.push(other);
                }
            }
        }
        ++count;
    }
    std::vector<Component> out(count);
    for (int v = 0; v < n_; ++v) out[comp[v]].vertices.push_back(v);
    for (int e = 0; e < edge_count(); ++e) out[comp[edges_[e].first]].edge_labels.push_back(e);
    return out;
}

bool EdgeLabeledMultigraph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

SimpleGraph EdgeLabeledMultigraph::simple_reduction() const {
    std::set<Edge> dedup(edges_.begin(), edges_.end());
    return SimpleGraph(n_, std::vector<Edge>(dedup.begin(), dedup.end()));
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

EdgeLabeledMultigraph induced_pattern(const SimpleGraph& g, const std::vector<int>& edge_tuple) {
    std::vector<int> touched;
    for (int idx : edge_tuple) {
        if (idx < 0 || idx >= g.edge_count())
            fail(ErrorCode::invalid_argument, "edge index out of range in tuple");
        touched.push_back(g.edge(idx).first);
        touched.push_back(g.edge(idx).second);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    std::vector<int> remap(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(touched.size()); ++i) remap[touched[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(edge_tuple.size());
    for (int idx : edge_tuple) {
        const Edge& e = g.edge(idx);
        edges.emplace_back(remap[e.first], remap[e.second]);
    }
    return EdgeLabeledMultigraph(static_cast<int>(touched.size()), std::move(edges));
}

namespace {

std::string encode_labeled(int n, const std::vector<Edge>& edges) {
    std::string out;
    out.reserve(2 + 2 * edges.size());
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(edges.size()));
    for (const auto& [u, v] : edges) {
        out.push_back(static_cast<char>(u));
        out.push_back(static_cast<char>(v));
    }
    return out;
}

// Minimizing relabeling: perm[old vertex] = new label. Vertex counts here are
// at most 2 per edge label, so brute force over n! stays tiny.
std::pair<std::string, std::vector<Edge>> minimize_labeled(const EdgeLabeledMultigraph& g) {
    int n = g.vertex_count();
    if (n > 10) fail(ErrorCode::budget_exceeded, "pattern too large for exact canonical form");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    std::vector<Edge> best_edges;
    std::vector<Edge> relabeled(g.edge_count());
    do {
        for (int e = 0; e < g.edge_count(); ++e) {
            int u = perm[g.edge(e).first], v = perm[g.edge(e).second];
            relabeled[e] = {std::min(u, v), std::max(u, v)};
        }
        std::string code = encode_labeled(n, relabeled);
        if (best.empty() || code < best) {
            best = code;
            best_edges = relabeled;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) {
        best = encode_labeled(n, {});
    }
    return {best, best_edges};
}

}  // namespace

CanonicalCode canonical_form(const EdgeLabeledMultigraph& pattern) {
    return CanonicalCode{minimize_labeled(pattern).first};
}

std::vector<Edge> canonical_edges(const EdgeLabeledMultigraph& pattern) {
    return minimize_labeled(pattern).second;
}

std::string pattern_name(const EdgeLabeledMultigraph& pattern) {
    auto edges = canonical_edges(pattern);
    std::ostringstream out;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) out << ',';
        out << edges[i].first << '-' << edges[i].second;
    }
    if (edges.empty()) out << "empty";
    return out.str();
}

namespace {

// One pass of neighborhood refinement with canonical class renumbering: the
// new class of v is the rank of (old class, sorted neighbor classes). The old
// class leads the signature, so stable classes keep their numbers.
std::vector<int> refine_colors(const SimpleGraph& g, std::vector<int> colors) {
    int n = g.vertex_count();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.push_back(colors[v]);
            for (int u : g.neighbors(v)) sig.push_back(colors[u]);
            std::sort(sig.begin() + 1, sig.end());
            sigs[v] = {std::move(sig), v};
        }
        std::vector<std::vector<int>> distinct;
        for (const auto& [sig, v] : sigs) distinct.push_back(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(n);
        for (const auto& [sig, v] : sigs)
            next[v] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig) - distinct.begin());
        if (next == colors) return colors;
        colors = std::move(next);
    }
}

struct RootedSearch {
    const SimpleGraph& g;
    std::string best;
    long steps = 0;

    void emit(const std::vector<int>& colors) {
        int n = g.vertex_count();
        std::vector<Edge> edges;
        edges.reserve(g.edge_count());
        for (const auto& [u, v] : g.edges()) {
            int a = colors[u], b = colors[v];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        std::string code = encode_labeled(n, edges);
        if (best.empty() || code < best) best = code;
    }

    void descend(std::vector<int> colors) {
        if (++steps > 500000)
            fail(ErrorCode::budget_exceeded, "rooted canonical form search too large");
        int n = g.vertex_count();
        colors = refine_colors(g, std::move(colors));
        // branch on the lowest-numbered non-singleton class
        std::vector<int> size(n, 0);
        for (int c : colors) ++size[c];
        int target = -1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            emit(colors);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colors[v] != target) continue;
            std::vector<int> split(n);
            for (int u = 0; u < n; ++u) split[u] = 2 * colors[u] + (colors[u] == target ? 1 : 0);
            split[v] = 2 * target;  // v alone, ordered before the rest of its class
            descend(std::move(split));
        }
    }
};

}  // namespace

CanonicalCode canonical_rooted(const RootedBall& ball) {
    const SimpleGraph& g = ball.graph;
    int n = g.vertex_count();
    if (n == 0) fail(ErrorCode::invalid_argument, "empty ball");
    // Initial classes from (distance to root, degree); only the root sits at
    // distance zero, so it keeps class 0 through every refinement.
    std::vector<int> dist(n, -1);
    dist[ball.root] = 0;
    std::queue<int> bfs;
    bfs.push(ball.root);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                bfs.push(u);
            }
    }
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) fail(ErrorCode::invalid_argument, "ball graph not connected to root");
    std::vector<std::pair<int, int>> keys(n);
    for (int v = 0; v < n; ++v) keys[v] = {dist[v], g.degree(v)};
    std::vector<std::pair<int, int>> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v)
        colors[v] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
    RootedSearch search{g};
    search.descend(std::move(colors));
    return CanonicalCode{search.best};
}

namespace {

BigInt reduced_laplacian_det(int n, const std::vector<std::vector<BigInt>>& lap) {
    // Bareiss fraction-free elimination on the (n-1)x(n-1) leading minor.
    int m = n - 1;
    if (m == 0) return 1;
    std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = lap[i][j];
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < m; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1];
}

BigInt tree_count_from_edges(int n, const std::vector<Edge>& edges) {
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> lap(n, std::vector<BigInt>(n, 0));
    for (const auto& [u, v] : edges) {
        lap[u][u] += 1;
        lap[v][v] += 1;
        lap[u][v] -= 1;
        lap[v][u] -= 1;
    }
    return reduced_laplacian_det(n, lap);
}

}  // namespace

BigInt spanning_tree_count(const SimpleGraph& g) {
    return tree_count_from_edges(g.vertex_count(), g.edges());
}

BigInt spanning_tree_count(const EdgeLabeledMultigraph& g) {
    return tree_count_from_edges(g.vertex_count(), g.edges());
}

}  // namespace graphlim
