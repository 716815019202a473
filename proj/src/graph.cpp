#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace graphlim {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges,
                         std::optional<int> declared_degree_bound)
    : n_(n), edges_(std::move(edges)), degree_bound_(declared_degree_bound) {
    if (n_ < 0) fail(ErrorCode::invalid_argument, "negative vertex count");
    if (degree_bound_ && *degree_bound_ <= 0)
        fail(ErrorCode::invalid_argument, "degree bound must be positive");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v)
            fail(ErrorCode::invalid_argument,
                 "loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n_)
            fail(ErrorCode::invalid_argument,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range for n=" + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        fail(ErrorCode::invalid_argument, "duplicate edge");
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    if (degree_bound_) {
        for (int v = 0; v < n_; ++v)
            if (degree(v) > *degree_bound_)
                fail(ErrorCode::invalid_argument,
                     "vertex " + std::to_string(v) + " exceeds declared degree bound");
        // |E| <= n D / 2 follows from the degree bound, asserted anyway.
        if (2 * edge_count() > n_ * *degree_bound_)
            fail(ErrorCode::invalid_argument, "edge count exceeds n*D/2");
    }
}

bool SimpleGraph::adjacent(int u, int v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int SimpleGraph::effective_degree_bound() const {
    if (degree_bound_) return *degree_bound_;
    return std::max(1, max_degree());
}

SimpleGraph SimpleGraph::with_degree_bound(int bound) const {
    return SimpleGraph(n_, edges_, bound);
}

bool SimpleGraph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : adjacency_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
    }
    return reached == n_;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

SimpleGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    long n = 0, m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> n >> m)) parse_fail(line_no, "expected header 'n m'");
            std::string extra;
            if (fields >> extra) parse_fail(line_no, "trailing data after header");
            if (n < 0 || m < 0) parse_fail(line_no, "negative count in header");
            have_header = true;
            continue;
        }
        long u, v;
        if (!(fields >> u >> v)) parse_fail(line_no, "expected edge 'u v'");
        std::string extra;
        if (fields >> extra) parse_fail(line_no, "trailing data after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            parse_fail(line_no, "vertex index out of range [0," + std::to_string(n) + ")");
        if (u == v) parse_fail(line_no, "loop at vertex " + std::to_string(u));
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second)
            parse_fail(line_no, "duplicate edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ")");
        edges.push_back(e);
    }
    if (!have_header)
        fail(ErrorCode::parse_error, "empty document, expected header 'n m'");
    if (static_cast<long>(edges.size()) != m)
        fail(ErrorCode::parse_error,
             "header declares " + std::to_string(m) + " edges, found " +
                 std::to_string(edges.size()));
    return SimpleGraph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph make_cycle(int n) {
    if (n < 3) fail(ErrorCode::invalid_argument, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return SimpleGraph(n, std::move(edges), 2);
}

SimpleGraph make_path(int n) {
    if (n < 1) fail(ErrorCode::invalid_argument, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph(n, std::move(edges), 2);
}

SimpleGraph make_torus(int a, int b) {
    if (a < 3 || b < 3) fail(ErrorCode::invalid_argument, "torus needs a,b >= 3");
    auto id = [b](int i, int j) { return i * b + j; };
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            edges.emplace_back(id(i, j), id((i + 1) % a, j));
            edges.emplace_back(id(i, j), id(i, (j + 1) % b));
        }
    return SimpleGraph(a * b, std::move(edges), 4);
}

SimpleGraph make_complete(int n) {
    if (n < 1) fail(ErrorCode::invalid_argument, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return SimpleGraph(n, std::move(edges), std::max(1, n - 1));
}

SimpleGraph make_random_regular(int n, int d, std::uint64_t seed) {
    if (n <= 0 || d <= 0 || d >= n)
        fail(ErrorCode::invalid_argument, "random regular graph needs 0 < d < n");
    if ((static_cast<long>(n) * d) % 2 != 0)
        fail(ErrorCode::invalid_argument, "random regular graph needs n*d even");
    const int max_attempts = 1000;
    Rng rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (!edges.insert({std::min(u, v), std::max(u, v)}).second) {
                ok = false;
                break;
            }
        }
        if (ok)
            return SimpleGraph(n, std::vector<Edge>(edges.begin(), edges.end()), d);
    }
    fail(ErrorCode::generation_failed,
         "configuration model failed after " + std::to_string(max_attempts) +
             " attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

RootedBall extract_ball(const SimpleGraph& g, int root, int radius) {
    if (root < 0 || root >= g.vertex_count())
        fail(ErrorCode::invalid_argument, "root out of range");
    if (radius < 0) fail(ErrorCode::invalid_argument, "negative radius");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> order;
    std::queue<int> queue;
    dist[root] = 0;
    queue.push(root);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        order.push_back(v);
        if (dist[v] == radius) continue;
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
    }
    std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (remap[u] >= 0 && remap[v] >= 0)
            edges.emplace_back(remap[u], remap[v]);
    RootedBall ball;
    ball.graph = SimpleGraph(static_cast<int>(order.size()), std::move(edges));
    ball.root = 0;  // BFS order puts the root first
    ball.radius = radius;
    return ball;
}

}  // namespace graphlim
