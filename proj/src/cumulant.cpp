#include "cumulant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "error.hpp"

namespace graphlim {

ColorStatistics color_statistics(const SimpleGraph& g, const std::vector<int>& coloring, int k) {
    int n = g.vertex_count();
    if (k < 1) fail(ErrorCode::invalid_argument, "color count must be positive");
    if (static_cast<int>(coloring.size()) != n)
        fail(ErrorCode::invalid_argument, "coloring must assign every vertex");
    if (n == 0) fail(ErrorCode::invalid_argument, "color statistics need a nonempty graph");
    for (int c : coloring)
        if (c < 0 || c >= k) fail(ErrorCode::invalid_argument, "color out of range");
    ColorStatistics stats;
    stats.k = k;
    stats.v = n;
    stats.vertex_share.assign(k, 0);
    stats.edge_share.assign(k, std::vector<Rational>(k, 0));
    Rational unit(1, n);
    for (int c : coloring) stats.vertex_share[c] += unit;
    for (const auto& [u, v] : g.edges()) {
        int a = coloring[u], b = coloring[v];
        stats.edge_share[a][b] += unit;
        if (a != b) stats.edge_share[b][a] += unit;
    }
    return stats;
}

std::vector<std::pair<int, int>> ColorPattern::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pattern.edge_count());
    for (const auto& [u, v] : pattern.edges()) out.emplace_back(colors[u], colors[v]);
    return out;
}

ColorPattern make_color_pattern(EdgeLabeledMultigraph pattern, std::vector<int> colors, int k) {
    if (static_cast<int>(colors.size()) != pattern.vertex_count())
        fail(ErrorCode::invalid_argument, "color assignment must cover every pattern vertex");
    for (int c : colors)
        if (c < 0 || c >= k) fail(ErrorCode::invalid_argument, "pattern color out of range");
    return ColorPattern{std::move(pattern), std::move(colors), k};
}

int vertex_coord_index(int k, int c) {
    if (c < 0 || c >= k) fail(ErrorCode::invalid_argument, "vertex coordinate out of range");
    return c;
}

int pair_coord_index(int k, int i, int j) {
    if (i < 0 || i >= k || j < 0 || j >= k)
        fail(ErrorCode::invalid_argument, "pair coordinate out of range");
    int a = std::min(i, j), b = std::max(i, j);
    // rank of (a,b) with a <= b in lexicographic order
    int rank = a * k - a * (a - 1) / 2 + (b - a);
    return k + rank;
}

CountVectorDistribution count_vector_distribution(const SimpleGraph& g, int k,
                                                  const Budgets& budgets) {
    int n = g.vertex_count();
    if (k < 1) fail(ErrorCode::invalid_argument, "color count must be positive");
    if (n == 0) fail(ErrorCode::invalid_argument, "count vector needs a nonempty graph");
    if (saturating_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(n)) >
        budgets.max_colorings)
        fail(ErrorCode::budget_exceeded, "k^{v(G)} colorings exceed the enumeration budget");

    CountVectorDistribution dist;
    dist.k = k;
    dist.n = n;
    dist.m = g.edge_count();
    dist.total = integer_pow(k, static_cast<unsigned>(n));
    int coords = dist.coord_count();

    std::map<std::vector<int>, BigInt> tally;
    std::vector<int> coloring(n, 0);
    std::vector<int> vec(coords);
    for (;;) {
        std::fill(vec.begin(), vec.end(), 0);
        for (int c : coloring) ++vec[c];
        for (const auto& [u, v] : g.edges()) ++vec[pair_coord_index(k, coloring[u], coloring[v])];
        tally[vec] += 1;

        int pos = n - 1;
        while (pos >= 0 && coloring[pos] == k - 1) coloring[pos--] = 0;
        if (pos < 0) break;
        ++coloring[pos];
    }
    dist.atoms.assign(tally.begin(), tally.end());
    return dist;
}

double cgf_value(const CountVectorDistribution& dist, const LambdaVector& lambda) {
    if (lambda.k != dist.k) fail(ErrorCode::invalid_argument, "lambda color count mismatch");
    int k = dist.k;
    // effective weight per coordinate: vertex c -> lambda_c; pair (i,j) ->
    // lambda_ij + lambda_ji off-diagonal (X_ij and X_ji both carry the count),
    // lambda_ii on the diagonal
    std::vector<double> eff(dist.coord_count());
    for (int c = 0; c < k; ++c) eff[vertex_coord_index(k, c)] = lambda.vertex[c];
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            eff[pair_coord_index(k, i, j)] =
                (i == j) ? lambda.edge[i][i] : lambda.edge[i][j] + lambda.edge[j][i];

    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(dist.atoms.size());
    for (const auto& [vec, count] : dist.atoms) {
        double dot = 0.0;
        for (size_t c = 0; c < vec.size(); ++c)
            if (vec[c]) dot += vec[c] * eff[c];
        double lg = dot + std::log(static_cast<double>(count));
        logs.push_back(lg);
        max_log = std::max(max_log, lg);
    }
    double scaled = 0.0;
    for (double lg : logs) scaled += std::exp(lg - max_log);
    double log_total = std::log(static_cast<double>(dist.total));
    return (max_log + std::log(scaled) - log_total) / dist.n;
}

double cgf_value(const SimpleGraph& g, int k, const LambdaVector& lambda, const Budgets& budgets) {
    return cgf_value(count_vector_distribution(g, k, budgets), lambda);
}

namespace {

struct XCounter {
    const EdgeLabeledMultigraph& pattern;
    const std::vector<std::pair<int, int>>& pairs;
    int k;
    std::vector<int> color;  // pattern vertex -> color or -1
    BigInt good = 0;

    bool edge_ok(int label, int u_color, int v_color) const {
        auto [i, j] = pairs[label];
        return (u_color == i && v_color == j) || (u_color == j && v_color == i);
    }

    void walk(int v) {
        if (v == pattern.vertex_count()) {
            good += 1;
            return;
        }
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int e = 0; e < pattern.edge_count() && ok; ++e) {
                auto [a, b] = pattern.edge(e);
                if (a == v && color[b] >= 0) ok = edge_ok(e, c, color[b]);
                else if (b == v && color[a] >= 0) ok = edge_ok(e, color[a], c);
            }
            if (!ok) continue;
            color[v] = c;
            walk(v + 1);
            color[v] = -1;
        }
    }
};

}  // namespace

Rational x_value(const EdgeLabeledMultigraph& e_pattern,
                 const std::vector<std::pair<int, int>>& pairs, int k, const Budgets& budgets) {
    if (static_cast<int>(pairs.size()) != e_pattern.edge_count())
        fail(ErrorCode::invalid_argument, "pair sequence length must match pattern edge count");
    for (const auto& [i, j] : pairs)
        if (i < 0 || i >= k || j < 0 || j >= k)
            fail(ErrorCode::invalid_argument, "pair color out of range");
    int n = e_pattern.vertex_count();
    if (n > budgets.max_pattern_vertices)
        fail(ErrorCode::budget_exceeded, "pattern vertex count exceeds the enumeration budget");
    XCounter counter{e_pattern, pairs, k, std::vector<int>(n, -1)};
    counter.walk(0);
    return Rational(counter.good, integer_pow(k, static_cast<unsigned>(n)));
}

Rational x_value(const ColorPattern& colored, const Budgets& budgets) {
    return x_value(colored.pattern, colored.pairs(), colored.k, budgets);
}

EdgeLabeledMultigraph f_pi(const EdgeLabeledMultigraph& f, const SetPartition& partition) {
    int l = f.edge_count();
    std::vector<char> seen(l, 0);
    for (const auto& block : partition.blocks)
        for (int p : block) {
            if (p < 0 || p >= l || seen[p])
                fail(ErrorCode::invalid_argument, "partition does not match edge labels");
            seen[p] = 1;
        }
    for (int p = 0; p < l; ++p)
        if (!seen[p]) fail(ErrorCode::invalid_argument, "partition does not cover all edge labels");

    std::vector<Edge> union_edges(l);
    int offset = 0;
    for (const auto& block : partition.blocks) {
        // vertices of this block's subgraph, renumbered after the previous blocks
        std::vector<int> touched;
        for (int p : block) {
            touched.push_back(f.edge(p).first);
            touched.push_back(f.edge(p).second);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        std::vector<int> remap(f.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(touched.size()); ++i) remap[touched[i]] = offset + i;
        for (int p : block)
            union_edges[p] = {remap[f.edge(p).first], remap[f.edge(p).second]};
        offset += static_cast<int>(touched.size());
    }
    return EdgeLabeledMultigraph(offset, std::move(union_edges));
}

Rational kappa_fj(const EdgeLabeledMultigraph& f, const std::vector<std::pair<int, int>>& pairs,
                  int k, const Budgets& budgets) {
    int l = f.edge_count();
    if (static_cast<int>(pairs.size()) != l)
        fail(ErrorCode::invalid_argument, "pair sequence length must match pattern edge count");
    Rational total = 0;
    for (const SetPartition& p : enumerate_partitions(l)) {
        Rational term(partition_weight(p.block_count()));
        term *= x_value(f_pi(f, p), pairs, k, budgets);
        total += term;
    }
    return total;
}

Rational coordinate_cumulant(const CountVectorDistribution& dist, const std::vector<int>& coords) {
    int r = static_cast<int>(coords.size());
    if (r < 1 || r > 8) fail(ErrorCode::invalid_argument, "cumulant order must be in 1..8");
    for (int c : coords)
        if (c < 0 || c >= dist.coord_count())
            fail(ErrorCode::invalid_argument, "count vector coordinate out of range");
    std::vector<Rational> moments(1u << r, Rational(0));
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        BigInt sum = 0;
        for (const auto& [vec, count] : dist.atoms) {
            BigInt prod = count;
            for (int p = 0; p < r && prod != 0; ++p)
                if (mask & (1u << p)) prod *= vec[coords[p]];
            sum += prod;
        }
        moments[mask] = Rational(sum, dist.total);
    }
    return joint_cumulant(r, moments);
}

Rational kappa_gj(const SimpleGraph& g, const std::vector<std::pair<int, int>>& pairs, int k,
                  KappaRoute route, const Budgets& budgets) {
    int l = static_cast<int>(pairs.size());
    if (l < 1) fail(ErrorCode::invalid_argument, "pair sequence must be nonempty");
    for (const auto& [i, j] : pairs)
        if (i < 0 || i >= k || j < 0 || j >= k)
            fail(ErrorCode::invalid_argument, "pair color out of range");
    if (route == KappaRoute::direct) {
        CountVectorDistribution dist = count_vector_distribution(g, k, budgets);
        std::vector<int> coords;
        coords.reserve(l);
        for (const auto& [i, j] : pairs) coords.push_back(pair_coord_index(k, i, j));
        return coordinate_cumulant(dist, coords);
    }
    Rational total = 0;
    for (const PatternCount& entry : i_profile(g, l, budgets)) {
        if (!entry.rep.connected()) continue;  // kappa vanishes off the connected catalog
        total += Rational(entry.count) * kappa_fj(entry.rep, pairs, k, budgets);
    }
    return total;
}

}  // namespace graphlim
