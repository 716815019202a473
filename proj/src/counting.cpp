#include "counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "error.hpp"

namespace graphlim {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Placement order for backtracking: each step picks the unplaced vertex with
// the most already-placed neighbors, so adjacency constraints bite early.
std::vector<int> search_order(const SimpleGraph& g) {
    int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            int score = 0;
            for (int u : g.neighbors(v))
                if (placed[u]) ++score;
            if (score > best_score) {
                best = v;
                best_score = score;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

enum class MapMode { hom, inj, ind };

struct MapCounter {
    const SimpleGraph& g;
    const SimpleGraph& h;
    MapMode mode;
    std::uint64_t node_budget;
    std::vector<int> order;
    std::vector<int> image;     // g-vertex -> h-vertex or -1
    std::vector<char> used;     // h-vertex occupied (inj/ind)
    std::uint64_t nodes = 0;
    BigInt total = 0;

    MapCounter(const SimpleGraph& g_, const SimpleGraph& h_, MapMode mode_, std::uint64_t budget)
        : g(g_), h(h_), mode(mode_), node_budget(budget), order(search_order(g_)),
          image(g_.vertex_count(), -1), used(h_.vertex_count(), 0) {}

    bool consistent(int v, int x) const {
        if (mode != MapMode::hom && used[x]) return false;
        if (mode == MapMode::ind) {
            for (int u = 0; u < g.vertex_count(); ++u) {
                if (image[u] < 0) continue;
                if (g.adjacent(u, v) != h.adjacent(image[u], x)) return false;
            }
            return true;
        }
        for (int u : g.neighbors(v)) {
            if (image[u] < 0) continue;
            if (!h.adjacent(image[u], x)) return false;
        }
        return true;
    }

    void place(size_t pos) {
        if (pos == order.size()) {
            total += 1;
            return;
        }
        int v = order[pos];
        for (int x = 0; x < h.vertex_count(); ++x) {
            if (++nodes > node_budget)
                fail(ErrorCode::budget_exceeded, "map enumeration exceeded the node budget");
            if (!consistent(v, x)) continue;
            image[v] = x;
            if (mode != MapMode::hom) used[x] = 1;
            place(pos + 1);
            image[v] = -1;
            if (mode != MapMode::hom) used[x] = 0;
        }
    }
};

BigInt count_maps(const SimpleGraph& g, const SimpleGraph& h, MapMode mode, const Budgets& b) {
    if (g.vertex_count() == 0) return 1;
    if (h.vertex_count() == 0) return 0;
    MapCounter counter(g, h, mode, b.max_tuples);
    counter.place(0);
    return counter.total;
}

}  // namespace

BigInt hom_count(const SimpleGraph& g, const SimpleGraph& h, const Budgets& budgets) {
    return count_maps(g, h, MapMode::hom, budgets);
}

BigInt inj_count(const SimpleGraph& g, const SimpleGraph& h, const Budgets& budgets) {
    return count_maps(g, h, MapMode::inj, budgets);
}

BigInt ind_count(const SimpleGraph& g, const SimpleGraph& h, const Budgets& budgets) {
    return count_maps(g, h, MapMode::ind, budgets);
}

namespace {

void check_coloring_budget(const SimpleGraph& g, int k, const Budgets& b) {
    if (saturating_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(g.vertex_count())) >
        b.max_colorings)
        fail(ErrorCode::budget_exceeded,
             "k^{v(G)} colorings exceed the enumeration budget");
}

struct ExactHomWalker {
    const SimpleGraph& g;
    const WeightedTarget& h;
    std::vector<int> order;
    std::vector<int> color;  // g-vertex -> color or -1
    Rational total = 0;

    ExactHomWalker(const SimpleGraph& g_, const WeightedTarget& h_)
        : g(g_), h(h_), order(search_order(g_)), color(g_.vertex_count(), -1) {}

    void walk(size_t pos, const Rational& weight) {
        if (pos == order.size()) {
            total += weight;
            return;
        }
        int v = order[pos];
        for (int c = 0; c < h.color_count(); ++c) {
            Rational w = weight * h.vertex_weight_exact(c);
            if (w == 0) continue;
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (color[u] < 0) continue;
                w *= h.edge_weight_exact(color[u], c);
                if (w == 0) {
                    dead = true;
                    break;
                }
            }
            if (dead) continue;
            color[v] = c;
            walk(pos + 1, w);
            color[v] = -1;
        }
    }
};

// Streaming max-shifted accumulation of log(sum of exp(x_i)).
struct LogSumAcc {
    double max_log = kNegInf;
    double scaled_sum = 0.0;

    void add(double x) {
        if (x == kNegInf) return;
        if (max_log == kNegInf) {
            max_log = x;
            scaled_sum = 1.0;
        } else if (x <= max_log) {
            scaled_sum += std::exp(x - max_log);
        } else {
            scaled_sum = scaled_sum * std::exp(max_log - x) + 1.0;
            max_log = x;
        }
    }

    double value() const {
        if (max_log == kNegInf) return kNegInf;
        return max_log + std::log(scaled_sum);
    }
};

struct LogHomWalker {
    const SimpleGraph& g;
    int k;
    std::vector<double> log_vertex;
    std::vector<std::vector<double>> log_edge;
    std::vector<int> order;
    std::vector<int> color;
    LogSumAcc acc;

    LogHomWalker(const SimpleGraph& g_, const WeightedTarget& h)
        : g(g_), k(h.color_count()), order(search_order(g_)), color(g_.vertex_count(), -1) {
        log_vertex.resize(k);
        log_edge.assign(k, std::vector<double>(k));
        for (int c = 0; c < k; ++c)
            log_vertex[c] = h.vertex_weight(c) > 0 ? std::log(h.vertex_weight(c)) : kNegInf;
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                log_edge[a][b] = h.edge_weight(a, b) > 0 ? std::log(h.edge_weight(a, b)) : kNegInf;
    }

    void walk(size_t pos, double log_weight) {
        if (pos == order.size()) {
            acc.add(log_weight);
            return;
        }
        int v = order[pos];
        for (int c = 0; c < k; ++c) {
            if (log_vertex[c] == kNegInf) continue;
            double lw = log_weight + log_vertex[c];
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (color[u] < 0) continue;
                double le = log_edge[color[u]][c];
                if (le == kNegInf) {
                    dead = true;
                    break;
                }
                lw += le;
            }
            if (dead) continue;
            color[v] = c;
            walk(pos + 1, lw);
            color[v] = -1;
        }
    }
};

}  // namespace

Rational weighted_hom_exact(const SimpleGraph& g, const WeightedTarget& h, const Budgets& budgets) {
    check_coloring_budget(g, h.color_count(), budgets);
    ExactHomWalker walker(g, h);
    walker.walk(0, 1);
    return walker.total;
}

double log_weighted_hom(const SimpleGraph& g, const WeightedTarget& h, const Budgets& budgets) {
    check_coloring_budget(g, h.color_count(), budgets);
    LogHomWalker walker(g, h);
    walker.walk(0, 0.0);
    return walker.acc.value();
}

double weighted_hom(const SimpleGraph& g, const WeightedTarget& h, const Budgets& budgets) {
    double lh = log_weighted_hom(g, h, budgets);
    return lh == kNegInf ? 0.0 : std::exp(lh);
}

double log_t_density(const SimpleGraph& g, const WeightedTarget& h, const Budgets& budgets) {
    double lh = log_weighted_hom(g, h, budgets);
    if (lh == kNegInf)
        fail(ErrorCode::domain_error,
             "hard-core zero: weighted homomorphism sum vanished, log t undefined");
    return lh - g.vertex_count() * std::log(static_cast<double>(h.color_count()));
}

double t_density(const SimpleGraph& g, const WeightedTarget& h, const Budgets& budgets) {
    double lh = log_weighted_hom(g, h, budgets);
    if (lh == kNegInf) return 0.0;
    return std::exp(lh - g.vertex_count() * std::log(static_cast<double>(h.color_count())));
}

Rational t_density_exact(const SimpleGraph& g, const WeightedTarget& h, const Budgets& budgets) {
    Rational hom = weighted_hom_exact(g, h, budgets);
    return hom / Rational(integer_pow(h.color_count(), static_cast<unsigned>(g.vertex_count())));
}

namespace {

// Shape key of an edge tuple: endpoints renumbered by first appearance. Equal
// keys mean identical labeled patterns, which keeps canonical_form calls to
// one per shape.
std::string tuple_shape_key(const SimpleGraph& g, const std::vector<int>& tuple,
                            std::vector<int>& scratch_ids) {
    std::fill(scratch_ids.begin(), scratch_ids.end(), -1);
    int next_id = 0;
    std::string key;
    key.reserve(2 * tuple.size());
    for (int idx : tuple) {
        const Edge& e = g.edge(idx);
        for (int endpoint : {e.first, e.second}) {
            if (scratch_ids[endpoint] < 0) scratch_ids[endpoint] = next_id++;
        }
        key.push_back(static_cast<char>(scratch_ids[e.first]));
        key.push_back(static_cast<char>(scratch_ids[e.second]));
    }
    return key;
}

}  // namespace

std::vector<PatternCount> i_profile(const SimpleGraph& g, int length, const Budgets& budgets) {
    if (length < 1) fail(ErrorCode::invalid_argument, "pattern length must be at least 1");
    if (length > budgets.max_pattern_length)
        fail(ErrorCode::budget_exceeded, "pattern length exceeds the configured maximum");
    std::uint64_t m = static_cast<std::uint64_t>(g.edge_count());
    if (m == 0) return {};
    if (saturating_pow(m, static_cast<unsigned>(length)) > budgets.max_tuples)
        fail(ErrorCode::budget_exceeded, "edge tuple count m^l exceeds the enumeration budget");

    std::vector<PatternCount> profile;
    std::unordered_map<std::string, int> shape_slot;
    std::map<std::string, int> code_slot;
    std::vector<int> tuple(length, 0);
    std::vector<int> scratch_ids(g.vertex_count(), -1);
    for (;;) {
        std::string key = tuple_shape_key(g, tuple, scratch_ids);
        auto hit = shape_slot.find(key);
        int slot;
        if (hit != shape_slot.end()) {
            slot = hit->second;
        } else {
            EdgeLabeledMultigraph pattern = induced_pattern(g, tuple);
            CanonicalCode code = canonical_form(pattern);
            auto known = code_slot.find(code.bytes);
            if (known != code_slot.end()) {
                slot = known->second;
            } else {
                slot = static_cast<int>(profile.size());
                profile.push_back({pattern, code, pattern_name(pattern), 0});
                code_slot.emplace(code.bytes, slot);
            }
            shape_slot.emplace(std::move(key), slot);
        }
        profile[slot].count += 1;

        int pos = length - 1;
        while (pos >= 0 && tuple[pos] == static_cast<int>(m) - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    std::sort(profile.begin(), profile.end(), [](const PatternCount& a, const PatternCount& b) {
        if (a.rep.vertex_count() != b.rep.vertex_count())
            return a.rep.vertex_count() < b.rep.vertex_count();
        return a.code < b.code;
    });
    return profile;
}

BallDistribution ball_distribution(const SimpleGraph& g, int radius) {
    if (radius < 0) fail(ErrorCode::invalid_argument, "negative ball radius");
    int n = g.vertex_count();
    if (n == 0) fail(ErrorCode::invalid_argument, "ball distribution needs a nonempty graph");
    std::map<std::string, BigInt> tally;
    for (int root = 0; root < n; ++root) {
        RootedBall ball = extract_ball(g, root, radius);
        tally[canonical_rooted(ball).bytes] += 1;
    }
    BallDistribution out;
    out.radius = radius;
    for (const auto& [code, count] : tally)
        out.freqs.emplace_back(CanonicalCode{code}, Rational(count, n));
    return out;
}

}  // namespace graphlim
