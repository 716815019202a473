#include "analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "json.hpp"
#include "multigraph.hpp"
#include "partitions.hpp"

namespace graphlim {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational abs_ratio(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::string real_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

DependencyGraph dependency_graph(const SimpleGraph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    DependencyGraph dep;
    dep.vertex_nodes = n;
    dep.edge_nodes = m;
    dep.adjacency.assign(n + m, {});

    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < m; ++e) {
        incident[g.edge(e).first].push_back(e);
        incident[g.edge(e).second].push_back(e);
    }
    for (int v = 0; v < n; ++v)
        for (int e : incident[v]) dep.adjacency[v].push_back(n + e);
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = g.edge(e);
        dep.adjacency[n + e].push_back(u);
        dep.adjacency[n + e].push_back(v);
        // edges sharing an endpoint; a simple graph never repeats a pair
        for (int other : incident[u])
            if (other != e) dep.adjacency[n + e].push_back(n + other);
        for (int other : incident[v])
            if (other != e) dep.adjacency[n + e].push_back(n + other);
    }
    for (auto& row : dep.adjacency) {
        std::sort(row.begin(), row.end());
        dep.max_degree = std::max(dep.max_degree, static_cast<int>(row.size()));
    }
    return dep;
}

double fmn_bound(int r, int w_size, int delta, double a) {
    if (r < 1) fail(ErrorCode::invalid_argument, "cumulant order must be >= 1");
    if (w_size < 0 || delta < 0) fail(ErrorCode::invalid_argument, "negative bound parameter");
    if (r == 1) return w_size * a;
    return std::pow(2.0, r - 1) * std::pow(static_cast<double>(r), r - 2) * w_size *
           std::pow(static_cast<double>(delta) + 1.0, r - 1) * std::pow(a, r);
}

BigInt fmn_bound_exact(int r, int w_size, int delta) {
    if (r < 1) fail(ErrorCode::invalid_argument, "cumulant order must be >= 1");
    if (w_size < 0 || delta < 0) fail(ErrorCode::invalid_argument, "negative bound parameter");
    if (r == 1) return BigInt(w_size);
    return integer_pow(BigInt(2), static_cast<unsigned>(r - 1)) *
           integer_pow(BigInt(r), static_cast<unsigned>(r - 2)) * BigInt(w_size) *
           integer_pow(BigInt(delta + 1), static_cast<unsigned>(r - 1));
}

LambdaVector all_ones_direction(int k) {
    LambdaVector lambda = LambdaVector::zero(k);
    for (int c = 0; c < k; ++c) lambda.vertex[c] = 1.0;
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            if (a == b) {
                lambda.edge[a][a] = 1.0;
            } else {
                lambda.edge[a][b] = 0.5;
                lambda.edge[b][a] = 0.5;
            }
        }
    return lambda;
}

LambdaVector random_sign_direction(int k, Rng& rng) {
    LambdaVector lambda = LambdaVector::zero(k);
    for (int c = 0; c < k; ++c) lambda.vertex[c] = rng.sign();
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            const double s = rng.sign();
            if (a == b) {
                lambda.edge[a][a] = s;
            } else {
                lambda.edge[a][b] = s * 0.5;
                lambda.edge[b][a] = s * 0.5;
            }
        }
    return lambda;
}

LambdaVector random_effective_lambda(int k, double cap, Rng& rng) {
    if (!(cap > 0.0)) fail(ErrorCode::invalid_argument, "cap must be positive");
    const int nc = k + k * (k + 1) / 2;
    std::vector<double> eff(nc);
    for (double& value : eff) value = rng.symmetric(1.0);
    int at_max = 0;
    for (int c = 1; c < nc; ++c)
        if (std::fabs(eff[c]) > std::fabs(eff[at_max])) at_max = c;
    if (std::fabs(eff[at_max]) < 1e-15) eff[at_max] = 1.0;
    const double scale = cap / std::fabs(eff[at_max]);
    for (double& value : eff) value *= scale;
    // pin the extreme coordinate so the effective norm equals cap exactly
    eff[at_max] = std::copysign(cap, eff[at_max]);

    LambdaVector lambda = LambdaVector::zero(k);
    for (int c = 0; c < k; ++c) lambda.vertex[c] = eff[c];
    int next = k;
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            const double value = eff[next++];
            if (a == b) {
                lambda.edge[a][a] = value;
            } else {
                lambda.edge[a][b] = value / 2.0;
                lambda.edge[b][a] = value / 2.0;
            }
        }
    return lambda;
}

LambdaVector random_raw_lambda(int k, double cap, Rng& rng) {
    if (!(cap > 0.0)) fail(ErrorCode::invalid_argument, "cap must be positive");
    LambdaVector lambda = LambdaVector::zero(k);
    for (int c = 0; c < k; ++c) lambda.vertex[c] = rng.symmetric(cap);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) lambda.edge[i][j] = rng.symmetric(cap);
    return lambda;
}

DirectionCumulants direction_cumulants(const CountVectorDistribution& dist, const SimpleGraph& g,
                                       const LambdaVector& lambda0, int r_max) {
    if (r_max < 1 || r_max > 10)
        fail(ErrorCode::invalid_argument, "cumulant order range must be 1..10");
    if (lambda0.k != dist.k) fail(ErrorCode::invalid_argument, "direction color count mismatch");
    if (g.vertex_count() != dist.n)
        fail(ErrorCode::invalid_argument, "distribution does not match graph");

    const int k = dist.k;
    std::vector<Rational> weight(dist.coord_count());
    for (int c = 0; c < k; ++c) weight[c] = exact_rational(lambda0.vertex[c]);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            const int idx = pair_coord_index(k, a, b);
            weight[idx] = a == b ? exact_rational(lambda0.edge[a][a])
                                 : exact_rational(lambda0.edge[a][b]) +
                                       exact_rational(lambda0.edge[b][a]);
        }

    // Y = <lambda0, v X> takes one exact value per atom
    std::map<Rational, BigInt> y_freq;
    for (const auto& [vec, count] : dist.atoms) {
        Rational y = 0;
        for (std::size_t c = 0; c < vec.size(); ++c)
            if (vec[c] != 0) y += Rational(vec[c]) * weight[c];
        y_freq[y] += count;
    }

    std::vector<Rational> moments(r_max, Rational(0));
    for (const auto& [y, count] : y_freq) {
        Rational power = 1;
        for (int r = 0; r < r_max; ++r) {
            power *= y;
            moments[r] += Rational(count) * power;
        }
    }
    for (auto& moment : moments) moment /= Rational(dist.total);

    DirectionCumulants out;
    out.r_max = r_max;
    out.w_size = dist.n + dist.m;
    out.delta = 2 * g.effective_degree_bound();
    out.kappa = moments_to_cumulants(moments);
    out.bound.reserve(r_max);
    for (int r = 1; r <= r_max; ++r) out.bound.push_back(fmn_bound_exact(r, out.w_size, out.delta));
    out.first_within = abs_ratio(out.kappa[0]) <= Rational(out.bound[0]);
    out.rest_strict = true;
    for (int r = 2; r <= r_max; ++r)
        if (!(abs_ratio(out.kappa[r - 1]) < Rational(out.bound[r - 1]))) out.rest_strict = false;
    return out;
}

DirectionCumulants direction_cumulants(const SimpleGraph& g, int k, const LambdaVector& lambda0,
                                       int r_max, const Budgets& budgets) {
    return direction_cumulants(count_vector_distribution(g, k, budgets), g, lambda0, r_max);
}

std::vector<TreeCheck> spanning_tree_cumulant_checks(const SimpleGraph& g, int k, int max_r,
                                                     const Budgets& budgets) {
    if (k < 2) fail(ErrorCode::invalid_argument, "cross indicators need k >= 2");
    if (max_r < 1 || max_r > 4)
        fail(ErrorCode::invalid_argument, "subset size range must be 1..4");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m > 20) fail(ErrorCode::budget_exceeded, "edge subset enumeration capped at 20 edges");
    if (saturating_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(n)) >
        budgets.max_colorings)
        fail(ErrorCode::budget_exceeded, "coloring budget exceeded: k^n > max_colorings");

    // tally colorings by the bitmask of edges whose endpoints get colors {0,1}
    std::map<std::uint32_t, std::uint64_t> cross_freq;
    std::vector<int> coloring(n, 0);
    bool done = n == 0;
    if (n == 0) cross_freq[0] = 1;
    while (!done) {
        std::uint32_t mask = 0;
        for (int e = 0; e < m; ++e) {
            const int cu = coloring[g.edge(e).first];
            const int cv = coloring[g.edge(e).second];
            if ((cu == 0 && cv == 1) || (cu == 1 && cv == 0)) mask |= std::uint32_t{1} << e;
        }
        ++cross_freq[mask];
        int pos = 0;
        while (pos < n) {
            if (++coloring[pos] < k) break;
            coloring[pos] = 0;
            ++pos;
        }
        done = pos == n;
    }
    const BigInt total = integer_pow(BigInt(k), static_cast<unsigned>(n));

    std::vector<TreeCheck> checks;
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
        const int r = std::popcount(subset);
        if (r > max_r) continue;
        std::vector<int> positions;
        for (int e = 0; e < m; ++e)
            if (subset & (std::uint32_t{1} << e)) positions.push_back(e);

        std::vector<Rational> moments(std::size_t{1} << r, Rational(0));
        for (std::uint32_t part = 1; part < (std::uint32_t{1} << r); ++part) {
            std::uint32_t need = 0;
            for (int p = 0; p < r; ++p)
                if (part & (std::uint32_t{1} << p)) need |= std::uint32_t{1} << positions[p];
            std::uint64_t hits = 0;
            for (const auto& [mask, count] : cross_freq)
                if ((mask & need) == need) hits += count;
            moments[part] = Rational(BigInt(hits), total);
        }

        TreeCheck check;
        check.edge_subset = positions;
        check.r = r;
        check.kappa = joint_cumulant(r, moments);

        std::vector<Edge> dep_edges;
        for (int p = 0; p < r; ++p)
            for (int q = p + 1; q < r; ++q) {
                const Edge& ep = g.edge(positions[p]);
                const Edge& eq = g.edge(positions[q]);
                if (ep.first == eq.first || ep.first == eq.second || ep.second == eq.first ||
                    ep.second == eq.second)
                    dep_edges.emplace_back(p, q);
            }
        SimpleGraph dep(r, dep_edges);
        check.dep_connected = dep.connected();
        check.tree_count = spanning_tree_count(dep);
        if (!check.dep_connected) {
            check.passed = check.kappa == 0;
        } else {
            const BigInt cap =
                integer_pow(BigInt(2), static_cast<unsigned>(r - 1)) * check.tree_count;
            check.passed = abs_ratio(check.kappa) <= Rational(cap);
        }
        checks.push_back(std::move(check));
    }
    return checks;
}

namespace {

void enumerate_alphas(int coord, int nc, int remaining, std::vector<int>& alpha,
                      std::vector<std::vector<int>>& out) {
    if (coord == nc) {
        out.push_back(alpha);
        return;
    }
    for (int value = 0; value <= remaining; ++value) {
        alpha[coord] = value;
        enumerate_alphas(coord + 1, nc, remaining - value, alpha, out);
    }
    alpha[coord] = 0;
}

}  // namespace

TaylorModel taylor_model(const SimpleGraph& g, int k, int order, const Budgets& budgets) {
    if (k < 1) fail(ErrorCode::invalid_argument, "color count must be >= 1");
    if (order < 1 || order > 8)
        fail(ErrorCode::invalid_argument, "expansion order must be 1..8");
    const CountVectorDistribution dist = count_vector_distribution(g, k, budgets);
    const int nc = dist.coord_count();

    BigInt term_count = binomial(static_cast<unsigned>(nc + order), static_cast<unsigned>(order));
    term_count -= 1;  // alpha = 0 excluded
    if (term_count > BigInt(budgets.max_taylor_terms))
        fail(ErrorCode::budget_exceeded,
             "coefficient budget exceeded: " + term_count.str() + " multi-indices > " +
                 std::to_string(budgets.max_taylor_terms));

    std::vector<std::vector<int>> alphas;
    std::vector<int> scratch(nc, 0);
    enumerate_alphas(0, nc, order, scratch, alphas);

    TaylorModel model;
    model.k = k;
    model.order = order;
    model.n = dist.n;
    model.m = dist.m;
    model.degree_bound = g.effective_degree_bound();
    const BigInt v(dist.n);
    for (const auto& alpha : alphas) {
        int weight = 0;
        for (int value : alpha) weight += value;
        if (weight == 0 || weight > order) continue;
        std::vector<int> coords;
        BigInt factorial(1);
        for (int c = 0; c < nc; ++c)
            for (int t = 0; t < alpha[c]; ++t) {
                coords.push_back(c);
                factorial *= t + 1;
            }
        TaylorTerm term;
        term.alpha = alpha;
        term.order = weight;
        term.coefficient = coordinate_cumulant(dist, coords) / Rational(v * factorial);
        term.coefficient_dbl = term.coefficient.convert_to<double>();
        model.terms.push_back(std::move(term));
    }
    std::sort(model.terms.begin(), model.terms.end(), [](const TaylorTerm& a, const TaylorTerm& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.alpha < b.alpha;
    });
    return model;
}

double taylor_eval(const TaylorModel& model, const LambdaVector& lambda, int truncate_order,
                   bool* inside_radius) {
    if (lambda.k != model.k) fail(ErrorCode::invalid_argument, "direction color count mismatch");
    const int k = model.k;
    std::vector<double> eff(static_cast<std::size_t>(k + k * (k + 1) / 2));
    for (int c = 0; c < k; ++c) eff[c] = lambda.vertex[c];
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b)
            eff[pair_coord_index(k, a, b)] = a == b ? lambda.edge[a][a] : lambda.pair_sum(a, b);

    double sum = 0.0;
    for (const TaylorTerm& term : model.terms) {
        if (truncate_order >= 0 && term.order > truncate_order) continue;
        double product = term.coefficient_dbl;
        for (std::size_t c = 0; c < term.alpha.size(); ++c)
            for (int t = 0; t < term.alpha[c]; ++t) product *= eff[c];
        sum += product;
    }
    if (inside_radius != nullptr)
        *inside_radius = lambda.inf_norm() < radius(model.degree_bound);
    return sum;
}

double radius(int degree_bound) {
    if (degree_bound < 1) fail(ErrorCode::invalid_argument, "degree bound must be >= 1");
    return 1.0 / (4.0 * std::numbers::e * degree_bound);
}

double tail_majorant(int degree_bound, int order, double z) {
    if (degree_bound < 1) fail(ErrorCode::invalid_argument, "degree bound must be >= 1");
    if (order < 0) fail(ErrorCode::invalid_argument, "order must be >= 0");
    if (!(z > 0.0)) return 0.0;
    const int d = degree_bound;
    // successive terms shrink at least by this factor
    const double ratio = 2.0 * (2.0 * d + 1.0) * std::numbers::e * z;
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();

    auto term = [&](int l) {
        const double log_term = (l - 2) * std::numbers::ln2 + (l - 2) * std::log(l) +
                                std::log(d + 2.0) + (l - 1) * std::log(2.0 * d + 1.0) +
                                l * std::log(z) - std::lgamma(l + 1.0);
        return std::exp(log_term);
    };
    double sum = 0.0;
    double last = 0.0;
    for (int l = order + 1; l <= order + 80; ++l) {
        last = term(l);
        sum += last;
    }
    return sum + last * ratio / (1.0 - ratio);
}

namespace {

std::vector<std::string> coordinate_names(int k) {
    std::vector<std::string> names;
    for (int c = 0; c < k; ++c) names.push_back("v" + std::to_string(c + 1));
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b)
            names.push_back("e" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    return names;
}

}  // namespace

std::string serialize_taylor_model(const TaylorModel& model) {
    ordered_json doc;
    doc["k"] = model.k;
    doc["order"] = model.order;
    doc["n"] = model.n;
    doc["m"] = model.m;
    doc["degree_bound"] = model.degree_bound;
    doc["radius"] = radius(model.degree_bound);
    doc["coordinates"] = coordinate_names(model.k);
    ordered_json terms = ordered_json::array();
    for (const TaylorTerm& term : model.terms) {
        ordered_json entry;
        entry["alpha"] = term.alpha;
        entry["order"] = term.order;
        entry["coefficient"] = ratio_str(term.coefficient);
        entry["value"] = term.coefficient_dbl;
        terms.push_back(std::move(entry));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

namespace {

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string sanitize_column(std::string name) {
    for (char& c : name)
        if (c == ',') c = '+';
    return name;
}

bool known_family(const std::string& family) {
    return family == "cycle" || family == "path" || family == "torus" ||
           family == "complete" || family == "random_regular";
}

SimpleGraph family_graph(const SequenceSpec& spec, int param) {
    if (spec.family == "cycle") return make_cycle(param);
    if (spec.family == "path") return make_path(param);
    if (spec.family == "torus") return make_torus(3, param);
    if (spec.family == "complete") return make_complete(param);
    if (spec.family == "random_regular")
        return make_random_regular(param, spec.regular_degree,
                                   spec.seed + static_cast<std::uint64_t>(param));
    fail(ErrorCode::invalid_argument, "unknown family '" + spec.family + "'");
}

SequenceCell exact_cell(const Rational& value) {
    SequenceCell cell;
    cell.present = true;
    cell.exact = true;
    cell.numeric = true;
    cell.q = value;
    cell.x = value.convert_to<double>();
    cell.text = ratio_str(value);
    return cell;
}

SequenceCell real_cell(double value) {
    SequenceCell cell;
    cell.present = true;
    cell.numeric = true;
    cell.x = value;
    cell.text = real_str(value);
    return cell;
}

SequenceCell text_cell(std::string text) {
    SequenceCell cell;
    cell.present = true;
    cell.text = std::move(text);
    return cell;
}

SequenceCell absent_cell(std::string note) {
    SequenceCell cell;
    cell.note = std::move(note);
    return cell;
}

struct SimpleTestGraph {
    std::string name;
    SimpleGraph graph;
};

std::vector<SimpleTestGraph> density_test_graphs(int max_edges) {
    std::vector<SimpleTestGraph> graphs;
    graphs.push_back({"K2", make_complete(2)});
    graphs.push_back({"P3", make_path(3)});
    graphs.push_back({"P4", make_path(4)});
    graphs.push_back({"K3", make_complete(3)});
    graphs.push_back({"K1_3", SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}})});
    std::erase_if(graphs,
                  [&](const SimpleTestGraph& t) { return t.graph.edge_count() > max_edges; });
    return graphs;
}

BigInt falling_factorial(int n, int v) {
    BigInt result(1);
    for (int i = 0; i < v; ++i) result *= n - i;
    return result;
}

}  // namespace

SequenceReport sequence_report(const SequenceSpec& spec, const Budgets& budgets) {
    if (!known_family(spec.family))
        fail(ErrorCode::invalid_argument, "unknown family '" + spec.family + "'");
    if (spec.n_min < 1 || spec.n_max < spec.n_min || spec.n_step < 1)
        fail(ErrorCode::invalid_argument, "need 1 <= n_min <= n_max and n_step >= 1");
    if ((spec.n_max - spec.n_min) / spec.n_step + 1 > 512)
        fail(ErrorCode::invalid_argument, "family sweep capped at 512 rows");
    if (spec.k < 1) fail(ErrorCode::invalid_argument, "color count must be >= 1");
    if (spec.max_pattern_length < 1 || spec.max_pattern_length > budgets.max_pattern_length)
        fail(ErrorCode::invalid_argument, "pattern length outside budget");
    for (const LambdaVector& lambda : spec.lambdas)
        if (lambda.k != spec.k)
            fail(ErrorCode::invalid_argument, "lambda color count does not match spec");
    for (int r : spec.ball_radii)
        if (r < 1 || r > 10) fail(ErrorCode::invalid_argument, "ball radius outside 1..10");

    SequenceReport report;
    report.spec = spec;

    struct ProfileColumn {
        int l;
        CanonicalCode code;
    };
    std::vector<ProfileColumn> profile_columns;
    for (int l = 1; l <= spec.max_pattern_length; ++l) {
        const Catalog cat = enumerate_catalog(l, CatalogStrategy::edges_first, budgets);
        for (int ci : cat.connected_indices) {
            const CatalogEntry& entry = cat.all[ci];
            profile_columns.push_back({l, entry.code});
            report.columns.push_back(
                sanitize_column("i_ratio/l" + std::to_string(l) + "/" + entry.name));
        }
    }
    const std::vector<SimpleTestGraph> densities = density_test_graphs(spec.max_pattern_length);
    for (const SimpleTestGraph& t : densities) {
        report.columns.push_back("inj_density/" + t.name);
        report.columns.push_back("ind_density/" + t.name);
    }
    for (std::size_t i = 0; i < spec.lambdas.size(); ++i)
        report.columns.push_back("f/lambda" + std::to_string(i + 1));
    for (int r : spec.ball_radii) {
        report.columns.push_back("balls/r" + std::to_string(r) + "/distinct");
        report.columns.push_back("balls/r" + std::to_string(r) + "/digest");
    }

    for (int param = spec.n_min; param <= spec.n_max; param += spec.n_step) {
        SequenceReport::Row row;
        row.index = param;
        SimpleGraph g;
        try {
            g = family_graph(spec, param);
        } catch (const Error& err) {
            row.skipped = true;
            row.skip_reason = err.what();
            row.cells.assign(report.columns.size(), absent_cell("row skipped"));
            report.rows.push_back(std::move(row));
            continue;
        }
        row.n = g.vertex_count();
        const int n = g.vertex_count();

        // i(F,G)/v(G) per connected pattern, grouped by tuple length
        std::size_t col = 0;
        for (int l = 1; l <= spec.max_pattern_length; ++l) {
            std::vector<PatternCount> profile;
            std::string note;
            try {
                profile = i_profile(g, l, budgets);
            } catch (const Error& err) {
                note = err.what();
            }
            while (col < profile_columns.size() && profile_columns[col].l == l) {
                if (!note.empty()) {
                    row.cells.push_back(absent_cell(note));
                } else {
                    BigInt count(0);
                    for (const PatternCount& pc : profile)
                        if (pc.code == profile_columns[col].code) {
                            count = pc.count;
                            break;
                        }
                    row.cells.push_back(exact_cell(Rational(count, BigInt(n))));
                }
                ++col;
            }
        }

        for (const SimpleTestGraph& t : densities) {
            const int v = t.graph.vertex_count();
            if (n < v) {
                row.cells.push_back(exact_cell(Rational(0)));
                row.cells.push_back(exact_cell(Rational(0)));
                continue;
            }
            try {
                const BigInt denom = falling_factorial(n, v);
                row.cells.push_back(exact_cell(Rational(inj_count(t.graph, g, budgets), denom)));
                row.cells.push_back(exact_cell(Rational(ind_count(t.graph, g, budgets), denom)));
            } catch (const Error& err) {
                row.cells.push_back(absent_cell(err.what()));
                row.cells.push_back(absent_cell(err.what()));
            }
        }

        if (!spec.lambdas.empty()) {
            bool have_dist = false;
            CountVectorDistribution dist;
            std::string note;
            try {
                dist = count_vector_distribution(g, spec.k, budgets);
                have_dist = true;
            } catch (const Error& err) {
                note = err.what();
            }
            for (const LambdaVector& lambda : spec.lambdas) {
                if (have_dist)
                    row.cells.push_back(real_cell(cgf_value(dist, lambda)));
                else
                    row.cells.push_back(absent_cell(note));
            }
        }

        for (int r : spec.ball_radii) {
            try {
                const BallDistribution balls = ball_distribution(g, r);
                row.cells.push_back(exact_cell(Rational(balls.freqs.size())));
                std::string blob;
                for (const auto& [code, freq] : balls.freqs)
                    blob += code.hex() + "=" + ratio_str(freq) + ";";
                row.cells.push_back(text_cell(hex64(fnv1a(blob))));
            } catch (const Error& err) {
                row.cells.push_back(absent_cell(err.what()));
                row.cells.push_back(absent_cell(err.what()));
            }
        }

        report.rows.push_back(std::move(row));
    }

    for (std::size_t c = 0; c < report.columns.size(); ++c) {
        std::vector<std::pair<int, double>> points;  // (n, value)
        for (const auto& row : report.rows) {
            if (row.skipped) continue;
            const SequenceCell& cell = row.cells[c];
            if (cell.present && cell.numeric) points.emplace_back(row.n, cell.x);
        }
        if (points.size() < 2) continue;
        SequenceReport::ColumnDiff diff;
        diff.column = report.columns[c];
        double sum_xy = 0.0;
        double sum_xx = 0.0;
        for (std::size_t i = 1; i < points.size(); ++i) {
            const double delta = points[i].second - points[i - 1].second;
            diff.deltas.push_back(delta);
            const double inv_n = 1.0 / points[i].first;
            sum_xy += inv_n * std::fabs(delta);
            sum_xx += inv_n * inv_n;
        }
        diff.slope_vs_inv_n = sum_xx > 0.0 ? sum_xy / sum_xx : 0.0;
        report.diffs.push_back(std::move(diff));
    }
    return report;
}

std::string sequence_report_csv(const SequenceReport& report) {
    std::string out = "index,n";
    for (const std::string& column : report.columns) out += "," + column;
    out += ",note\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.index) + "," + std::to_string(row.n);
        std::string note = row.skip_reason;
        for (const SequenceCell& cell : row.cells) {
            out += ",";
            if (cell.present) out += cell.text;
            if (!cell.present && note.empty() && cell.note != "row skipped") note = cell.note;
        }
        for (char& c : note)
            if (c == ',') c = ';';
        out += "," + note + "\n";
    }
    return out;
}

std::string sequence_report_json(const SequenceReport& report) {
    ordered_json doc;
    ordered_json spec;
    spec["family"] = report.spec.family;
    spec["n_min"] = report.spec.n_min;
    spec["n_max"] = report.spec.n_max;
    spec["n_step"] = report.spec.n_step;
    spec["k"] = report.spec.k;
    spec["max_pattern_length"] = report.spec.max_pattern_length;
    spec["lambda_count"] = report.spec.lambdas.size();
    spec["ball_radii"] = report.spec.ball_radii;
    if (report.spec.family == "random_regular") {
        spec["regular_degree"] = report.spec.regular_degree;
        spec["seed"] = report.spec.seed;
    }
    doc["spec"] = std::move(spec);
    doc["columns"] = report.columns;

    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json entry;
        entry["index"] = row.index;
        entry["n"] = row.n;
        entry["skipped"] = row.skipped;
        if (row.skipped) entry["skip_reason"] = row.skip_reason;
        ordered_json cells;
        ordered_json notes;
        for (std::size_t c = 0; c < row.cells.size(); ++c) {
            const SequenceCell& cell = row.cells[c];
            const std::string& name = report.columns[c];
            if (!cell.present) {
                cells[name] = nullptr;
                if (!cell.note.empty() && cell.note != "row skipped") notes[name] = cell.note;
            } else if (cell.exact) {
                cells[name] = cell.text;
            } else if (cell.numeric) {
                cells[name] = cell.x;
            } else {
                cells[name] = cell.text;
            }
        }
        entry["cells"] = std::move(cells);
        if (!notes.empty()) entry["notes"] = std::move(notes);
        rows.push_back(std::move(entry));
    }
    doc["rows"] = std::move(rows);

    ordered_json diffs = ordered_json::array();
    for (const auto& diff : report.diffs) {
        ordered_json entry;
        entry["column"] = diff.column;
        entry["deltas"] = diff.deltas;
        entry["slope_vs_inv_n"] = diff.slope_vs_inv_n;
        diffs.push_back(std::move(entry));
    }
    doc["diffs"] = std::move(diffs);
    return doc.dump();
}

}  // namespace graphlim
