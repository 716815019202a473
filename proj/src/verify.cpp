#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "catalog.hpp"
#include "counting.hpp"
#include "cumulant.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "multigraph.hpp"
#include "numbers.hpp"
#include "rng.hpp"
#include "target.hpp"

namespace graphlim {

namespace {

std::string real3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

using NamedGraph = std::pair<std::string, SimpleGraph>;

std::vector<NamedGraph> bridge_graphs(VerifyTier tier) {
    if (tier == VerifyTier::smoke)
        return {{"C4", make_cycle(4)}, {"K4", make_complete(4)}};
    return {{"C4", make_cycle(4)},
            {"C6", make_cycle(6)},
            {"P5", make_path(5)},
            {"K4", make_complete(4)},
            {"torus3x3", make_torus(3, 3)}};
}

}  // namespace

const char* tier_name(VerifyTier tier) { return tier == VerifyTier::smoke ? "smoke" : "full"; }

CheckResult check_bridge_identity(VerifyTier tier) {
    constexpr double kTolerance = 1e-12;
    constexpr double kLambdaCap = 0.25;
    const int trials = tier == VerifyTier::smoke ? 10 : 100;
    const std::vector<int> ks = tier == VerifyTier::smoke ? std::vector<int>{2}
                                                          : std::vector<int>{2, 3};
    Rng rng(9112001);
    double worst = 0.0;
    int comparisons = 0;
    for (const auto& [name, g] : bridge_graphs(tier)) {
        for (int k : ks) {
            const CountVectorDistribution dist = count_vector_distribution(g, k);
            for (int trial = 0; trial < trials; ++trial) {
                const LambdaVector lambda = random_raw_lambda(k, kLambdaCap, rng);
                const double f = cgf_value(dist, lambda);
                const double via_density =
                    log_t_density(g, target_from_lambda(lambda)) / g.vertex_count();
                worst = std::max(worst, std::fabs(f - via_density));
                ++comparisons;
            }
        }
    }
    return {"bridge_identity", worst <= kTolerance,
            std::to_string(comparisons) + " comparisons, max |f - log t / v| = " + real3(worst) +
                ", tolerance 1e-12"};
}

CheckResult check_cumulant_decomposition(VerifyTier tier) {
    const std::vector<int> ls = tier == VerifyTier::smoke ? std::vector<int>{1, 2}
                                                          : std::vector<int>{1, 2, 3};
    const std::vector<int> ks = tier == VerifyTier::smoke ? std::vector<int>{2, 3}
                                                          : std::vector<int>{2, 3, 4};
    const std::vector<NamedGraph> graphs =
        tier == VerifyTier::smoke
            ? std::vector<NamedGraph>{{"C4", make_cycle(4)}, {"K4", make_complete(4)}}
            : std::vector<NamedGraph>{{"C4", make_cycle(4)},
                                      {"C5", make_cycle(5)},
                                      {"P5", make_path(5)},
                                      {"K4", make_complete(4)}};
    int identities = 0;
    std::string failure;
    for (int l : ls) {
        const Catalog catalog = enumerate_catalog(l);
        for (int k : ks) {
            for (const CatalogEntry& entry : catalog.all) {
                if (entry.pattern.vertex_count() > k) continue;
                const auto pairs = embed_pattern(entry.pattern, k).pairs();
                for (const auto& [name, g] : graphs) {
                    const Rational direct = kappa_gj(g, pairs, k, KappaRoute::direct);
                    const Rational decomposed =
                        kappa_gj(g, pairs, k, KappaRoute::decomposition);
                    ++identities;
                    if (direct != decomposed && failure.empty())
                        failure = "first mismatch at l=" + std::to_string(l) +
                                  " k=" + std::to_string(k) + " J=" + entry.name + " G=" + name;
                }
            }
        }
    }
    // exhaustive color-pair sequences at small l, beyond the embedded catalog
    for (int l = 1; l <= 2; ++l) {
        const int k = 2;
        std::vector<std::pair<int, int>> pairs(l, {0, 0});
        std::vector<int> odo(2 * l, 0);
        bool done = false;
        while (!done) {
            for (int p = 0; p < l; ++p) pairs[p] = {odo[2 * p], odo[2 * p + 1]};
            for (const auto& [name, g] : graphs) {
                const Rational direct = kappa_gj(g, pairs, k, KappaRoute::direct);
                const Rational decomposed = kappa_gj(g, pairs, k, KappaRoute::decomposition);
                ++identities;
                if (direct != decomposed && failure.empty())
                    failure = "first mismatch on raw pair sequence, G=" + name;
            }
            int pos = 0;
            while (pos < 2 * l) {
                if (++odo[pos] < k) break;
                odo[pos] = 0;
                ++pos;
            }
            done = pos == 2 * l;
        }
    }
    return {"cumulant_decomposition", failure.empty(),
            failure.empty() ? std::to_string(identities) + " identities, exact equality"
                            : failure};
}

CheckResult check_matrix_suite(VerifyTier tier) {
    const std::vector<int> ls = tier == VerifyTier::smoke ? std::vector<int>{1, 2}
                                                          : std::vector<int>{1, 2, 3};
    // frozen catalog sizes: all patterns / connected patterns per edge count
    const int expected_all[4] = {0, 1, 3, 16};
    const int expected_connected[4] = {0, 1, 2, 9};
    const std::vector<NamedGraph> samples =
        tier == VerifyTier::smoke
            ? std::vector<NamedGraph>{{"C4", make_cycle(4)}, {"K4", make_complete(4)}}
            : std::vector<NamedGraph>{{"C4", make_cycle(4)},
                                      {"C5", make_cycle(5)},
                                      {"P5", make_path(5)},
                                      {"K4", make_complete(4)}};
    bool passed = true;
    std::string detail;
    for (int l : ls) {
        const CoefficientMatrices mats = build_matrices(l, 2 * l);
        if (mats.catalog.size() != expected_all[l] ||
            mats.catalog.connected_size() != expected_connected[l])
            passed = false;
        const RankReport report = verify_rank(mats, samples);
        if (!report.all_passed()) passed = false;
        if (!detail.empty()) detail += "; ";
        detail += "l=" + std::to_string(l) + ": rank K = " + std::to_string(report.rank_k) +
                  "/" + std::to_string(mats.catalog.connected_size());
    }
    return {"matrix_suite", passed, detail + "; triangularity, P identity, K = E*P = direct"};
}

CheckResult check_derivative_consistency(VerifyTier tier) {
    constexpr double kStep = 1e-4;
    constexpr double kRelTolerance = 1e-6;
    const int k = 2;
    const std::vector<NamedGraph> graphs =
        tier == VerifyTier::smoke
            ? std::vector<NamedGraph>{{"C4", make_cycle(4)}}
            : std::vector<NamedGraph>{{"C4", make_cycle(4)}, {"C6", make_cycle(6)}};
    double worst = 0.0;
    int comparisons = 0;
    for (const auto& [name, g] : graphs) {
        const CountVectorDistribution dist = count_vector_distribution(g, k);
        const double v = g.vertex_count();
        auto f_at = [&](double a, int i1, int j1, double b, int i2, int j2) {
            LambdaVector lambda = LambdaVector::zero(k);
            lambda.edge[i1][j1] += a;
            lambda.edge[i2][j2] += b;
            return cgf_value(dist, lambda);
        };
        std::vector<std::pair<int, int>> raw;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) raw.emplace_back(i, j);
        for (const auto& [i, j] : raw) {
            const double fd =
                (f_at(kStep, i, j, 0, 0, 0) - f_at(-kStep, i, j, 0, 0, 0)) / (2 * kStep);
            const double exact =
                (coordinate_cumulant(dist, {pair_coord_index(k, i, j)}) / v).convert_to<double>();
            worst = std::max(worst, std::fabs(fd - exact) / std::max(std::fabs(exact), 1e-12));
            ++comparisons;
        }
        for (std::size_t a = 0; a < raw.size(); ++a)
            for (std::size_t b = a; b < raw.size(); ++b) {
                const auto [i1, j1] = raw[a];
                const auto [i2, j2] = raw[b];
                double fd;
                if (a == b) {
                    // f(0) = 0 exactly, so the centered second difference collapses
                    fd = (f_at(kStep, i1, j1, 0, 0, 0) + f_at(-kStep, i1, j1, 0, 0, 0)) /
                         (kStep * kStep);
                } else {
                    fd = (f_at(kStep, i1, j1, kStep, i2, j2) -
                          f_at(kStep, i1, j1, -kStep, i2, j2) -
                          f_at(-kStep, i1, j1, kStep, i2, j2) +
                          f_at(-kStep, i1, j1, -kStep, i2, j2)) /
                         (4 * kStep * kStep);
                }
                const double exact =
                    (coordinate_cumulant(
                         dist, {pair_coord_index(k, i1, j1), pair_coord_index(k, i2, j2)}) /
                     v)
                        .convert_to<double>();
                worst = std::max(worst, std::fabs(fd - exact) / std::max(std::fabs(exact), 1e-12));
                ++comparisons;
            }
    }
    return {"derivative_consistency", worst <= kRelTolerance,
            std::to_string(comparisons) + " derivatives, max relative error = " + real3(worst) +
                ", tolerance 1e-06"};
}

CheckResult check_dependency_bound(VerifyTier tier) {
    const int k = 2;
    const int r_max = tier == VerifyTier::smoke ? 4 : 6;
    const int sign_trials = tier == VerifyTier::smoke ? 5 : 20;
    const std::vector<NamedGraph> graphs =
        tier == VerifyTier::smoke
            ? std::vector<NamedGraph>{{"C4", make_cycle(4)},
                                      {"P4", make_path(4)},
                                      {"K4", make_complete(4)}}
            : std::vector<NamedGraph>{{"C4", make_cycle(4)},   {"C5", make_cycle(5)},
                                      {"C6", make_cycle(6)},   {"C8", make_cycle(8)},
                                      {"P4", make_path(4)},    {"P6", make_path(6)},
                                      {"P8", make_path(8)},    {"K4", make_complete(4)}};
    Rng rng(4415621);
    bool passed = true;
    int directions = 0;
    std::string failure;
    for (const auto& [name, g] : graphs) {
        const CountVectorDistribution dist = count_vector_distribution(g, k);
        std::vector<LambdaVector> dirs;
        dirs.push_back(all_ones_direction(k));
        for (int t = 0; t < sign_trials; ++t) dirs.push_back(random_sign_direction(k, rng));
        for (const LambdaVector& dir : dirs) {
            const DirectionCumulants dc = direction_cumulants(dist, g, dir, r_max);
            ++directions;
            if (!(dc.first_within && dc.rest_strict)) {
                passed = false;
                if (failure.empty()) failure = "bound violated on " + name;
            }
        }
    }
    return {"dependency_bound", passed,
            failure.empty() ? std::to_string(directions) + " directions, r <= " +
                                  std::to_string(r_max) +
                                  "; |kappa_1| <= (v+m), higher orders strictly below the bound"
                            : failure};
}

CheckResult check_tree_lemma(VerifyTier tier) {
    const std::vector<std::pair<NamedGraph, int>> cases =
        tier == VerifyTier::smoke
            ? std::vector<std::pair<NamedGraph, int>>{{{"K4", make_complete(4)}, 3}}
            : std::vector<std::pair<NamedGraph, int>>{{{"K4", make_complete(4)}, 4},
                                                      {{"C5", make_cycle(5)}, 4}};
    bool passed = true;
    int subsets = 0;
    int disconnected = 0;
    for (const auto& [named, max_r] : cases) {
        for (const TreeCheck& check : spanning_tree_cumulant_checks(named.second, 2, max_r)) {
            ++subsets;
            if (!check.dep_connected) ++disconnected;
            if (!check.passed) passed = false;
        }
    }
    return {"tree_lemma", passed,
            std::to_string(subsets) + " edge subsets (" + std::to_string(disconnected) +
                " with disconnected dependency graph), exact zero / tree-count bound"};
}

CheckResult check_taylor_convergence(VerifyTier tier) {
    constexpr double kCap = 0.03;
    const std::vector<int> orders = tier == VerifyTier::smoke ? std::vector<int>{2, 4}
                                                              : std::vector<int>{2, 4, 6};
    const int trials = tier == VerifyTier::smoke ? 5 : 20;
    const int k = 2;
    const SimpleGraph g = make_cycle(6);
    const CountVectorDistribution dist = count_vector_distribution(g, k);
    const TaylorModel model = taylor_model(g, k, orders.back());
    Rng rng(7083122);
    bool passed = true;
    double worst_err = 0.0;
    std::string failure;
    for (int trial = 0; trial < trials; ++trial) {
        const LambdaVector lambda = random_effective_lambda(k, kCap, rng);
        const double f = cgf_value(dist, lambda);
        const double z = lambda.effective_inf_norm();
        double previous = std::numeric_limits<double>::infinity();
        for (int order : orders) {
            bool inside = false;
            const double approx = taylor_eval(model, lambda, order, &inside);
            const double err = std::fabs(approx - f);
            worst_err = std::max(worst_err, err);
            const double majorant = tail_majorant(model.degree_bound, order, z);
            if (!inside || !(err < previous) || !(majorant >= err)) {
                passed = false;
                if (failure.empty())
                    failure = "order " + std::to_string(order) + ": err = " + real3(err) +
                              ", previous = " + real3(previous) +
                              ", majorant = " + real3(majorant) +
                              (inside ? "" : ", lambda outside radius");
            }
            previous = err;
        }
    }
    return {"taylor_convergence", passed,
            failure.empty()
                ? std::to_string(trials) + " directions at |lambda|_eff = 0.03; errors "
                  "strictly decreasing over orders, each below the tail majorant; max "
                  "truncation error = " + real3(worst_err)
                : failure};
}

CheckResult check_cycle_constancy(VerifyTier tier) {
    const int n_min = 10;
    const int n_max = tier == VerifyTier::smoke ? 20 : 40;
    const int n_step = tier == VerifyTier::smoke ? 2 : 1;
    const int l_max = tier == VerifyTier::smoke ? 2 : 3;
    const int r_max = tier == VerifyTier::smoke ? 2 : 3;
    bool passed = true;
    std::string failure;

    using Profile = std::vector<std::pair<CanonicalCode, Rational>>;
    std::vector<Profile> reference_profiles(l_max + 1);
    std::vector<BallDistribution> reference_balls(r_max + 1);
    int rows = 0;
    for (int n = n_min; n <= n_max; n += n_step) {
        const SimpleGraph g = make_cycle(n);
        ++rows;
        for (int l = 1; l <= l_max; ++l) {
            // Disconnected patterns scale like n^(#components); only connected
            // pattern counts are linear in n on large cycles.
            Profile ratios;
            for (const PatternCount& entry : i_profile(g, l))
                if (entry.rep.connected())
                    ratios.emplace_back(entry.code, Rational(entry.count, BigInt(n)));
            if (n == n_min) {
                reference_profiles[l] = ratios;
            } else if (ratios != reference_profiles[l]) {
                passed = false;
                if (failure.empty())
                    failure = "i(F,C_n)/n changed between n=10 and n=" + std::to_string(n) +
                              " at l=" + std::to_string(l);
            }
        }
        for (int r = 1; r <= r_max; ++r) {
            const BallDistribution balls = ball_distribution(g, r);
            if (n == n_min) {
                reference_balls[r] = balls;
            } else if (balls.freqs != reference_balls[r].freqs) {
                passed = false;
                if (failure.empty())
                    failure = "ball distribution changed between n=10 and n=" +
                              std::to_string(n) + " at r=" + std::to_string(r);
            }
        }
    }
    return {"cycle_constancy", passed,
            failure.empty() ? std::to_string(rows) + " cycle sizes, connected profiles for l <= " +
                                  std::to_string(l_max) + " and balls for r <= " +
                                  std::to_string(r_max) + " exactly constant"
                            : failure};
}

namespace {

WeightedTarget indicator_target(const SimpleGraph& h) {
    const int n = h.vertex_count();
    std::vector<Rational> vertex(n, Rational(1));
    std::vector<std::vector<Rational>> edge(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [u, v] : h.edges()) {
        edge[u][v] = 1;
        edge[v][u] = 1;
    }
    return WeightedTarget(std::move(vertex), std::move(edge));
}

}  // namespace

CheckResult check_counting_identities(VerifyTier tier) {
    std::vector<NamedGraph> graphs = {{"K2", make_complete(2)}, {"P3", make_path(3)},
                                      {"P4", make_path(4)},     {"K3", make_complete(3)},
                                      {"C4", make_cycle(4)},    {"C5", make_cycle(5)}};
    if (tier == VerifyTier::full) {
        graphs.push_back({"C6", make_cycle(6)});
        graphs.push_back({"P6", make_path(6)});
        graphs.push_back({"K4", make_complete(4)});
        graphs.push_back({"K1_3", SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}})});
    }
    const SimpleGraph k2 = make_complete(2);
    const CanonicalCode two_path_code =
        canonical_form(EdgeLabeledMultigraph(3, {{0, 1}, {0, 2}}));
    const CanonicalCode parallel_code =
        canonical_form(EdgeLabeledMultigraph(2, {{0, 1}, {0, 1}}));
    const CanonicalCode triangle_code =
        canonical_form(EdgeLabeledMultigraph(3, {{0, 1}, {0, 2}, {1, 2}}));

    bool passed = true;
    int identities = 0;
    std::string failure;
    auto expect = [&](bool ok, const std::string& what) {
        ++identities;
        if (!ok) {
            passed = false;
            if (failure.empty()) failure = what;
        }
    };

    for (const auto& [name, g] : graphs) {
        const BigInt m = g.edge_count();
        expect(inj_count(k2, g) == 2 * m, "inj(K2," + name + ") != 2|E|");
        expect(hom_count(k2, g) == 2 * m, "hom(K2," + name + ") != 2|E|");

        BigInt single(0), two_path(0), parallel(0), triangle(0);
        for (const PatternCount& entry : i_profile(g, 1)) single = entry.count;
        for (const PatternCount& entry : i_profile(g, 2)) {
            if (entry.code == two_path_code) two_path = entry.count;
            if (entry.code == parallel_code) parallel = entry.count;
        }
        for (const PatternCount& entry : i_profile(g, 3))
            if (entry.code == triangle_code) triangle = entry.count;
        expect(single == m, "i(single edge," + name + ") != |E|");
        expect(2 * single == inj_count(k2, g), "i(single edge) != inj(K2)/2 on " + name);
        expect(parallel == m, "i(parallel pair," + name + ") != |E|");
        expect(two_path == inj_count(make_path(3), g),
               "i(2-path," + name + ") != inj(P3," + name + ")");
        expect(triangle == inj_count(make_complete(3), g),
               "i(triangle," + name + ") != inj(K3," + name + ")");
    }

    for (const auto& [fname, f] : graphs)
        for (const auto& [gname, g] : graphs) {
            const BigInt h = hom_count(f, g);
            const BigInt i = inj_count(f, g);
            const BigInt d = ind_count(f, g);
            expect(d <= i && i <= h, "ind <= inj <= hom fails for (" + fname + "," + gname + ")");
        }

    const std::vector<NamedGraph> weighted_sources = {{"K2", make_complete(2)},
                                                      {"P3", make_path(3)},
                                                      {"C4", make_cycle(4)},
                                                      {"K3", make_complete(3)}};
    const std::vector<NamedGraph> weighted_targets = {{"C4", make_cycle(4)},
                                                      {"K3", make_complete(3)},
                                                      {"P4", make_path(4)},
                                                      {"K4", make_complete(4)}};
    for (const auto& [gname, g] : weighted_sources)
        for (const auto& [hname, h] : weighted_targets)
            expect(weighted_hom_exact(g, indicator_target(h)) == Rational(hom_count(g, h)),
                   "0/1-weighted hom != hom for (" + gname + "," + hname + ")");

    return {"counting_identities", passed,
            failure.empty() ? std::to_string(identities) + " identities, exact" : failure};
}

namespace {

// Timings go to stderr only: the serialized report must be byte-identical
// across runs.
CheckResult timed(CheckResult (*check)(VerifyTier), VerifyTier tier) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult result = check(tier);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::fprintf(stderr, "# %s: %lld ms [%s]\n", result.id.c_str(),
                 static_cast<long long>(elapsed), result.passed ? "pass" : "FAIL");
    return result;
}

VerifyReport run_core(VerifyTier tier) {
    VerifyReport report;
    report.tier = tier;
    report.checks.push_back(timed(check_bridge_identity, tier));
    report.checks.push_back(timed(check_cumulant_decomposition, tier));
    report.checks.push_back(timed(check_matrix_suite, tier));
    report.checks.push_back(timed(check_derivative_consistency, tier));
    report.checks.push_back(timed(check_dependency_bound, tier));
    report.checks.push_back(timed(check_tree_lemma, tier));
    report.checks.push_back(timed(check_taylor_convergence, tier));
    report.checks.push_back(timed(check_cycle_constancy, tier));
    report.checks.push_back(timed(check_counting_identities, tier));
    return report;
}

}  // namespace

CheckResult check_determinism(VerifyTier) {
    const std::string first = serialize_verify_report(run_core(VerifyTier::smoke));
    const std::string second = serialize_verify_report(run_core(VerifyTier::smoke));
    const bool same = first == second;
    return {"determinism", same,
            same ? "two smoke runs serialized to " + std::to_string(first.size()) +
                       " identical bytes"
                 : "smoke runs differ"};
}

bool VerifyReport::all_passed() const {
    for (const CheckResult& check : checks)
        if (!check.passed) return false;
    return true;
}

VerifyReport verify_all(VerifyTier tier, const std::string& inject_failure) {
    VerifyReport report = run_core(tier);
    report.checks.push_back(check_determinism(tier));
    if (!inject_failure.empty()) {
        bool found = false;
        for (CheckResult& check : report.checks)
            if (check.id == inject_failure) {
                check.passed = false;
                check.detail = "failure injected for pipeline testing";
                found = true;
            }
        if (!found)
            fail(ErrorCode::invalid_argument,
                 "no check named '" + inject_failure + "' to inject a failure into");
    }
    return report;
}

std::string serialize_verify_report(const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["tier"] = tier_name(report.tier);
    doc["all_passed"] = report.all_passed();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckResult& check : report.checks) {
        nlohmann::ordered_json entry;
        entry["id"] = check.id;
        entry["passed"] = check.passed;
        entry["detail"] = check.detail;
        checks.push_back(std::move(entry));
    }
    doc["checks"] = std::move(checks);
    return doc.dump();
}

}  // namespace graphlim
