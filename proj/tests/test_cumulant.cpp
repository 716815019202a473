#include <cmath>
#include <vector>

#include "cumulant.hpp"
#include "doctest.h"
#include "error.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "partitions.hpp"
#include "rng.hpp"
#include "target.hpp"

using namespace graphlim;
namespace oracle = graphlim::testing;

TEST_CASE("set partition enumeration") {
    for (int l = 1; l <= 5; ++l)
        CHECK(BigInt(enumerate_partitions(l).size()) == oracle::bell_numbers()[l]);

    const auto parts = enumerate_partitions(3);
    REQUIRE(parts.size() == 5);
    // restricted-growth order starts with the one-block partition
    CHECK(parts[0].blocks == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(parts.back().blocks == std::vector<std::vector<int>>{{0}, {1}, {2}});
    for (const SetPartition& p : parts) {
        int covered = 0;
        for (int b = 0; b < p.block_count(); ++b) {
            CHECK(std::is_sorted(p.blocks[b].begin(), p.blocks[b].end()));
            covered += static_cast<int>(p.blocks[b].size());
            if (b > 0) CHECK(p.blocks[b - 1][0] < p.blocks[b][0]);  // blocks by least element
        }
        CHECK(covered == 3);
    }
    // block_mask is the indicator bitmask
    CHECK(parts[0].block_mask(0) == 0b111u);
    CHECK(parts.back().block_mask(2) == 0b100u);

    CHECK_THROWS_AS(enumerate_partitions(9), Error);
    CHECK_THROWS_AS(enumerate_partitions(0), Error);
}

TEST_CASE("partition weights") {
    CHECK(partition_weight(1) == 1);
    CHECK(partition_weight(2) == -1);
    CHECK(partition_weight(3) == 2);
    CHECK(partition_weight(4) == -6);
    CHECK(partition_weight(5) == 24);
}

TEST_CASE("joint cumulants of identical Bernoulli variables") {
    // Z_1 = ... = Z_l ~ Bernoulli(1/4): every mixed moment is 1/4
    auto bernoulli_moments = [](int l) {
        std::vector<Rational> moments(std::size_t{1} << l, Rational(1, 4));
        return moments;
    };
    CHECK(joint_cumulant(1, bernoulli_moments(1)) == Rational(1, 4));
    CHECK(joint_cumulant(2, bernoulli_moments(2)) == Rational(3, 16));
    CHECK(joint_cumulant(3, bernoulli_moments(3)) == Rational(3, 32));
    CHECK(joint_cumulant(4, bernoulli_moments(4)) == Rational(-3, 128));

    // univariate recursion agrees with the partition formula
    const std::vector<Rational> raw(6, Rational(1, 4));  // m_r = 1/4 for all r
    const auto cumulants = moments_to_cumulants(raw);
    REQUIRE(cumulants.size() == 6);
    CHECK(cumulants[0] == Rational(1, 4));
    CHECK(cumulants[1] == Rational(3, 16));
    CHECK(cumulants[2] == Rational(3, 32));
    CHECK(cumulants[3] == Rational(-3, 128));
    for (int r = 1; r <= 6; ++r) {
        std::vector<Rational> moments(std::size_t{1} << r, Rational(1, 4));
        CHECK(joint_cumulant(r, moments) == cumulants[r - 1]);
    }
}

TEST_CASE("cumulants of a constant variable vanish beyond the mean") {
    std::vector<Rational> raw;
    Rational power = 1;
    for (int r = 1; r <= 5; ++r) {
        power *= 3;
        raw.push_back(power);  // moments of the constant 3
    }
    const auto cumulants = moments_to_cumulants(raw);
    CHECK(cumulants[0] == 3);
    for (std::size_t i = 1; i < cumulants.size(); ++i) CHECK(cumulants[i] == 0);

    // centered two-point variable: kappa_2 is the variance
    // Z in {-1, 1} uniformly: m_1 = 0, m_2 = 1, m_3 = 0, m_4 = 1
    const auto pm = moments_to_cumulants({0, 1, 0, 1});
    CHECK(pm[0] == 0);
    CHECK(pm[1] == 1);
    CHECK(pm[2] == 0);
    CHECK(pm[3] == -2);  // kurtosis kappa_4 = m_4 - 3 m_2^2

    CHECK_THROWS_AS(moments_to_cumulants(std::vector<Rational>(13, Rational(1))), Error);
    CHECK(moments_to_cumulants({}).empty());
}

TEST_CASE("color statistics of one coloring") {
    const SimpleGraph c4 = make_cycle(4);
    const ColorStatistics stats = color_statistics(c4, {0, 1, 0, 1}, 2);
    CHECK(stats.v == 4);
    CHECK(stats.vertex_share[0] == Rational(1, 2));
    CHECK(stats.vertex_share[1] == Rational(1, 2));
    CHECK(stats.edge_share[0][1] == 1);  // all four edges cross
    CHECK(stats.edge_share[1][0] == 1);
    CHECK(stats.edge_share[0][0] == 0);
    CHECK(stats.edge_share[1][1] == 0);

    const ColorStatistics mono = color_statistics(c4, {0, 0, 0, 0}, 2);
    CHECK(mono.vertex_share[0] == 1);
    CHECK(mono.edge_share[0][0] == 1);

    // shares always total 1 and m/v
    Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> coloring(4);
        for (int& c : coloring) c = static_cast<int>(rng.below(3));
        const ColorStatistics s = color_statistics(c4, coloring, 3);
        Rational vertex_total = 0, edge_total = 0;
        for (int i = 0; i < 3; ++i) {
            vertex_total += s.vertex_share[i];
            for (int j = i; j < 3; ++j) edge_total += s.edge_share[i][j];
        }
        CHECK(vertex_total == 1);
        CHECK(edge_total == Rational(c4.edge_count(), c4.vertex_count()));
    }

    CHECK_THROWS_AS(color_statistics(c4, {0, 1, 0}, 2), Error);     // size mismatch
    CHECK_THROWS_AS(color_statistics(c4, {0, 1, 0, 2}, 2), Error);  // color out of range
}

TEST_CASE("coordinate indexing is a bijection") {
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> seen;
        for (int c = 0; c < k; ++c) seen.push_back(vertex_coord_index(k, c));
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) {
                const int idx = pair_coord_index(k, i, j);
                CHECK(idx == pair_coord_index(k, j, i));  // symmetric
                seen.push_back(idx);
            }
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == static_cast<int>(i));
        CHECK(static_cast<int>(seen.size()) == k + k * (k + 1) / 2);
    }
    CHECK(pair_coord_index(2, 0, 0) == 2);
    CHECK(pair_coord_index(2, 0, 1) == 3);
    CHECK(pair_coord_index(2, 1, 1) == 4);
    CHECK_THROWS_AS(vertex_coord_index(2, 2), Error);
    CHECK_THROWS_AS(pair_coord_index(2, 0, -1), Error);
}

TEST_CASE("count vector distribution matches brute enumeration") {
    struct Case {
        SimpleGraph g;
        int k;
    };
    const std::vector<Case> cases = {{make_path(4), 2},
                                     {make_cycle(4), 2},
                                     {make_complete(3), 3},
                                     {make_path(3), 3},
                                     {SimpleGraph(3, {}), 2}};
    for (const auto& [g, k] : cases) {
        const CountVectorDistribution dist = count_vector_distribution(g, k);
        const auto brute = oracle::count_vectors_brute(g, k);
        REQUIRE(dist.atoms.size() == brute.size());
        BigInt total = 0;
        auto it = brute.begin();
        for (const auto& [vec, count] : dist.atoms) {
            CHECK(vec == it->first);  // same sorted order
            CHECK(count == it->second);
            total += count;
            ++it;
        }
        CHECK(total == dist.total);
        CHECK(dist.total == integer_pow(BigInt(k), static_cast<unsigned>(g.vertex_count())));
        CHECK(dist.coord_count() == k + k * (k + 1) / 2);
    }
}

TEST_CASE("cgf closed forms") {
    const SimpleGraph k2 = make_complete(2);
    // only lambda_edge[0][0] = a is nonzero: f = (1/2) log((e^a + 3)/4)
    for (double a : {1.0, -0.7, 0.3}) {
        LambdaVector lambda = LambdaVector::zero(2);
        lambda.edge[0][0] = a;
        CHECK(cgf_value(k2, 2, lambda) ==
              doctest::Approx(0.5 * std::log((std::exp(a) + 3.0) / 4.0)).epsilon(1e-14));
    }

    // vertex-only tilts factor over vertices: f = log(mean of e^{lambda_c}),
    // independent of the graph
    LambdaVector vertex_only = LambdaVector::zero(3);
    vertex_only.vertex = {0.4, -0.2, 0.1};
    const double expected =
        std::log((std::exp(0.4) + std::exp(-0.2) + std::exp(0.1)) / 3.0);
    CHECK(cgf_value(make_cycle(5), 3, vertex_only) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(cgf_value(make_path(4), 3, vertex_only) == doctest::Approx(expected).epsilon(1e-14));

    // zero tilt gives zero
    CHECK(cgf_value(make_cycle(6), 2, LambdaVector::zero(2)) == doctest::Approx(0.0));

    // the distribution overload agrees with the direct one
    const CountVectorDistribution dist = count_vector_distribution(make_path(4), 3);
    CHECK(cgf_value(dist, vertex_only) == doctest::Approx(cgf_value(make_path(4), 3, vertex_only)));

    CHECK_THROWS_AS(cgf_value(dist, LambdaVector::zero(2)), Error);  // k mismatch
}

TEST_CASE("cgf matches the brute average") {
    Rng rng(60301);
    for (int trial = 0; trial < 8; ++trial) {
        LambdaVector lambda = LambdaVector::zero(3);
        for (int c = 0; c < 3; ++c) lambda.vertex[c] = rng.symmetric(0.8);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) lambda.edge[i][j] = rng.symmetric(0.8);
        for (const SimpleGraph& g : {make_path(4), make_cycle(4), make_complete(3)})
            CHECK(cgf_value(g, 3, lambda) ==
                  doctest::Approx(oracle::cgf_brute(g, 3, lambda)).epsilon(1e-12));
    }
}

TEST_CASE("color pattern pairs") {
    const EdgeLabeledMultigraph two_path(3, {{0, 1}, {0, 2}});
    const ColorPattern colored = make_color_pattern(two_path, {0, 1, 0}, 2);
    const auto pairs = colored.pairs();
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::pair<int, int>{0, 1});  // colors of vertices 0,1
    CHECK(pairs[1] == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(make_color_pattern(two_path, {0, 1}, 2), Error);
    CHECK_THROWS_AS(make_color_pattern(two_path, {0, 1, 2}, 2), Error);
}

TEST_CASE("edge color probabilities") {
    const EdgeLabeledMultigraph single(2, {{0, 1}});
    CHECK(x_value(single, {{0, 1}}, 2) == Rational(1, 2));
    CHECK(x_value(single, {{0, 0}}, 2) == Rational(1, 4));
    CHECK(x_value(single, {{0, 1}}, 3) == Rational(2, 9));

    const EdgeLabeledMultigraph parallel(2, {{0, 1}, {0, 1}});
    CHECK(x_value(parallel, {{0, 1}, {0, 1}}, 2) == Rational(1, 2));
    CHECK(x_value(parallel, {{0, 1}, {0, 0}}, 2) == 0);  // same edge, conflicting demands

    const EdgeLabeledMultigraph two_path(3, {{0, 1}, {0, 2}});
    CHECK(x_value(two_path, {{0, 1}, {0, 1}}, 2) == Rational(1, 4));
    CHECK(x_value(two_path, {{0, 0}, {1, 1}}, 2) == 0);  // center cannot be both colors

    // brute cross-check: count colorings hitting the demanded pair multisets
    Rng rng(417);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const int l = 1 + static_cast<int>(rng.below(3));
        const int k = 2 + static_cast<int>(rng.below(2));
        std::vector<Edge> edges;
        for (int e = 0; e < l; ++e) {
            int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (u == v) v = (v + 1) % n;
            edges.push_back({std::min(u, v), std::max(u, v)});
        }
        EdgeLabeledMultigraph pattern(n, edges);
        if (pattern.has_isolated_vertex()) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int e = 0; e < l; ++e) {
            int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
            int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
            pairs.push_back({i, j});
        }
        BigInt hits = 0;
        std::vector<int> coloring(n, 0);
        do {
            bool ok = true;
            for (int e = 0; e < l && ok; ++e) {
                const auto& [u, v] = edges[e];
                const int lo = std::min(coloring[u], coloring[v]);
                const int hi = std::max(coloring[u], coloring[v]);
                ok = lo == std::min(pairs[e].first, pairs[e].second) &&
                     hi == std::max(pairs[e].first, pairs[e].second);
            }
            if (ok) ++hits;
        } while (oracle::next_odometer(coloring, k));
        CHECK(x_value(pattern, pairs, k) ==
              Rational(hits, integer_pow(BigInt(k), static_cast<unsigned>(n))));
    }

    CHECK_THROWS_AS(x_value(single, {{0, 1}, {0, 1}}, 2), Error);  // length mismatch
    CHECK_THROWS_AS(x_value(single, {{0, 2}}, 2), Error);          // color out of range
}

TEST_CASE("partition-collapsed patterns") {
    const EdgeLabeledMultigraph two_path(3, {{0, 1}, {0, 2}});
    const SetPartition together{{{0, 1}}};
    const SetPartition apart{{{0}, {1}}};

    const EdgeLabeledMultigraph whole = f_pi(two_path, together);
    CHECK(canonical_form(whole) == canonical_form(two_path));

    const EdgeLabeledMultigraph split = f_pi(two_path, apart);
    CHECK(split.vertex_count() == 4);  // each block keeps its own copy of vertex 0
    CHECK(split.edge_count() == 2);
    CHECK_FALSE(split.connected());
    CHECK(canonical_form(split) == canonical_form(EdgeLabeledMultigraph(4, {{0, 1}, {2, 3}})));

    // probabilities factor over blocks
    CHECK(x_value(split, {{0, 1}, {0, 1}}, 2) == Rational(1, 4));

    const EdgeLabeledMultigraph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    const EdgeLabeledMultigraph mixed = f_pi(triangle, SetPartition{{{0, 2}, {1}}});
    CHECK(mixed.vertex_count() == 5);  // a 2-path block plus a single-edge block
    CHECK(mixed.edge_count() == 3);

    CHECK_THROWS_AS(f_pi(two_path, SetPartition{{{0}}}), Error);         // misses label 1
    CHECK_THROWS_AS(f_pi(two_path, SetPartition{{{0, 1, 2}}}), Error);   // unknown label
}

TEST_CASE("pattern cumulants") {
    const EdgeLabeledMultigraph single(2, {{0, 1}});
    CHECK(kappa_fj(single, {{0, 1}}, 2) == Rational(1, 2));  // one partition, the mean

    const EdgeLabeledMultigraph parallel(2, {{0, 1}, {0, 1}});
    CHECK(kappa_fj(parallel, {{0, 1}, {0, 1}}, 2) == Rational(1, 4));  // 1/2 - (1/2)^2

    const EdgeLabeledMultigraph two_path(3, {{0, 1}, {0, 2}});
    CHECK(kappa_fj(two_path, {{0, 1}, {0, 1}}, 2) == 0);  // 1/4 - 1/4

    // triangle at l = 3, all pairs (0,1), k = 2: x over each partition
    const EdgeLabeledMultigraph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    const Rational direct = x_value(triangle, {{0, 1}, {0, 1}, {0, 1}}, 2);
    CHECK(direct == 0);  // odd cycle cannot be properly 2-colored
    // kappa = sum over the 5 partitions; verify against the formula by hand
    Rational by_hand = 0;
    for (const SetPartition& p : enumerate_partitions(3))
        by_hand += Rational(partition_weight(p.block_count())) *
                   x_value(f_pi(triangle, p), {{0, 1}, {0, 1}, {0, 1}}, 2);
    CHECK(kappa_fj(triangle, {{0, 1}, {0, 1}, {0, 1}}, 2) == by_hand);
    CHECK(by_hand == Rational(-1, 8));  // 0 - 3*(1/8) + 2*(1/8)
}

TEST_CASE("coordinate cumulants of the four-cycle") {
    const CountVectorDistribution dist = count_vector_distribution(make_cycle(4), 2);
    // N_0 ~ Binomial(4, 1/2)
    CHECK(coordinate_cumulant(dist, {0}) == 2);
    CHECK(coordinate_cumulant(dist, {0, 0}) == 1);
    CHECK(coordinate_cumulant(dist, {0, 0, 0}) == 0);
    CHECK(coordinate_cumulant(dist, {0, 0, 0, 0}) == Rational(-1, 2));
    // cross-edge count mean
    CHECK(coordinate_cumulant(dist, {pair_coord_index(2, 0, 1)}) == 2);
    // symmetry: colors are exchangeable
    CHECK(coordinate_cumulant(dist, {0, 1}) == coordinate_cumulant(dist, {1, 0}));
    CHECK(coordinate_cumulant(dist, {1, 1}) == coordinate_cumulant(dist, {0, 0}));

    CHECK_THROWS_AS(coordinate_cumulant(dist, {}), Error);
    CHECK_THROWS_AS(coordinate_cumulant(dist, {5}), Error);
    CHECK_THROWS_AS(coordinate_cumulant(dist, std::vector<int>(9, 0)), Error);
}

TEST_CASE("coordinate cumulants match the partition formula") {
    const SimpleGraph p4 = make_path(4);
    const CountVectorDistribution dist = count_vector_distribution(p4, 2);
    const std::vector<std::vector<int>> coordinate_sets = {
        {0, 3}, {3, 3}, {0, 1, 3}, {2, 3, 4}, {0, 0, 3, 3}};
    for (const auto& coords : coordinate_sets) {
        const int l = static_cast<int>(coords.size());
        // mixed moments of the chosen coordinates straight from the atoms
        std::vector<Rational> moments(std::size_t{1} << l, 0);
        for (unsigned mask = 1; mask < (1u << l); ++mask) {
            Rational sum = 0;
            for (const auto& [vec, count] : dist.atoms) {
                Rational prod = count;
                for (int p = 0; p < l; ++p)
                    if (mask & (1u << p)) prod *= vec[coords[p]];
                sum += prod;
            }
            moments[mask] = sum / Rational(dist.total);
        }
        CHECK(coordinate_cumulant(dist, coords) == joint_cumulant(l, moments));
    }
}

TEST_CASE("graph cumulant routes agree") {
    // frozen: kappa_{C4}((0,1),(0,1)) = i(parallel) kappa_par + i(2-path) kappa_path
    //                                 = 4 * 1/4 + 8 * 0 = 1
    const SimpleGraph c4 = make_cycle(4);
    CHECK(kappa_gj(c4, {{0, 1}, {0, 1}}, 2, KappaRoute::direct) == 1);
    CHECK(kappa_gj(c4, {{0, 1}, {0, 1}}, 2, KappaRoute::decomposition) == 1);
    // l = 1: the mean, i(single((0,1))) = m * 1/2
    CHECK(kappa_gj(c4, {{0, 1}}, 2, KappaRoute::direct) == 2);
    CHECK(kappa_gj(c4, {{0, 1}}, 2, KappaRoute::decomposition) == 2);

    // exhaustive pair sequences at l = 1, 2 over two graphs and k = 2, 3
    for (const SimpleGraph& g : {make_cycle(4), make_path(4)})
        for (int k = 2; k <= 3; ++k) {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    CHECK(kappa_gj(g, {{i, j}}, k, KappaRoute::direct) ==
                          kappa_gj(g, {{i, j}}, k, KappaRoute::decomposition));
                    for (int i2 = 0; i2 < k; ++i2)
                        for (int j2 = 0; j2 < k; ++j2)
                            CHECK(kappa_gj(g, {{i, j}, {i2, j2}}, k, KappaRoute::direct) ==
                                  kappa_gj(g, {{i, j}, {i2, j2}}, k,
                                           KappaRoute::decomposition));
                }
        }

    // a length-3 sample on the complete graph
    CHECK(kappa_gj(make_complete(4), {{0, 1}, {0, 1}, {0, 1}}, 2, KappaRoute::direct) ==
          kappa_gj(make_complete(4), {{0, 1}, {0, 1}, {0, 1}}, 2, KappaRoute::decomposition));

    CHECK_THROWS_AS(kappa_gj(c4, {}, 2, KappaRoute::direct), Error);
    CHECK_THROWS_AS(kappa_gj(c4, {{0, 2}}, 2, KappaRoute::direct), Error);
}
