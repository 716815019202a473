#include "graphlim/graphlim.h"

#include <cstdlib>
#include <cstring>
#include <exception>
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
#include "verify.hpp"

struct glim_graph {
    graphlim::SimpleGraph value;
};
struct glim_target {
    graphlim::WeightedTarget value;
};
struct glim_lambda {
    graphlim::LambdaVector value;
};
struct glim_taylor {
    graphlim::TaylorModel value;
};

namespace {

using graphlim::Error;
using graphlim::ErrorCode;
using ordered_json = nlohmann::ordered_json;

thread_local std::string g_last_error;

int map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return GLIM_ERR_INVALID;
        case ErrorCode::parse_error: return GLIM_ERR_PARSE;
        case ErrorCode::budget_exceeded: return GLIM_ERR_BUDGET;
        case ErrorCode::domain_error: return GLIM_ERR_DOMAIN;
        case ErrorCode::generation_failed: return GLIM_ERR_GENERATION;
    }
    return GLIM_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GLIM_OK;
    } catch (const Error& err) {
        g_last_error = err.what();
        return map_code(err.code());
    } catch (const std::exception& err) {
        g_last_error = err.what();
        return GLIM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return GLIM_ERR_INTERNAL;
    }
}

int invalid(const char* message) {
    g_last_error = message;
    return GLIM_ERR_INVALID;
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(bool condition, const char* message) {
    if (!condition) graphlim::fail(ErrorCode::invalid_argument, message);
}

std::string i_profile_json(const graphlim::SimpleGraph& g, int length) {
    const auto profile = graphlim::i_profile(g, length);
    graphlim::BigInt tuples = graphlim::integer_pow(graphlim::BigInt(g.edge_count()),
                                                    static_cast<unsigned>(length));
    ordered_json doc;
    doc["l"] = length;
    doc["tuples"] = tuples.str();
    ordered_json entries = ordered_json::array();
    for (const graphlim::PatternCount& entry : profile) {
        ordered_json item;
        item["name"] = entry.name;
        item["code"] = entry.code.hex();
        item["vertices"] = entry.rep.vertex_count();
        ordered_json edges = ordered_json::array();
        for (const auto& [u, v] : entry.rep.edges()) edges.push_back({u, v});
        item["edges"] = std::move(edges);
        item["connected"] = entry.rep.connected();
        item["count"] = entry.count.str();
        entries.push_back(std::move(item));
    }
    doc["patterns"] = std::move(entries);
    return doc.dump();
}

std::string ball_distribution_json(const graphlim::SimpleGraph& g, int radius) {
    const graphlim::BallDistribution balls = graphlim::ball_distribution(g, radius);
    ordered_json doc;
    doc["radius"] = balls.radius;
    doc["distinct"] = balls.freqs.size();
    ordered_json classes = ordered_json::array();
    for (const auto& [code, freq] : balls.freqs) {
        ordered_json item;
        item["code"] = code.hex();
        item["frequency"] = graphlim::ratio_str(freq);
        classes.push_back(std::move(item));
    }
    doc["classes"] = std::move(classes);
    return doc.dump();
}

graphlim::SequenceSpec parse_sequence_spec(const char* spec_json) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(spec_json);
    } catch (const std::exception& err) {
        graphlim::fail(ErrorCode::parse_error, std::string("sequence spec: ") + err.what());
    }
    require(doc.is_object(), "sequence spec must be a JSON object");
    graphlim::SequenceSpec spec;
    require(doc.contains("family") && doc["family"].is_string(),
            "sequence spec needs a 'family' string");
    spec.family = doc["family"].get<std::string>();
    auto read_int = [&](const char* key, int fallback) {
        if (!doc.contains(key)) return fallback;
        require(doc[key].is_number_integer(), "sequence spec integers must be integers");
        return doc[key].get<int>();
    };
    spec.n_min = read_int("n_min", 4);
    spec.n_max = read_int("n_max", 12);
    spec.n_step = read_int("n_step", 1);
    spec.k = read_int("k", 2);
    spec.max_pattern_length = read_int("max_pattern_length", 2);
    spec.regular_degree = read_int("regular_degree", 3);
    if (doc.contains("seed")) {
        require(doc["seed"].is_number_unsigned() || doc["seed"].is_number_integer(),
                "seed must be an integer");
        spec.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("ball_radii")) {
        require(doc["ball_radii"].is_array(), "'ball_radii' must be an array");
        spec.ball_radii.clear();
        for (const auto& r : doc["ball_radii"]) {
            require(r.is_number_integer(), "ball radii must be integers");
            spec.ball_radii.push_back(r.get<int>());
        }
    }
    if (doc.contains("lambdas")) {
        require(doc["lambdas"].is_array(), "'lambdas' must be an array");
        for (const auto& entry : doc["lambdas"])
            spec.lambdas.push_back(graphlim::parse_lambda(entry.dump()));
    }
    return spec;
}

std::vector<std::pair<int, int>> parse_pairs(const char* pairs_json, int k) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(pairs_json);
    } catch (const std::exception& err) {
        graphlim::fail(ErrorCode::parse_error, std::string("pair sequence: ") + err.what());
    }
    require(doc.is_array() && !doc.empty(), "pair sequence must be a non-empty array");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& entry : doc) {
        require(entry.is_array() && entry.size() == 2 && entry[0].is_number_integer() &&
                    entry[1].is_number_integer(),
                "each pair must be a [i, j] integer array");
        const int i = entry[0].get<int>();
        const int j = entry[1].get<int>();
        require(i >= 1 && i <= k && j >= 1 && j <= k, "pair colors must lie in 1..k");
        pairs.emplace_back(i - 1, j - 1);
    }
    return pairs;
}

}  // namespace

extern "C" {

const char* glim_version(void) { return "graphlim 0.1.0"; }

const char* glim_last_error(void) { return g_last_error.c_str(); }

void glim_string_free(char* text) { std::free(text); }

int glim_graph_parse(const char* edge_list_text, glim_graph** out) {
    if (edge_list_text == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] { *out = new glim_graph{graphlim::parse_graph(edge_list_text)}; });
}

int glim_graph_family(const char* family, int a, int b, unsigned long long seed,
                      glim_graph** out) {
    if (family == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] {
        const std::string name = family;
        graphlim::SimpleGraph g;
        if (name == "cycle") {
            g = graphlim::make_cycle(a);
        } else if (name == "path") {
            g = graphlim::make_path(a);
        } else if (name == "complete") {
            g = graphlim::make_complete(a);
        } else if (name == "torus") {
            g = graphlim::make_torus(a, b);
        } else if (name == "random_regular") {
            g = graphlim::make_random_regular(a, b, seed);
        } else {
            graphlim::fail(ErrorCode::invalid_argument, "unknown family '" + name + "'");
        }
        *out = new glim_graph{std::move(g)};
    });
}

int glim_graph_serialize(const glim_graph* g, char** out_text) {
    if (g == nullptr || out_text == nullptr) return invalid("null argument");
    return guarded([&] { *out_text = copy_string(graphlim::serialize_graph(g->value)); });
}

int glim_graph_counts(const glim_graph* g, int* out_vertices, int* out_edges) {
    if (g == nullptr) return invalid("null argument");
    if (out_vertices != nullptr) *out_vertices = g->value.vertex_count();
    if (out_edges != nullptr) *out_edges = g->value.edge_count();
    g_last_error.clear();
    return GLIM_OK;
}

void glim_graph_free(glim_graph* g) { delete g; }

int glim_hom_count(const glim_graph* pattern, const glim_graph* host, char** out_decimal) {
    if (pattern == nullptr || host == nullptr || out_decimal == nullptr)
        return invalid("null argument");
    return guarded([&] {
        *out_decimal = copy_string(graphlim::hom_count(pattern->value, host->value).str());
    });
}

int glim_inj_count(const glim_graph* pattern, const glim_graph* host, char** out_decimal) {
    if (pattern == nullptr || host == nullptr || out_decimal == nullptr)
        return invalid("null argument");
    return guarded([&] {
        *out_decimal = copy_string(graphlim::inj_count(pattern->value, host->value).str());
    });
}

int glim_ind_count(const glim_graph* pattern, const glim_graph* host, char** out_decimal) {
    if (pattern == nullptr || host == nullptr || out_decimal == nullptr)
        return invalid("null argument");
    return guarded([&] {
        *out_decimal = copy_string(graphlim::ind_count(pattern->value, host->value).str());
    });
}

int glim_target_parse(const char* json_text, glim_target** out) {
    if (json_text == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] { *out = new glim_target{graphlim::parse_target(json_text)}; });
}

int glim_target_uniform(int k, glim_target** out) {
    if (out == nullptr) return invalid("null argument");
    return guarded([&] { *out = new glim_target{graphlim::WeightedTarget::uniform(k)}; });
}

int glim_target_serialize(const glim_target* target, char** out_json) {
    if (target == nullptr || out_json == nullptr) return invalid("null argument");
    return guarded([&] { *out_json = copy_string(graphlim::serialize_target(target->value)); });
}

void glim_target_free(glim_target* target) { delete target; }

int glim_weighted_hom(const glim_graph* g, const glim_target* target, char** out_ratio) {
    if (g == nullptr || target == nullptr || out_ratio == nullptr)
        return invalid("null argument");
    return guarded([&] {
        *out_ratio =
            copy_string(graphlim::ratio_str(graphlim::weighted_hom_exact(g->value, target->value)));
    });
}

int glim_t_density_exact(const glim_graph* g, const glim_target* target, char** out_ratio) {
    if (g == nullptr || target == nullptr || out_ratio == nullptr)
        return invalid("null argument");
    return guarded([&] {
        *out_ratio =
            copy_string(graphlim::ratio_str(graphlim::t_density_exact(g->value, target->value)));
    });
}

int glim_log_t_density(const glim_graph* g, const glim_target* target, double* out_value) {
    if (g == nullptr || target == nullptr || out_value == nullptr)
        return invalid("null argument");
    return guarded([&] { *out_value = graphlim::log_t_density(g->value, target->value); });
}

int glim_i_profile_json(const glim_graph* g, int length, char** out_json) {
    if (g == nullptr || out_json == nullptr) return invalid("null argument");
    return guarded([&] { *out_json = copy_string(i_profile_json(g->value, length)); });
}

int glim_ball_distribution_json(const glim_graph* g, int radius, char** out_json) {
    if (g == nullptr || out_json == nullptr) return invalid("null argument");
    return guarded([&] { *out_json = copy_string(ball_distribution_json(g->value, radius)); });
}

int glim_lambda_parse(const char* json_text, glim_lambda** out) {
    if (json_text == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] { *out = new glim_lambda{graphlim::parse_lambda(json_text)}; });
}

int glim_lambda_random(const char* mode, int k, double cap, unsigned long long seed,
                       glim_lambda** out) {
    if (mode == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] {
        graphlim::Rng rng(seed);
        const std::string name = mode;
        graphlim::LambdaVector lambda;
        if (name == "raw") {
            lambda = graphlim::random_raw_lambda(k, cap, rng);
        } else if (name == "effective") {
            lambda = graphlim::random_effective_lambda(k, cap, rng);
        } else {
            graphlim::fail(ErrorCode::invalid_argument,
                           "lambda mode must be 'raw' or 'effective'");
        }
        *out = new glim_lambda{std::move(lambda)};
    });
}

int glim_lambda_serialize(const glim_lambda* lambda, char** out_json) {
    if (lambda == nullptr || out_json == nullptr) return invalid("null argument");
    return guarded([&] { *out_json = copy_string(graphlim::serialize_lambda(lambda->value)); });
}

void glim_lambda_free(glim_lambda* lambda) { delete lambda; }

int glim_cgf_value(const glim_graph* g, int k, const glim_lambda* lambda, double* out_value) {
    if (g == nullptr || lambda == nullptr || out_value == nullptr)
        return invalid("null argument");
    return guarded([&] { *out_value = graphlim::cgf_value(g->value, k, lambda->value); });
}

int glim_cgf_bridge_gap(const glim_graph* g, int k, const glim_lambda* lambda,
                        double* out_gap) {
    if (g == nullptr || lambda == nullptr || out_gap == nullptr)
        return invalid("null argument");
    return guarded([&] {
        const double f = graphlim::cgf_value(g->value, k, lambda->value);
        const double via_density =
            graphlim::log_t_density(g->value, graphlim::target_from_lambda(lambda->value)) /
            g->value.vertex_count();
        *out_gap = f > via_density ? f - via_density : via_density - f;
    });
}

int glim_kappa(const glim_graph* g, int k, const char* pairs_json, const char* route,
               char** out_ratio) {
    if (g == nullptr || pairs_json == nullptr || route == nullptr || out_ratio == nullptr)
        return invalid("null argument");
    return guarded([&] {
        require(k >= 1, "color count must be >= 1");
        const auto pairs = parse_pairs(pairs_json, k);
        const std::string route_name = route;
        graphlim::KappaRoute r;
        if (route_name == "direct") {
            r = graphlim::KappaRoute::direct;
        } else if (route_name == "decomposition") {
            r = graphlim::KappaRoute::decomposition;
        } else {
            graphlim::fail(ErrorCode::invalid_argument,
                           "route must be 'direct' or 'decomposition'");
        }
        *out_ratio =
            copy_string(graphlim::ratio_str(graphlim::kappa_gj(g->value, pairs, k, r)));
    });
}

int glim_catalog_json(int length, char** out_json) {
    if (out_json == nullptr) return invalid("null argument");
    return guarded([&] {
        *out_json = copy_string(graphlim::serialize_catalog(graphlim::enumerate_catalog(length)));
    });
}

int glim_matrices_json(int length, int k, char** out_json) {
    if (out_json == nullptr) return invalid("null argument");
    return guarded([&] {
        *out_json =
            copy_string(graphlim::serialize_matrices(graphlim::build_matrices(length, k)));
    });
}

int glim_rank_report_json(int length, int k, char** out_json, int* out_all_passed) {
    if (out_json == nullptr) return invalid("null argument");
    return guarded([&] {
        const graphlim::CoefficientMatrices mats = graphlim::build_matrices(length, k);
        const std::vector<std::pair<std::string, graphlim::SimpleGraph>> samples = {
            {"C4", graphlim::make_cycle(4)},
            {"C5", graphlim::make_cycle(5)},
            {"P5", graphlim::make_path(5)},
            {"K4", graphlim::make_complete(4)}};
        const graphlim::RankReport report = graphlim::verify_rank(mats, samples);
        *out_json = copy_string(graphlim::serialize_rank_report(report));
        if (out_all_passed != nullptr) *out_all_passed = report.all_passed() ? 1 : 0;
    });
}

int glim_taylor_build(const glim_graph* g, int k, int order, glim_taylor** out) {
    if (g == nullptr || out == nullptr) return invalid("null argument");
    return guarded([&] { *out = new glim_taylor{graphlim::taylor_model(g->value, k, order)}; });
}

int glim_taylor_json(const glim_taylor* model, char** out_json) {
    if (model == nullptr || out_json == nullptr) return invalid("null argument");
    return guarded(
        [&] { *out_json = copy_string(graphlim::serialize_taylor_model(model->value)); });
}

int glim_taylor_eval(const glim_taylor* model, const glim_lambda* lambda, int truncate_order,
                     double* out_value, int* out_inside_radius) {
    if (model == nullptr || lambda == nullptr || out_value == nullptr)
        return invalid("null argument");
    return guarded([&] {
        bool inside = false;
        *out_value = graphlim::taylor_eval(model->value, lambda->value, truncate_order, &inside);
        if (out_inside_radius != nullptr) *out_inside_radius = inside ? 1 : 0;
    });
}

void glim_taylor_free(glim_taylor* model) { delete model; }

int glim_radius(int degree_bound, double* out_value) {
    if (out_value == nullptr) return invalid("null argument");
    return guarded([&] { *out_value = graphlim::radius(degree_bound); });
}

int glim_tail_majorant(int degree_bound, int order, double z, double* out_value) {
    if (out_value == nullptr) return invalid("null argument");
    return guarded([&] { *out_value = graphlim::tail_majorant(degree_bound, order, z); });
}

int glim_sequence_report(const char* spec_json, const char* format, char** out_text) {
    if (spec_json == nullptr || format == nullptr || out_text == nullptr)
        return invalid("null argument");
    return guarded([&] {
        const graphlim::SequenceSpec spec = parse_sequence_spec(spec_json);
        const graphlim::SequenceReport report = graphlim::sequence_report(spec);
        const std::string name = format;
        if (name == "json") {
            *out_text = copy_string(graphlim::sequence_report_json(report));
        } else if (name == "csv") {
            *out_text = copy_string(graphlim::sequence_report_csv(report));
        } else {
            graphlim::fail(ErrorCode::invalid_argument, "format must be 'json' or 'csv'");
        }
    });
}

int glim_verify(const char* tier, const char* inject_failure, char** out_json,
                int* out_all_passed) {
    if (tier == nullptr || out_json == nullptr) return invalid("null argument");
    return guarded([&] {
        const std::string tier_text = tier;
        graphlim::VerifyTier t;
        if (tier_text == "smoke") {
            t = graphlim::VerifyTier::smoke;
        } else if (tier_text == "full") {
            t = graphlim::VerifyTier::full;
        } else {
            graphlim::fail(ErrorCode::invalid_argument, "tier must be 'smoke' or 'full'");
        }
        const std::string inject = inject_failure == nullptr ? "" : inject_failure;
        const graphlim::VerifyReport report = graphlim::verify_all(t, inject);
        *out_json = copy_string(graphlim::serialize_verify_report(report));
        if (out_all_passed != nullptr) *out_all_passed = report.all_passed() ? 1 : 0;
    });
}

}  // extern "C"
