// Exercises the shared library strictly through the C interface: no internal
// headers, everything crossing the boundary as strings, doubles, and handles.
#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "graphlim/graphlim.h"
#include "json.hpp"

namespace {

using nlohmann::json;

// Scoped wrappers so failed REQUIREs don't leak handles mid-test.
struct Graph {
    glim_graph* h = nullptr;
    ~Graph() { glim_graph_free(h); }
};
struct Target {
    glim_target* h = nullptr;
    ~Target() { glim_target_free(h); }
};
struct Lambda {
    glim_lambda* h = nullptr;
    ~Lambda() { glim_lambda_free(h); }
};
struct Taylor {
    glim_taylor* h = nullptr;
    ~Taylor() { glim_taylor_free(h); }
};

std::string take(char* text) {
    REQUIRE(text != nullptr);
    std::string copy = text;
    glim_string_free(text);
    return copy;
}

Graph family(const char* name, int a, int b = 0, unsigned long long seed = 0) {
    Graph g;
    REQUIRE(glim_graph_family(name, a, b, seed, &g.h) == GLIM_OK);
    return g;
}

}  // namespace

TEST_CASE("version and error state") {
    CHECK(glim_version() == std::string("graphlim 0.1.0"));
    glim_graph* out = nullptr;
    CHECK(glim_graph_parse(nullptr, &out) == GLIM_ERR_INVALID);
    CHECK(std::strlen(glim_last_error()) > 0);
    Graph c4 = family("cycle", 4);
    CHECK(glim_graph_counts(c4.h, nullptr, nullptr) == GLIM_OK);
    CHECK(glim_last_error() == std::string(""));  // cleared by the success
    glim_string_free(nullptr);                    // must be a no-op
}

TEST_CASE("graph parse, families, serialize") {
    Graph g;
    REQUIRE(glim_graph_parse("# square\n4 4\n0 1\n1 2\n2 3\n3 0\n", &g.h) == GLIM_OK);
    int n = 0, m = 0;
    CHECK(glim_graph_counts(g.h, &n, &m) == GLIM_OK);
    CHECK(n == 4);
    CHECK(m == 4);

    char* text = nullptr;
    REQUIRE(glim_graph_serialize(g.h, &text) == GLIM_OK);
    const std::string doc = take(text);
    CHECK(doc.substr(0, 4) == "4 4\n");
    Graph again;
    REQUIRE(glim_graph_parse(doc.c_str(), &again.h) == GLIM_OK);
    char* text2 = nullptr;
    REQUIRE(glim_graph_serialize(again.h, &text2) == GLIM_OK);
    CHECK(take(text2) == doc);

    glim_graph* bad = nullptr;
    CHECK(glim_graph_parse("2 1\n0 5\n", &bad) == GLIM_ERR_PARSE);
    CHECK(std::string(glim_last_error()).find("line") != std::string::npos);
    CHECK(glim_graph_family("moebius", 5, 0, 0, &bad) == GLIM_ERR_INVALID);

    Graph torus = family("torus", 3, 4);
    CHECK(glim_graph_counts(torus.h, &n, &m) == GLIM_OK);
    CHECK(n == 12);
    CHECK(m == 24);
    Graph reg = family("random_regular", 10, 3, 42);
    CHECK(glim_graph_counts(reg.h, &n, &m) == GLIM_OK);
    CHECK(n == 10);
    CHECK(m == 15);
}

TEST_CASE("counting through the boundary") {
    Graph k2 = family("complete", 2);
    Graph p3 = family("path", 3);
    Graph c4 = family("cycle", 4);
    char* out = nullptr;
    REQUIRE(glim_hom_count(k2.h, c4.h, &out) == GLIM_OK);
    CHECK(take(out) == "8");
    REQUIRE(glim_hom_count(p3.h, c4.h, &out) == GLIM_OK);
    CHECK(take(out) == "16");
    REQUIRE(glim_inj_count(p3.h, c4.h, &out) == GLIM_OK);
    CHECK(take(out) == "8");
    REQUIRE(glim_ind_count(p3.h, c4.h, &out) == GLIM_OK);
    CHECK(take(out) == "8");
    CHECK(glim_hom_count(nullptr, c4.h, &out) == GLIM_ERR_INVALID);
}

TEST_CASE("weighted targets and densities") {
    Graph k2 = family("complete", 2);
    Target uniform;
    REQUIRE(glim_target_uniform(4, &uniform.h) == GLIM_OK);
    char* out = nullptr;
    REQUIRE(glim_t_density_exact(k2.h, uniform.h, &out) == GLIM_OK);
    CHECK(take(out) == "1/1");

    Target weighted;
    REQUIRE(glim_target_parse(
                R"({"k":2,"vertex_weights":[1,1],"edge_weights":[["2/1","3/1"],["3/1","5/1"]]})",
                &weighted.h) == GLIM_OK);
    REQUIRE(glim_weighted_hom(k2.h, weighted.h, &out) == GLIM_OK);
    CHECK(take(out) == "13/1");
    REQUIRE(glim_t_density_exact(k2.h, weighted.h, &out) == GLIM_OK);
    CHECK(take(out) == "13/4");
    double logt = 0.0;
    REQUIRE(glim_log_t_density(k2.h, weighted.h, &logt) == GLIM_OK);
    CHECK(logt == doctest::Approx(std::log(13.0 / 4.0)).epsilon(1e-12));

    char* json_text = nullptr;
    REQUIRE(glim_target_serialize(weighted.h, &json_text) == GLIM_OK);
    const auto doc = json::parse(take(json_text));
    CHECK(doc["k"] == 2);
    CHECK(doc["edge_weights"][1][1] == "5/1");

    glim_target* bad = nullptr;
    CHECK(glim_target_parse("{}", &bad) == GLIM_ERR_PARSE);
    CHECK(glim_target_uniform(0, &bad) == GLIM_ERR_INVALID);

    // all edge weights zero: exact density fine, log density is a domain error
    Target zero;
    REQUIRE(glim_target_parse(R"({"k":1,"vertex_weights":[1],"edge_weights":[[0]]})",
                              &zero.h) == GLIM_OK);
    REQUIRE(glim_t_density_exact(k2.h, zero.h, &out) == GLIM_OK);
    CHECK(take(out) == "0/1");
    CHECK(glim_log_t_density(k2.h, zero.h, &logt) == GLIM_ERR_DOMAIN);
}

TEST_CASE("profiles and ball censuses") {
    Graph c4 = family("cycle", 4);
    char* out = nullptr;
    REQUIRE(glim_i_profile_json(c4.h, 2, &out) == GLIM_OK);
    const auto profile = json::parse(take(out));
    CHECK(profile["l"] == 2);
    CHECK(profile["tuples"] == "16");
    REQUIRE(profile["patterns"].size() == 3);
    long long total = 0;
    for (const auto& entry : profile["patterns"])
        total += std::stoll(entry["count"].get<std::string>());
    CHECK(total == 16);

    REQUIRE(glim_ball_distribution_json(c4.h, 1, &out) == GLIM_OK);
    const auto balls = json::parse(take(out));
    CHECK(balls["radius"] == 1);
    CHECK(balls["distinct"] == 1);
    CHECK(balls["classes"][0]["frequency"] == "1/1");

    CHECK(glim_i_profile_json(c4.h, 9, &out) == GLIM_ERR_BUDGET);  // beyond the length cap
    CHECK(glim_i_profile_json(c4.h, 0, &out) == GLIM_ERR_INVALID);
    CHECK(glim_ball_distribution_json(c4.h, -1, &out) == GLIM_ERR_INVALID);

    // 50 choose 3 edge tuples in a large complete graph blows the budget
    Graph k50 = family("complete", 50);
    CHECK(glim_i_profile_json(k50.h, 3, &out) == GLIM_ERR_BUDGET);
    CHECK(std::string(glim_last_error()).find("budget") != std::string::npos);
}

TEST_CASE("lambda handles and the CGF bridge") {
    Lambda lambda;
    REQUIRE(glim_lambda_parse(R"({"k":2,"vertex":[0,0],"edge":[[1,0],[0,0]]})",
                              &lambda.h) == GLIM_OK);
    Graph k2 = family("complete", 2);
    double value = 0.0;
    REQUIRE(glim_cgf_value(k2.h, 2, lambda.h, &value) == GLIM_OK);
    // (1/2) log((e + 3)/4): only the monochromatic-0 coloring picks up the tilt
    CHECK(value == doctest::Approx(0.17868700975439433).epsilon(1e-13));
    double gap = 1.0;
    REQUIRE(glim_cgf_bridge_gap(k2.h, 2, lambda.h, &gap) == GLIM_OK);
    CHECK(gap < 1e-12);
    CHECK(glim_cgf_value(k2.h, 3, lambda.h, &value) == GLIM_ERR_INVALID);  // k mismatch

    char* text = nullptr;
    REQUIRE(glim_lambda_serialize(lambda.h, &text) == GLIM_OK);
    const auto doc = json::parse(take(text));
    CHECK(doc["k"] == 2);
    CHECK(doc["edge"][0][0] == 1.0);

    Lambda a, b, c;
    REQUIRE(glim_lambda_random("effective", 3, 0.5, 99, &a.h) == GLIM_OK);
    REQUIRE(glim_lambda_random("effective", 3, 0.5, 99, &b.h) == GLIM_OK);
    REQUIRE(glim_lambda_random("effective", 3, 0.5, 100, &c.h) == GLIM_OK);
    char *ta = nullptr, *tb = nullptr, *tc = nullptr;
    REQUIRE(glim_lambda_serialize(a.h, &ta) == GLIM_OK);
    REQUIRE(glim_lambda_serialize(b.h, &tb) == GLIM_OK);
    REQUIRE(glim_lambda_serialize(c.h, &tc) == GLIM_OK);
    const std::string sa = take(ta), sb = take(tb), sc = take(tc);
    CHECK(sa == sb);
    CHECK(sa != sc);
    glim_lambda* bad = nullptr;
    CHECK(glim_lambda_random("weird", 2, 0.5, 1, &bad) == GLIM_ERR_INVALID);
    CHECK(glim_lambda_parse(R"({"k":2})", &bad) == GLIM_ERR_PARSE);
}

TEST_CASE("joint cumulants by both routes") {
    Graph c4 = family("cycle", 4);
    char* out = nullptr;
    REQUIRE(glim_kappa(c4.h, 2, "[[1,2]]", "direct", &out) == GLIM_OK);
    const std::string direct = take(out);
    CHECK(direct == "2/1");  // mean cross-edge count of C4 at k = 2
    REQUIRE(glim_kappa(c4.h, 2, "[[1,2]]", "decomposition", &out) == GLIM_OK);
    CHECK(take(out) == direct);

    REQUIRE(glim_kappa(c4.h, 2, "[[1,2],[1,2]]", "direct", &out) == GLIM_OK);
    const std::string second = take(out);
    REQUIRE(glim_kappa(c4.h, 2, "[[1,2],[1,2]]", "decomposition", &out) == GLIM_OK);
    CHECK(take(out) == second);

    CHECK(glim_kappa(c4.h, 2, "[[1,3]]", "direct", &out) == GLIM_ERR_INVALID);
    CHECK(glim_kappa(c4.h, 2, "[]", "direct", &out) == GLIM_ERR_INVALID);
    CHECK(glim_kappa(c4.h, 2, "[[1,2]]", "sideways", &out) == GLIM_ERR_INVALID);
    CHECK(glim_kappa(c4.h, 2, "nonsense", "direct", &out) == GLIM_ERR_PARSE);
}

TEST_CASE("catalogs, matrices, rank report") {
    char* out = nullptr;
    REQUIRE(glim_catalog_json(2, &out) == GLIM_OK);
    const auto catalog = json::parse(take(out));
    CHECK(catalog["size"] == 3);
    CHECK(catalog["connected_size"] == 2);

    REQUIRE(glim_matrices_json(2, 4, &out) == GLIM_OK);
    const auto matrices = json::parse(take(out));
    CHECK(matrices["E"][2][2] == "1/8");
    CHECK(matrices["row_order"].size() == 3);

    int all_passed = 0;
    REQUIRE(glim_rank_report_json(2, 4, &out, &all_passed) == GLIM_OK);
    const auto report = json::parse(take(out));
    CHECK(all_passed == 1);
    CHECK(report["all_passed"] == true);
    CHECK(report["rank_e"] == 3);

    CHECK(glim_catalog_json(0, &out) == GLIM_ERR_INVALID);
    CHECK(glim_matrices_json(2, 3, &out) == GLIM_ERR_INVALID);  // k below the 2l vertex maximum
}

TEST_CASE("taylor models through handles") {
    Graph c4 = family("cycle", 4);
    Taylor model;
    REQUIRE(glim_taylor_build(c4.h, 2, 4, &model.h) == GLIM_OK);
    char* out = nullptr;
    REQUIRE(glim_taylor_json(model.h, &out) == GLIM_OK);
    const auto doc = json::parse(take(out));
    CHECK(doc["k"] == 2);
    CHECK(doc["order"] == 4);
    CHECK(doc["degree_bound"] == 2);
    CHECK(doc["terms"].size() == 125);

    Lambda lambda;
    REQUIRE(glim_lambda_random("effective", 2, 0.02, 7, &lambda.h) == GLIM_OK);
    double approx = 0.0, exact = 0.0;
    int inside = 0;
    REQUIRE(glim_taylor_eval(model.h, lambda.h, -1, &approx, &inside) == GLIM_OK);
    CHECK(inside == 1);
    REQUIRE(glim_cgf_value(c4.h, 2, lambda.h, &exact) == GLIM_OK);
    double tail = 0.0;
    REQUIRE(glim_tail_majorant(2, 4, 0.02, &tail) == GLIM_OK);
    CHECK(std::fabs(approx - exact) <= tail);

    double truncated = 1.0;
    REQUIRE(glim_taylor_eval(model.h, lambda.h, 0, &truncated, nullptr) == GLIM_OK);
    CHECK(truncated == 0.0);

    double radius = 0.0;
    REQUIRE(glim_radius(2, &radius) == GLIM_OK);
    CHECK(radius == doctest::Approx(1.0 / (8.0 * std::exp(1.0))).epsilon(1e-15));
    CHECK(glim_radius(0, &radius) == GLIM_ERR_INVALID);

    REQUIRE(glim_tail_majorant(2, 4, 0.2, &tail) == GLIM_OK);
    CHECK(std::isinf(tail));  // beyond the geometric-ratio threshold
    CHECK(glim_taylor_build(c4.h, 2, 0, &model.h) == GLIM_ERR_INVALID);
}

TEST_CASE("sequence reports") {
    const char* spec =
        R"({"family":"cycle","n_min":4,"n_max":8,"n_step":2,"k":2,)"
        R"("max_pattern_length":2,"ball_radii":[1],"seed":1})";
    char* out = nullptr;
    REQUIRE(glim_sequence_report(spec, "json", &out) == GLIM_OK);
    const auto doc = json::parse(take(out));
    CHECK(doc["spec"]["family"] == "cycle");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["n"] == 4);

    REQUIRE(glim_sequence_report(spec, "csv", &out) == GLIM_OK);
    const std::string csv = take(out);
    CHECK(csv.substr(0, 8) == "index,n,");

    CHECK(glim_sequence_report(spec, "xml", &out) == GLIM_ERR_INVALID);
    CHECK(glim_sequence_report("{}", "json", &out) == GLIM_ERR_INVALID);  // no family
    CHECK(glim_sequence_report("not json", "json", &out) == GLIM_ERR_PARSE);
}

TEST_CASE("verification entry point") {
    char* out = nullptr;
    int all_passed = 0;
    REQUIRE(glim_verify("smoke", nullptr, &out, &all_passed) == GLIM_OK);
    const auto doc = json::parse(take(out));
    CHECK(all_passed == 1);
    CHECK(doc["tier"] == "smoke");
    CHECK(doc["checks"].size() == 10);

    REQUIRE(glim_verify("smoke", "bridge_identity", &out, &all_passed) == GLIM_OK);
    const auto forced = json::parse(take(out));
    CHECK(all_passed == 0);
    bool saw_forced = false;
    for (const auto& check : forced["checks"])
        if (check["id"] == "bridge_identity") {
            saw_forced = true;
            CHECK(check["passed"] == false);
        }
    CHECK(saw_forced);

    CHECK(glim_verify("medium", nullptr, &out, &all_passed) == GLIM_ERR_INVALID);
    CHECK(glim_verify("smoke", "no_such_check", &out, &all_passed) == GLIM_ERR_INVALID);
}
