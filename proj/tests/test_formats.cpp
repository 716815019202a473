#include <cmath>
#include <functional>
#include <string>

#include "doctest.h"
#include "error.hpp"
#include "graph.hpp"
#include "json.hpp"
#include "numbers.hpp"
#include "target.hpp"
#include "verify.hpp"

using namespace graphlim;

namespace {

ErrorCode failure_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("target documents round trip") {
    const std::string text =
        R"({"k":2,"vertex_weights":["1/1","2/3"],"edge_weights":[["2/1","3/1"],["3/1","5/1"]]})";
    const WeightedTarget target = parse_target(text);
    CHECK(target.color_count() == 2);
    CHECK(target.vertex_weight_exact(1) == Rational(2, 3));
    CHECK(target.edge_weight_exact(0, 1) == 3);
    CHECK(serialize_target(target) == text);  // fixed point

    // plain numbers arrive as exact dyadic rationals
    const WeightedTarget dyadic = parse_target(
        R"({"k":1,"vertex_weights":[0.5],"edge_weights":[[0.25]]})");
    CHECK(dyadic.vertex_weight_exact(0) == Rational(1, 2));
    CHECK(dyadic.edge_weight_exact(0, 0) == Rational(1, 4));
    // serialize -> parse -> serialize is stable
    CHECK(serialize_target(parse_target(serialize_target(dyadic))) ==
          serialize_target(dyadic));

    const WeightedTarget uniform = WeightedTarget::uniform(2);
    const WeightedTarget reparsed = parse_target(serialize_target(uniform));
    CHECK(reparsed.vertex_weight_exact(0) == 1);
    CHECK(reparsed.edge_weight_exact(1, 0) == 1);
}

TEST_CASE("target parse failures") {
    auto code = [](const std::string& text) {
        return failure_code([&] { parse_target(text); });
    };
    CHECK(code("not json") == ErrorCode::parse_error);
    CHECK(code("[]") == ErrorCode::parse_error);
    CHECK(code(R"({"k":2})") == ErrorCode::parse_error);
    CHECK(code(R"({"k":0,"vertex_weights":[],"edge_weights":[]})") == ErrorCode::parse_error);
    CHECK(code(R"({"k":2,"vertex_weights":["1/1"],"edge_weights":[["1/1","1/1"],["1/1","1/1"]]})") ==
          ErrorCode::parse_error);  // vertex length
    CHECK(code(R"({"k":2,"vertex_weights":["1/1","1/1"],"edge_weights":[["1/1","1/1"]]})") ==
          ErrorCode::parse_error);  // edge shape
    CHECK(code(R"({"k":1,"vertex_weights":["x"],"edge_weights":[["1/1"]]})") ==
          ErrorCode::parse_error);  // bad ratio
    CHECK(code(R"({"k":1,"vertex_weights":[""],"edge_weights":[["1/1"]]})") ==
          ErrorCode::parse_error);  // empty ratio string
    CHECK(code(R"({"k":1,"vertex_weights":[true],"edge_weights":[["1/1"]]})") ==
          ErrorCode::parse_error);  // wrong type
    // structural violations surface as invalid_argument from the constructor
    CHECK(failure_code([] {
              parse_target(
                  R"({"k":2,"vertex_weights":["1/1","1/1"],"edge_weights":[["1/1","2/1"],["3/1","1/1"]]})");
          }) == ErrorCode::invalid_argument);  // asymmetric
    CHECK(failure_code([] {
              parse_target(R"({"k":1,"vertex_weights":["-1/2"],"edge_weights":[["1/1"]]})");
          }) == ErrorCode::invalid_argument);  // negative
}

TEST_CASE("lambda documents round trip") {
    const std::string text = R"({"k":2,"vertex":[0.1,-0.25],"edge":[[0.0,0.5],[0.125,0.0]]})";
    const LambdaVector lambda = parse_lambda(text);
    CHECK(lambda.k == 2);
    CHECK(lambda.vertex[1] == -0.25);
    CHECK(lambda.edge[1][0] == 0.125);
    CHECK(lambda.pair_sum(0, 1) == 0.625);
    const LambdaVector reparsed = parse_lambda(serialize_lambda(lambda));
    CHECK(reparsed.vertex == lambda.vertex);
    CHECK(reparsed.edge == lambda.edge);

    CHECK(parse_lambda(serialize_lambda(LambdaVector::zero(3))).k == 3);
}

TEST_CASE("lambda parse failures") {
    auto code = [](const std::string& text) {
        return failure_code([&] { parse_lambda(text); });
    };
    CHECK(code("{") == ErrorCode::parse_error);
    CHECK(code(R"({"k":2,"vertex":[0.1,0.2]})") == ErrorCode::parse_error);
    CHECK(code(R"({"k":2,"vertex":[0.1],"edge":[[0,0],[0,0]]})") == ErrorCode::parse_error);
    CHECK(code(R"({"k":2,"vertex":[0.1,0.2],"edge":[[0,0]]})") == ErrorCode::parse_error);
    CHECK(code(R"({"k":2,"vertex":[0.1,"x"],"edge":[[0,0],[0,0]]})") == ErrorCode::parse_error);
    CHECK(code(R"({"k":-1,"vertex":[],"edge":[]})") == ErrorCode::parse_error);
}

TEST_CASE("lambda norms and scaling") {
    LambdaVector lambda = LambdaVector::zero(2);
    lambda.vertex[0] = 0.3;
    lambda.edge[0][1] = 0.4;
    lambda.edge[1][0] = 0.2;
    lambda.edge[1][1] = -0.5;
    CHECK(lambda.inf_norm() == 0.5);
    CHECK(lambda.effective_inf_norm() == doctest::Approx(0.6));  // the pair sum wins
    const LambdaVector half = lambda.scaled(0.5);
    CHECK(half.vertex[0] == doctest::Approx(0.15));
    CHECK(half.pair_sum(0, 1) == doctest::Approx(0.3));
    CHECK(half.k == 2);

    // tilted target weights: diagonal e^{l_ii}, off-diagonal e^{l_ij + l_ji}
    const WeightedTarget tilted = target_from_lambda(lambda);
    CHECK(tilted.vertex_weight(0) == doctest::Approx(std::exp(0.3)));
    CHECK(tilted.edge_weight(0, 1) == doctest::Approx(std::exp(0.6)));
    CHECK(tilted.edge_weight(1, 0) == doctest::Approx(std::exp(0.6)));
    CHECK(tilted.edge_weight(1, 1) == doctest::Approx(std::exp(-0.5)));
    CHECK(tilted.all_positive());
}

TEST_CASE("verify report serialization") {
    VerifyReport report;
    report.tier = VerifyTier::smoke;
    report.checks.push_back({"first_check", true, "all good"});
    report.checks.push_back({"second_check", false, "went wrong"});
    CHECK_FALSE(report.all_passed());

    const auto doc = nlohmann::json::parse(serialize_verify_report(report));
    CHECK(doc["tier"] == "smoke");
    CHECK(doc["all_passed"] == false);
    REQUIRE(doc["checks"].size() == 2);
    CHECK(doc["checks"][0]["id"] == "first_check");
    CHECK(doc["checks"][0]["passed"] == true);
    CHECK(doc["checks"][1]["detail"] == "went wrong");

    report.checks.pop_back();
    CHECK(report.all_passed());
    const auto doc2 = nlohmann::json::parse(serialize_verify_report(report));
    CHECK(doc2["all_passed"] == true);

    CHECK(tier_name(VerifyTier::smoke) == std::string("smoke"));
    CHECK(tier_name(VerifyTier::full) == std::string("full"));
}

TEST_CASE("failure injection is reported") {
    const VerifyReport report = verify_all(VerifyTier::smoke, "matrix_suite");
    CHECK_FALSE(report.all_passed());
    bool found = false;
    for (const CheckResult& check : report.checks)
        if (check.id == "matrix_suite") {
            found = true;
            CHECK_FALSE(check.passed);
            CHECK(check.detail.find("injected") != std::string::npos);
        } else {
            CHECK(check.passed);
        }
    CHECK(found);
    CHECK_THROWS_AS(verify_all(VerifyTier::smoke, "no_such_check"), Error);
}
