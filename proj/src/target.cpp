#include "target.hpp"

#include <cmath>

#include "error.hpp"
#include "json.hpp"

namespace graphlim {

using OrderedJson = nlohmann::ordered_json;

WeightedTarget::WeightedTarget(std::vector<Rational> vertex_weights,
                               std::vector<std::vector<Rational>> edge_weights)
    : k_(static_cast<int>(vertex_weights.size())),
      vertex_(std::move(vertex_weights)),
      edge_(std::move(edge_weights)) {
    if (k_ == 0) fail(ErrorCode::invalid_argument, "target needs at least one color");
    if (static_cast<int>(edge_.size()) != k_)
        fail(ErrorCode::invalid_argument, "edge weight matrix must be k x k");
    for (const auto& row : edge_)
        if (static_cast<int>(row.size()) != k_)
            fail(ErrorCode::invalid_argument, "edge weight matrix must be k x k");
    for (const auto& w : vertex_)
        if (w < 0) fail(ErrorCode::invalid_argument, "negative vertex weight");
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) {
            if (edge_[i][j] < 0) fail(ErrorCode::invalid_argument, "negative edge weight");
            if (edge_[i][j] != edge_[j][i])
                fail(ErrorCode::invalid_argument, "edge weight matrix must be symmetric");
        }
    vertex_dbl_.resize(k_);
    edge_dbl_.assign(k_, std::vector<double>(k_));
    for (int i = 0; i < k_; ++i) vertex_dbl_[i] = static_cast<double>(vertex_[i]);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) edge_dbl_[i][j] = static_cast<double>(edge_[i][j]);
}

bool WeightedTarget::all_positive() const {
    for (const auto& w : vertex_)
        if (w <= 0) return false;
    for (const auto& row : edge_)
        for (const auto& w : row)
            if (w <= 0) return false;
    return true;
}

WeightedTarget WeightedTarget::uniform(int k) {
    if (k < 1) fail(ErrorCode::invalid_argument, "target needs at least one color");
    return WeightedTarget(std::vector<Rational>(k, 1),
                          std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, 1)));
}

LambdaVector LambdaVector::zero(int k) {
    if (k < 1) fail(ErrorCode::invalid_argument, "lambda needs at least one color");
    LambdaVector out;
    out.k = k;
    out.vertex.assign(k, 0.0);
    out.edge.assign(k, std::vector<double>(k, 0.0));
    return out;
}

double LambdaVector::inf_norm() const {
    double m = 0.0;
    for (double v : vertex) m = std::max(m, std::fabs(v));
    for (const auto& row : edge)
        for (double v : row) m = std::max(m, std::fabs(v));
    return m;
}

double LambdaVector::effective_inf_norm() const {
    double m = 0.0;
    for (double v : vertex) m = std::max(m, std::fabs(v));
    for (int i = 0; i < k; ++i) {
        m = std::max(m, std::fabs(edge[i][i]));
        for (int j = i + 1; j < k; ++j) m = std::max(m, std::fabs(edge[i][j] + edge[j][i]));
    }
    return m;
}

LambdaVector LambdaVector::scaled(double factor) const {
    LambdaVector out = *this;
    for (double& v : out.vertex) v *= factor;
    for (auto& row : out.edge)
        for (double& v : row) v *= factor;
    return out;
}

WeightedTarget target_from_lambda(const LambdaVector& lambda) {
    int k = lambda.k;
    if (k < 1 || static_cast<int>(lambda.vertex.size()) != k ||
        static_cast<int>(lambda.edge.size()) != k)
        fail(ErrorCode::invalid_argument, "malformed lambda vector");
    std::vector<Rational> vw(k);
    std::vector<std::vector<Rational>> ew(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i) vw[i] = exact_rational(std::exp(lambda.vertex[i]));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double w = (i == j) ? std::exp(lambda.edge[i][i])
                                : std::exp(lambda.edge[i][j] + lambda.edge[j][i]);
            ew[i][j] = exact_rational(w);
        }
    // pair sums are symmetric by construction, but enforce exact symmetry of
    // the stored matrix in case exp() rounds the two orders differently
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) ew[j][i] = ew[i][j];
    return WeightedTarget(std::move(vw), std::move(ew));
}

namespace {

Rational weight_from_json(const OrderedJson& value, const char* what) {
    if (value.is_string()) return parse_ratio(value.get<std::string>());
    if (value.is_number()) return exact_rational(value.get<double>());
    fail(ErrorCode::parse_error, std::string(what) + " must be a number or \"p/q\" string");
}

OrderedJson parse_json_document(const std::string& text) {
    OrderedJson doc = OrderedJson::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON document");
    return doc;
}

}  // namespace

WeightedTarget parse_target(const std::string& json_text) {
    OrderedJson doc = parse_json_document(json_text);
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("vertex_weights") ||
        !doc.contains("edge_weights"))
        fail(ErrorCode::parse_error, "target needs keys k, vertex_weights, edge_weights");
    if (!doc["k"].is_number_integer() || doc["k"].get<int>() < 1)
        fail(ErrorCode::parse_error, "k must be a positive integer");
    int k = doc["k"].get<int>();
    const auto& vw_json = doc["vertex_weights"];
    const auto& ew_json = doc["edge_weights"];
    if (!vw_json.is_array() || static_cast<int>(vw_json.size()) != k)
        fail(ErrorCode::parse_error, "vertex_weights must be an array of length k");
    if (!ew_json.is_array() || static_cast<int>(ew_json.size()) != k)
        fail(ErrorCode::parse_error, "edge_weights must be a k x k array");
    std::vector<Rational> vw(k);
    for (int i = 0; i < k; ++i) vw[i] = weight_from_json(vw_json[i], "vertex weight");
    std::vector<std::vector<Rational>> ew(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i) {
        if (!ew_json[i].is_array() || static_cast<int>(ew_json[i].size()) != k)
            fail(ErrorCode::parse_error, "edge_weights must be a k x k array");
        for (int j = 0; j < k; ++j) ew[i][j] = weight_from_json(ew_json[i][j], "edge weight");
    }
    return WeightedTarget(std::move(vw), std::move(ew));
}

std::string serialize_target(const WeightedTarget& target) {
    OrderedJson doc;
    int k = target.color_count();
    doc["k"] = k;
    OrderedJson vw = OrderedJson::array();
    for (int i = 0; i < k; ++i) vw.push_back(ratio_str(target.vertex_weight_exact(i)));
    doc["vertex_weights"] = std::move(vw);
    OrderedJson ew = OrderedJson::array();
    for (int i = 0; i < k; ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < k; ++j) row.push_back(ratio_str(target.edge_weight_exact(i, j)));
        ew.push_back(std::move(row));
    }
    doc["edge_weights"] = std::move(ew);
    return doc.dump();
}

LambdaVector parse_lambda(const std::string& json_text) {
    OrderedJson doc = parse_json_document(json_text);
    if (!doc.is_object() || !doc.contains("k") || !doc.contains("vertex") || !doc.contains("edge"))
        fail(ErrorCode::parse_error, "lambda needs keys k, vertex, edge");
    if (!doc["k"].is_number_integer() || doc["k"].get<int>() < 1)
        fail(ErrorCode::parse_error, "k must be a positive integer");
    int k = doc["k"].get<int>();
    const auto& v_json = doc["vertex"];
    const auto& e_json = doc["edge"];
    if (!v_json.is_array() || static_cast<int>(v_json.size()) != k)
        fail(ErrorCode::parse_error, "vertex must be an array of length k");
    if (!e_json.is_array() || static_cast<int>(e_json.size()) != k)
        fail(ErrorCode::parse_error, "edge must be a k x k array");
    LambdaVector out = LambdaVector::zero(k);
    for (int i = 0; i < k; ++i) {
        if (!v_json[i].is_number()) fail(ErrorCode::parse_error, "vertex entries must be numbers");
        out.vertex[i] = v_json[i].get<double>();
    }
    for (int i = 0; i < k; ++i) {
        if (!e_json[i].is_array() || static_cast<int>(e_json[i].size()) != k)
            fail(ErrorCode::parse_error, "edge must be a k x k array");
        for (int j = 0; j < k; ++j) {
            if (!e_json[i][j].is_number())
                fail(ErrorCode::parse_error, "edge entries must be numbers");
            out.edge[i][j] = e_json[i][j].get<double>();
        }
    }
    return out;
}

std::string serialize_lambda(const LambdaVector& lambda) {
    OrderedJson doc;
    doc["k"] = lambda.k;
    doc["vertex"] = lambda.vertex;
    doc["edge"] = lambda.edge;
    return doc.dump();
}

}  // namespace graphlim
