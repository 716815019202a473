#ifndef GRAPHLIM_TARGET_HPP
#define GRAPHLIM_TARGET_HPP

#include <string>
#include <vector>

#include "numbers.hpp"

namespace graphlim {

// Weighted homomorphism target: k colors, nonnegative vertex weights, and a
// symmetric nonnegative k x k edge weight matrix. Every weight carries an
// exact rational mirror (doubles are dyadic, so nothing is lost when a value
// arrives as a plain number).
class WeightedTarget {
public:
    WeightedTarget(std::vector<Rational> vertex_weights,
                   std::vector<std::vector<Rational>> edge_weights);

    int color_count() const { return k_; }
    double vertex_weight(int i) const { return vertex_dbl_[i]; }
    double edge_weight(int i, int j) const { return edge_dbl_[i][j]; }
    const Rational& vertex_weight_exact(int i) const { return vertex_[i]; }
    const Rational& edge_weight_exact(int i, int j) const { return edge_[i][j]; }

    // False once any weight is zero; log densities need this to hold.
    bool all_positive() const;

    static WeightedTarget uniform(int k);  // all weights 1

private:
    int k_ = 0;
    std::vector<Rational> vertex_;
    std::vector<std::vector<Rational>> edge_;
    std::vector<double> vertex_dbl_;
    std::vector<std::vector<double>> edge_dbl_;
};

// Exponential tilt direction: per-color vertex coordinates and a full (not
// necessarily symmetric) k x k edge coordinate matrix. Only the sums
// lambda_ij + lambda_ji and the diagonal enter any downstream quantity.
struct LambdaVector {
    int k = 0;
    std::vector<double> vertex;             // size k
    std::vector<std::vector<double>> edge;  // k x k

    static LambdaVector zero(int k);

    double pair_sum(int i, int j) const { return edge[i][j] + edge[j][i]; }
    // Largest magnitude over raw entries.
    double inf_norm() const;
    // Largest magnitude over the coordinates that matter: vertex entries,
    // diagonal edge entries, and off-diagonal pair sums.
    double effective_inf_norm() const;
    LambdaVector scaled(double factor) const;
};

// Tilted target H_lambda: vertex weight e^{lambda_i}, edge weight
// e^{lambda_ij + lambda_ji} off the diagonal and e^{lambda_ii} on it.
WeightedTarget target_from_lambda(const LambdaVector& lambda);

WeightedTarget parse_target(const std::string& json_text);
std::string serialize_target(const WeightedTarget& target);
LambdaVector parse_lambda(const std::string& json_text);
std::string serialize_lambda(const LambdaVector& lambda);

}  // namespace graphlim

#endif
