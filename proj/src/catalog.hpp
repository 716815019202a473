#ifndef GRAPHLIM_CATALOG_HPP
#define GRAPHLIM_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "cumulant.hpp"
#include "graph.hpp"
#include "multigraph.hpp"
#include "numbers.hpp"

namespace graphlim {

struct CatalogEntry {
    EdgeLabeledMultigraph pattern;  // canonical vertex labeling
    CanonicalCode code;
    std::string name;
    bool connected = false;
};

// All multigraphs with l labeled edges and no isolated vertices, one
// representative per label-preserving isomorphism class, ascending by
// (vertex count, canonical code). connected_indices selects the connected
// sublist in the same order.
struct Catalog {
    int l = 0;
    std::vector<CatalogEntry> all;
    std::vector<int> connected_indices;

    int size() const { return static_cast<int>(all.size()); }
    int connected_size() const { return static_cast<int>(connected_indices.size()); }
    int index_of(const CanonicalCode& code) const;  // -1 when absent
};

// Two independent generation orders; they must agree, which the tests check.
enum class CatalogStrategy { edges_first, vertex_count_first };

Catalog enumerate_catalog(int l, CatalogStrategy strategy = CatalogStrategy::edges_first,
                          const Budgets& budgets = default_budgets());

// Distinct colors 0,1,... assigned to the pattern's vertices in canonical
// vertex order; needs k >= vertex count.
ColorPattern embed_pattern(const EdgeLabeledMultigraph& j, int k);

struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Rational>> a;

    static RationalMatrix zero(int rows, int cols);
    RationalMatrix multiply(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix&) const = default;
};

// Exact rank by fraction-free elimination with full pivoting after clearing
// row denominators.
int matrix_rank(const RationalMatrix& mat);

// Matrix rows/columns run through the catalog by DECREASING vertex count, so
// that x(F,J) = 0 for more row vertices than column vertices lands strictly
// above the diagonal and E comes out lower-triangular.
struct CoefficientMatrices {
    int l = 0;
    int k = 0;
    Catalog catalog;
    std::vector<int> row_order;  // matrix position -> catalog index
    std::vector<int> col_order;  // matrix position -> catalog index (connected only)
    RationalMatrix E;            // x(F_col, J_row embedded)
    RationalMatrix P;            // sum of partition weights with F_pi isomorphic to the row
    RationalMatrix K;            // E * P
    RationalMatrix K_direct;     // kappa(F_col, J_row) entrywise
};

CoefficientMatrices build_matrices(int l, int k, const Budgets& budgets = default_budgets());

struct RankReport {
    int l = 0;
    int k = 0;
    int rank_e = 0;
    int rank_p = 0;
    int rank_k = 0;
    bool e_lower_triangular = false;
    bool e_diagonal_nonzero = false;
    bool e_invertible = false;
    bool p_restricted_identity = false;
    bool p_full_column_rank = false;
    bool k_full_column_rank = false;
    bool k_matches_direct = false;
    bool disconnected_kappa_vanish = false;

    struct Sample {
        std::string name;
        bool u_equals_kw = false;
    };
    std::vector<Sample> samples;

    bool all_passed() const;
};

RankReport verify_rank(const CoefficientMatrices& mats,
                       const std::vector<std::pair<std::string, SimpleGraph>>& sample_graphs,
                       const Budgets& budgets = default_budgets());

std::string serialize_catalog(const Catalog& catalog);
std::string serialize_matrices(const CoefficientMatrices& mats);
std::string serialize_rank_report(const RankReport& report);

}  // namespace graphlim

#endif
