#include "catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "error.hpp"
#include "json.hpp"
#include "partitions.hpp"

namespace graphlim {

using OrderedJson = nlohmann::ordered_json;

int Catalog::index_of(const CanonicalCode& code) const {
    for (int i = 0; i < size(); ++i)
        if (all[i].code == code) return i;
    return -1;
}

namespace {

void check_catalog_length(int l, const Budgets& budgets) {
    if (l < 1 || l > 4) fail(ErrorCode::invalid_argument, "catalog length must be in 1..4");
    if (l > budgets.max_pattern_length)
        fail(ErrorCode::budget_exceeded, "catalog length exceeds the configured maximum");
}

// Every sequence of l labeled edges whose endpoint numbering follows first
// appearance: each edge joins two existing vertices, one existing and the
// next fresh vertex, or the next two fresh vertices. Each isomorphism class
// shows up at least once.
void generate_edges_first(int l, const std::function<void(int, const std::vector<Edge>&)>& sink) {
    std::vector<Edge> edges(l);
    auto recurse = [&](auto&& self, int pos, int vmax) -> void {
        if (pos == l) {
            sink(vmax, edges);
            return;
        }
        for (int a = 0; a < vmax; ++a)
            for (int b = a + 1; b < vmax; ++b) {
                edges[pos] = {a, b};
                self(self, pos + 1, vmax);
            }
        for (int a = 0; a < vmax; ++a) {
            edges[pos] = {a, vmax};
            self(self, pos + 1, vmax + 1);
        }
        edges[pos] = {vmax, vmax + 1};
        self(self, pos + 1, vmax + 2);
    };
    recurse(recurse, 0, 0);
}

// Every sequence of l edges over exactly v vertices, all v covered, for each
// v up to 2l.
void generate_vertex_count_first(int l,
                                 const std::function<void(int, const std::vector<Edge>&)>& sink) {
    for (int v = 2; v <= 2 * l; ++v) {
        std::vector<Edge> pairs;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
        int np = static_cast<int>(pairs.size());
        std::vector<int> pick(l, 0);
        std::vector<Edge> edges(l);
        for (;;) {
            std::vector<char> covered(v, 0);
            for (int p = 0; p < l; ++p) {
                edges[p] = pairs[pick[p]];
                covered[edges[p].first] = covered[edges[p].second] = 1;
            }
            if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; }))
                sink(v, edges);
            int pos = l - 1;
            while (pos >= 0 && pick[pos] == np - 1) pick[pos--] = 0;
            if (pos < 0) break;
            ++pick[pos];
        }
    }
}

}  // namespace

Catalog enumerate_catalog(int l, CatalogStrategy strategy, const Budgets& budgets) {
    check_catalog_length(l, budgets);
    std::map<std::string, EdgeLabeledMultigraph> classes;
    std::map<std::string, int> shape_seen;
    auto sink = [&](int v, const std::vector<Edge>& edges) {
        // first-appearance shape key caches canonicalization across repeats
        std::string shape;
        shape.reserve(2 * edges.size() + 1);
        shape.push_back(static_cast<char>(v));
        for (const auto& [a, b] : edges) {
            shape.push_back(static_cast<char>(a));
            shape.push_back(static_cast<char>(b));
        }
        if (!shape_seen.emplace(shape, 1).second) return;
        EdgeLabeledMultigraph pattern(v, edges);
        CanonicalCode code = canonical_form(pattern);
        if (classes.find(code.bytes) == classes.end())
            classes.emplace(code.bytes, EdgeLabeledMultigraph(v, canonical_edges(pattern)));
    };
    if (strategy == CatalogStrategy::edges_first) generate_edges_first(l, sink);
    else generate_vertex_count_first(l, sink);

    Catalog catalog;
    catalog.l = l;
    for (const auto& [code, pattern] : classes) {
        // canonical code bytes start with the vertex count, so map order is
        // already (vertex count, code) ascending
        CatalogEntry entry{pattern, CanonicalCode{code}, pattern_name(pattern),
                           pattern.connected()};
        catalog.all.push_back(std::move(entry));
    }
    for (int i = 0; i < catalog.size(); ++i)
        if (catalog.all[i].connected) catalog.connected_indices.push_back(i);
    return catalog;
}

ColorPattern embed_pattern(const EdgeLabeledMultigraph& j, int k) {
    int v = j.vertex_count();
    if (k < v)
        fail(ErrorCode::invalid_argument,
             "not enough colors to embed the pattern with distinct colors");
    EdgeLabeledMultigraph canon(v, canonical_edges(j));
    std::vector<int> colors(v);
    std::iota(colors.begin(), colors.end(), 0);
    return make_color_pattern(std::move(canon), std::move(colors), k);
}

RationalMatrix RationalMatrix::zero(int rows_, int cols_) {
    RationalMatrix m;
    m.rows = rows_;
    m.cols = cols_;
    m.a.assign(rows_, std::vector<Rational>(cols_, Rational(0)));
    return m;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& rhs) const {
    if (cols != rhs.rows) fail(ErrorCode::invalid_argument, "matrix shape mismatch");
    RationalMatrix out = zero(rows, rhs.cols);
    for (int i = 0; i < rows; ++i)
        for (int kk = 0; kk < cols; ++kk) {
            if (a[i][kk] == 0) continue;
            for (int j = 0; j < rhs.cols; ++j) out.a[i][j] += a[i][kk] * rhs.a[kk][j];
        }
    return out;
}

int matrix_rank(const RationalMatrix& mat) {
    int rows = mat.rows, cols = mat.cols;
    // clear denominators per row; rank is unchanged
    std::vector<std::vector<BigInt>> b(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        BigInt lcm = 1;
        for (int j = 0; j < cols; ++j) {
            BigInt den = boost::multiprecision::denominator(mat.a[i][j]);
            lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
        }
        for (int j = 0; j < cols; ++j) {
            const Rational& q = mat.a[i][j];
            b[i][j] = boost::multiprecision::numerator(q) *
                      (lcm / boost::multiprecision::denominator(q));
        }
    }
    int rank = 0;
    BigInt prev = 1;
    while (rank < rows && rank < cols) {
        int pr = -1, pc = -1;
        for (int i = rank; i < rows && pr < 0; ++i)
            for (int j = rank; j < cols; ++j)
                if (b[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        std::swap(b[rank], b[pr]);
        if (pc != rank)
            for (int i = 0; i < rows; ++i) std::swap(b[i][rank], b[i][pc]);
        for (int i = rank + 1; i < rows; ++i)
            for (int j = rank + 1; j < cols; ++j)
                b[i][j] = (b[i][j] * b[rank][rank] - b[i][rank] * b[rank][j]) / prev;
        prev = b[rank][rank];
        ++rank;
    }
    return rank;
}

CoefficientMatrices build_matrices(int l, int k, const Budgets& budgets) {
    if (l < 1 || l > 3)
        fail(ErrorCode::invalid_argument, "matrix suite supports l in 1..3");
    if (k < 2 * l) fail(ErrorCode::invalid_argument, "matrix suite needs k >= 2l");

    CoefficientMatrices mats;
    mats.l = l;
    mats.k = k;
    mats.catalog = enumerate_catalog(l, CatalogStrategy::edges_first, budgets);
    const Catalog& cat = mats.catalog;
    int s = cat.size();

    mats.row_order.resize(s);
    std::iota(mats.row_order.begin(), mats.row_order.end(), 0);
    std::reverse(mats.row_order.begin(), mats.row_order.end());
    for (int idx : mats.row_order)
        if (cat.all[idx].connected) mats.col_order.push_back(idx);
    int c = static_cast<int>(mats.col_order.size());

    // per-row embedded color pair sequences
    std::vector<std::vector<std::pair<int, int>>> row_pairs(s);
    for (int r = 0; r < s; ++r)
        row_pairs[r] = embed_pattern(cat.all[mats.row_order[r]].pattern, k).pairs();

    mats.E = RationalMatrix::zero(s, s);
    for (int r = 0; r < s; ++r)
        for (int col = 0; col < s; ++col)
            mats.E.a[r][col] =
                x_value(cat.all[mats.row_order[col]].pattern, row_pairs[r], k, budgets);

    mats.P = RationalMatrix::zero(s, c);
    for (int col = 0; col < c; ++col) {
        const EdgeLabeledMultigraph& f = cat.all[mats.col_order[col]].pattern;
        for (const SetPartition& partition : enumerate_partitions(l)) {
            CanonicalCode code = canonical_form(f_pi(f, partition));
            int idx = cat.index_of(code);
            if (idx < 0) fail(ErrorCode::domain_error, "partition image missing from catalog");
            for (int r = 0; r < s; ++r)
                if (mats.row_order[r] == idx) {
                    mats.P.a[r][col] += Rational(partition_weight(partition.block_count()));
                    break;
                }
        }
    }

    mats.K = mats.E.multiply(mats.P);

    mats.K_direct = RationalMatrix::zero(s, c);
    for (int r = 0; r < s; ++r)
        for (int col = 0; col < c; ++col)
            mats.K_direct.a[r][col] =
                kappa_fj(cat.all[mats.col_order[col]].pattern, row_pairs[r], k, budgets);

    return mats;
}

bool RankReport::all_passed() const {
    bool ok = e_lower_triangular && e_diagonal_nonzero && e_invertible && p_restricted_identity &&
              p_full_column_rank && k_full_column_rank && k_matches_direct &&
              disconnected_kappa_vanish;
    for (const Sample& sample : samples) ok = ok && sample.u_equals_kw;
    return ok;
}

RankReport verify_rank(const CoefficientMatrices& mats,
                       const std::vector<std::pair<std::string, SimpleGraph>>& sample_graphs,
                       const Budgets& budgets) {
    const Catalog& cat = mats.catalog;
    int s = cat.size();
    int c = static_cast<int>(mats.col_order.size());

    RankReport report;
    report.l = mats.l;
    report.k = mats.k;

    report.e_lower_triangular = true;
    for (int r = 0; r < s; ++r)
        for (int col = r + 1; col < s; ++col)
            if (mats.E.a[r][col] != 0) report.e_lower_triangular = false;
    report.e_diagonal_nonzero = true;
    for (int r = 0; r < s; ++r)
        if (mats.E.a[r][r] == 0) report.e_diagonal_nonzero = false;
    report.rank_e = matrix_rank(mats.E);
    report.e_invertible = report.rank_e == s;

    // row position of each catalog index
    std::vector<int> row_pos(s, -1);
    for (int r = 0; r < s; ++r) row_pos[mats.row_order[r]] = r;
    report.p_restricted_identity = true;
    for (int ci = 0; ci < c; ++ci)
        for (int cj = 0; cj < c; ++cj) {
            const Rational& entry = mats.P.a[row_pos[mats.col_order[ci]]][cj];
            if (entry != Rational(ci == cj ? 1 : 0)) report.p_restricted_identity = false;
        }
    report.rank_p = matrix_rank(mats.P);
    report.p_full_column_rank = report.rank_p == c;
    report.rank_k = matrix_rank(mats.K);
    report.k_full_column_rank = report.rank_k == c;
    report.k_matches_direct = mats.K == mats.K_direct;

    // kappa(F, J) vanishes for every disconnected F against every row J
    std::vector<std::vector<std::pair<int, int>>> row_pairs(s);
    for (int r = 0; r < s; ++r)
        row_pairs[r] = embed_pattern(cat.all[mats.row_order[r]].pattern, mats.k).pairs();
    report.disconnected_kappa_vanish = true;
    for (int idx = 0; idx < s; ++idx) {
        if (cat.all[idx].connected) continue;
        for (int r = 0; r < s; ++r)
            if (kappa_fj(cat.all[idx].pattern, row_pairs[r], mats.k, budgets) != 0)
                report.disconnected_kappa_vanish = false;
    }

    for (const auto& [name, graph] : sample_graphs) {
        // w = i(F,G) over connected columns, u = kappa_G(J) over all rows
        std::vector<Rational> w(c, Rational(0));
        for (const PatternCount& entry : i_profile(graph, mats.l, budgets)) {
            int idx = cat.index_of(entry.code);
            if (idx < 0) fail(ErrorCode::domain_error, "profile pattern missing from catalog");
            for (int col = 0; col < c; ++col)
                if (mats.col_order[col] == idx) w[col] = Rational(entry.count);
        }
        bool match = true;
        for (int r = 0; r < s; ++r) {
            Rational kw = 0;
            for (int col = 0; col < c; ++col) kw += mats.K.a[r][col] * w[col];
            Rational u = kappa_gj(graph, row_pairs[r], mats.k, KappaRoute::direct, budgets);
            if (u != kw) match = false;
        }
        report.samples.push_back({name, match});
    }
    return report;
}

std::string serialize_catalog(const Catalog& catalog) {
    OrderedJson doc;
    doc["l"] = catalog.l;
    doc["size"] = catalog.size();
    doc["connected_size"] = catalog.connected_size();
    OrderedJson members = OrderedJson::array();
    for (const CatalogEntry& entry : catalog.all) {
        OrderedJson m;
        m["name"] = entry.name;
        m["code"] = entry.code.hex();
        m["vertices"] = entry.pattern.vertex_count();
        OrderedJson edges = OrderedJson::array();
        for (const auto& [u, v] : entry.pattern.edges()) edges.push_back({u, v});
        m["edges"] = std::move(edges);
        m["connected"] = entry.connected;
        members.push_back(std::move(m));
    }
    doc["members"] = std::move(members);
    return doc.dump();
}

namespace {

OrderedJson matrix_to_json(const RationalMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < m.rows; ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(ratio_str(m.a[i][j]));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string serialize_matrices(const CoefficientMatrices& mats) {
    OrderedJson doc;
    doc["l"] = mats.l;
    doc["k"] = mats.k;
    OrderedJson rows = OrderedJson::array();
    for (int idx : mats.row_order) rows.push_back(mats.catalog.all[idx].name);
    doc["row_order"] = std::move(rows);
    OrderedJson cols = OrderedJson::array();
    for (int idx : mats.col_order) cols.push_back(mats.catalog.all[idx].name);
    doc["col_order"] = std::move(cols);
    doc["E"] = matrix_to_json(mats.E);
    doc["P"] = matrix_to_json(mats.P);
    doc["K"] = matrix_to_json(mats.K);
    return doc.dump();
}

std::string serialize_rank_report(const RankReport& report) {
    OrderedJson doc;
    doc["l"] = report.l;
    doc["k"] = report.k;
    doc["e_lower_triangular"] = report.e_lower_triangular;
    doc["e_diagonal_nonzero"] = report.e_diagonal_nonzero;
    doc["e_invertible"] = report.e_invertible;
    doc["p_restricted_identity"] = report.p_restricted_identity;
    doc["p_full_column_rank"] = report.p_full_column_rank;
    doc["k_full_column_rank"] = report.k_full_column_rank;
    doc["k_matches_direct"] = report.k_matches_direct;
    doc["disconnected_kappa_vanish"] = report.disconnected_kappa_vanish;
    doc["rank_e"] = report.rank_e;
    doc["rank_p"] = report.rank_p;
    doc["rank_k"] = report.rank_k;
    OrderedJson samples = OrderedJson::array();
    for (const auto& sample : report.samples) {
        OrderedJson s;
        s["graph"] = sample.name;
        s["u_equals_kw"] = sample.u_equals_kw;
        samples.push_back(std::move(s));
    }
    doc["samples"] = std::move(samples);
    doc["all_passed"] = report.all_passed();
    return doc.dump();
}

}  // namespace graphlim
