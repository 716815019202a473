// Command-line front end. Talks to the library exclusively through the C
// interface so it doubles as a smoke test of the shared-library surface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphlim/graphlim.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

// exit 1: bad input / library error; exit 2: a verified invariant failed
struct CliFailure : std::runtime_error {
    int exit_code;
    CliFailure(int code, const std::string& message)
        : std::runtime_error(message), exit_code(code) {}
};

void check(int status) {
    if (status != GLIM_OK) throw CliFailure(1, glim_last_error());
}

// owns a string returned by the library
struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { glim_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? "" : ptr; }
};

struct GraphHandle {
    glim_graph* ptr = nullptr;
    ~GraphHandle() { glim_graph_free(ptr); }
};

struct TargetHandle {
    glim_target* ptr = nullptr;
    ~TargetHandle() { glim_target_free(ptr); }
};

struct LambdaHandle {
    glim_lambda* ptr = nullptr;
    ~LambdaHandle() { glim_lambda_free(ptr); }
};

struct TaylorHandle {
    glim_taylor* ptr = nullptr;
    ~TaylorHandle() { glim_taylor_free(ptr); }
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliFailure(1, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, std::string content) {
    if (!content.empty() && content.back() != '\n') content += '\n';
    if (path.empty() || path == "-") {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CliFailure(1, "cannot write '" + tmp + "'");
        out << content;
        if (!out) throw CliFailure(1, "write failed for '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw CliFailure(1, "cannot move '" + tmp + "' to '" + path + "'");
}

void load_graph(const std::string& path, GraphHandle& handle) {
    check(glim_graph_parse(read_file(path).c_str(), &handle.ptr));
}

// '@path' loads a file, anything else is taken verbatim
std::string inline_or_file(const std::string& text) {
    if (!text.empty() && text.front() == '@') return read_file(text.substr(1));
    return text;
}

struct LambdaSource {
    std::string file;
    std::string random_mode;  // "raw" | "effective"
    double cap = 0.1;
    unsigned long long seed = 1;

    bool configured() const { return !file.empty() || !random_mode.empty(); }

    void resolve_with_k(LambdaHandle& handle, int k) const {
        if (!file.empty() && !random_mode.empty())
            throw CliFailure(1, "give either --lambda or --random-lambda, not both");
        if (!file.empty()) {
            check(glim_lambda_parse(read_file(file).c_str(), &handle.ptr));
        } else if (!random_mode.empty()) {
            check(glim_lambda_random(random_mode.c_str(), k, cap, seed, &handle.ptr));
        } else {
            throw CliFailure(1, "a lambda is required (--lambda or --random-lambda)");
        }
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--lambda", file, "tilt direction JSON file ('-' for stdin)");
        cmd->add_option("--random-lambda", random_mode,
                        "draw a seeded random direction: 'raw' or 'effective'")
            ->check(CLI::IsMember({"raw", "effective"}));
        cmd->add_option("--cap", cap, "norm cap for random directions (default 0.1)");
        cmd->add_option("--seed", seed, "seed for random directions");
    }
};

int run_gen(const std::string& family, int n, int a, int b, int d, unsigned long long seed,
            const std::string& output) {
    GraphHandle graph;
    int first = n;
    int second = 0;
    if (family == "torus") {
        first = a;
        second = b;
    } else if (family == "random_regular") {
        second = d;
    }
    check(glim_graph_family(family.c_str(), first, second, seed, &graph.ptr));
    OwnedString text;
    check(glim_graph_serialize(graph.ptr, &text.ptr));
    write_output(output, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph statistics: homomorphism counts, color cumulants, "
                 "pattern catalogs, Taylor models"};
    app.require_subcommand(1);

    unsigned long long budget = 0;
    app.add_option("--budget", budget,
                   "override enumeration budgets (colorings and tuples)")
        ->envname("GRAPHLIM_BUDGET");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    std::string gen_family;
    int gen_n = 0, gen_a = 3, gen_b = 3, gen_d = 3;
    unsigned long long gen_seed = 1;
    std::string gen_output;
    gen->add_option("--family", gen_family, "cycle | path | complete | torus | random_regular")
        ->required()
        ->check(CLI::IsMember({"cycle", "path", "complete", "torus", "random_regular"}));
    gen->add_option("--n", gen_n, "vertex count (cycle/path/complete/random_regular)");
    gen->add_option("--a", gen_a, "torus rows");
    gen->add_option("--b", gen_b, "torus columns");
    gen->add_option("--d", gen_d, "degree for random_regular");
    gen->add_option("--seed", gen_seed, "seed for random_regular");
    gen->add_option("-o,--output", gen_output, "output path (default stdout)");

    // count
    auto* count = app.add_subcommand("count", "homomorphism counts, densities, profiles");
    std::string count_graph, count_pattern, count_target, count_output;
    int count_profile_l = 0, count_uniform_k = 0, count_balls = 0;
    count->add_option("--graph", count_graph, "host graph edge list")->required();
    count->add_option("--pattern", count_pattern, "pattern graph edge list (hom/inj/ind)");
    count->add_option("--pattern-l", count_profile_l, "ordered edge-tuple profile length");
    count->add_option("--target", count_target, "weighted target JSON (weighted hom and t)");
    count->add_option("--uniform-k", count_uniform_k, "uniform all-ones target on k colors");
    count->add_option("--balls", count_balls, "rooted ball census at this radius");
    count->add_option("-o,--output", count_output, "output path (default stdout)");

    // cgf
    auto* cgf = app.add_subcommand("cgf", "color-statistics cumulant generating function");
    std::string cgf_graph, cgf_output;
    int cgf_k = 0;
    bool cgf_bridge = false;
    LambdaSource cgf_lambda;
    cgf->add_option("--graph", cgf_graph, "graph edge list")->required();
    cgf->add_option("--k", cgf_k, "number of colors")->required();
    cgf_lambda.attach(cgf);
    cgf->add_flag("--bridge", cgf_bridge,
                  "also report |f - (1/v) log t(G,H_lambda)| via the tilted target");
    cgf->add_option("-o,--output", cgf_output, "output path (default stdout)");

    // cumulant
    auto* cumulant = app.add_subcommand("cumulant", "joint cumulants of edge color counts");
    std::string cum_graph, cum_pairs, cum_route = "both", cum_output;
    int cum_k = 0;
    cumulant->add_option("--graph", cum_graph, "graph edge list")->required();
    cumulant->add_option("--k", cum_k, "number of colors")->required();
    cumulant
        ->add_option("--pairs", cum_pairs,
                     "JSON [[i,j],...] of 1-based color pairs, or @file")
        ->required();
    cumulant->add_option("--route", cum_route, "direct | decomposition | both (default both)")
        ->check(CLI::IsMember({"direct", "decomposition", "both"}));
    cumulant->add_option("-o,--output", cum_output, "output path (default stdout)");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "edge-labeled pattern catalogs and matrices");
    int cat_l = 0, cat_k = 0;
    bool cat_matrices = false, cat_verify = false;
    std::string cat_output;
    catalog->add_option("--l", cat_l, "number of labeled edges")->required();
    catalog->add_option("--k", cat_k, "colors for matrix entries (default 2l)");
    catalog->add_flag("--matrices", cat_matrices, "include the E/P/K matrices");
    catalog->add_flag("--verify", cat_verify,
                      "include the rank/triangularity report; exit 2 on violation");
    catalog->add_option("-o,--output", cat_output, "output path (default stdout)");

    // taylor
    auto* taylor = app.add_subcommand("taylor", "Taylor model of the CGF at the origin");
    std::string tay_graph, tay_output;
    int tay_k = 0, tay_order = 0, tay_truncate = -1;
    double tay_tail_z = -1.0;
    LambdaSource tay_lambda;
    taylor->add_option("--graph", tay_graph, "graph edge list")->required();
    taylor->add_option("--k", tay_k, "number of colors")->required();
    taylor->add_option("--order", tay_order, "model order (total degree)")->required();
    tay_lambda.attach(taylor);
    taylor->add_option("--truncate", tay_truncate,
                       "evaluate only terms up to this order (default: full model)");
    taylor->add_option("--tail-z", tay_tail_z,
                       "also report the tail majorant at this effective norm");
    taylor->add_option("-o,--output", tay_output, "output path (default stdout)");

    // diagnose
    auto* diagnose = app.add_subcommand("diagnose", "family sweep: densities, CGF, balls");
    std::string diag_spec, diag_format = "json", diag_output;
    diagnose->add_option("--spec", diag_spec, "sequence spec JSON file ('-' for stdin)")
        ->required();
    diagnose->add_option("--format", diag_format, "json | csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    diagnose->add_option("-o,--output", diag_output, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    std::string ver_tier = "smoke", ver_inject, ver_output;
    verify->add_option("--tier", ver_tier, "smoke | full (default smoke)")
        ->check(CLI::IsMember({"smoke", "full"}));
    verify->add_option("--inject-failure", ver_inject, "force one named check to fail")
        ->group("");  // hidden: test fixture for the failure path
    verify->add_option("-o,--output", ver_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Collapse CLI11's per-error exit codes: anything other than a clean
        // --help / --version exit is an input error.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (budget > 0) {
            const std::string value = std::to_string(budget);
            setenv("GRAPHLIM_BUDGET", value.c_str(), 1);
        }

        if (gen->parsed())
            return run_gen(gen_family, gen_n, gen_a, gen_b, gen_d, gen_seed, gen_output);

        if (count->parsed()) {
            if (count_pattern.empty() && count_profile_l == 0 && count_target.empty() &&
                count_uniform_k == 0 && count_balls == 0)
                throw CliFailure(1,
                                 "nothing to compute: give --pattern, --pattern-l, --target, "
                                 "--uniform-k, or --balls");
            GraphHandle host;
            load_graph(count_graph, host);
            int vertices = 0, edges = 0;
            check(glim_graph_counts(host.ptr, &vertices, &edges));
            ordered_json out;
            out["graph"] = {{"vertices", vertices}, {"edges", edges}};
            if (!count_pattern.empty()) {
                GraphHandle pattern;
                load_graph(count_pattern, pattern);
                OwnedString hom, inj, ind;
                check(glim_hom_count(pattern.ptr, host.ptr, &hom.ptr));
                check(glim_inj_count(pattern.ptr, host.ptr, &inj.ptr));
                check(glim_ind_count(pattern.ptr, host.ptr, &ind.ptr));
                out["hom"] = hom.str();
                out["inj"] = inj.str();
                out["ind"] = ind.str();
            }
            if (count_profile_l > 0) {
                OwnedString profile;
                check(glim_i_profile_json(host.ptr, count_profile_l, &profile.ptr));
                out["profile"] = ordered_json::parse(profile.str());
            }
            if (!count_target.empty() || count_uniform_k > 0) {
                if (!count_target.empty() && count_uniform_k > 0)
                    throw CliFailure(1, "give either --target or --uniform-k, not both");
                TargetHandle target;
                if (!count_target.empty())
                    check(glim_target_parse(read_file(count_target).c_str(), &target.ptr));
                else
                    check(glim_target_uniform(count_uniform_k, &target.ptr));
                OwnedString whom, density;
                check(glim_weighted_hom(host.ptr, target.ptr, &whom.ptr));
                check(glim_t_density_exact(host.ptr, target.ptr, &density.ptr));
                ordered_json section;
                section["weighted_hom"] = whom.str();
                section["t"] = density.str();
                double log_t = 0.0;
                const int status = glim_log_t_density(host.ptr, target.ptr, &log_t);
                if (status == GLIM_OK)
                    section["log_t"] = log_t;
                else if (status == GLIM_ERR_DOMAIN)
                    section["log_t"] = nullptr;  // hard-core zero
                else
                    check(status);
                out["target"] = std::move(section);
            }
            if (count_balls > 0) {
                OwnedString balls;
                check(glim_ball_distribution_json(host.ptr, count_balls, &balls.ptr));
                out["balls"] = ordered_json::parse(balls.str());
            }
            write_output(count_output, out.dump());
            return 0;
        }

        if (cgf->parsed()) {
            GraphHandle graph;
            load_graph(cgf_graph, graph);
            LambdaHandle lambda;
            cgf_lambda.resolve_with_k(lambda, cgf_k);
            double f = 0.0;
            check(glim_cgf_value(graph.ptr, cgf_k, lambda.ptr, &f));
            OwnedString lambda_json;
            check(glim_lambda_serialize(lambda.ptr, &lambda_json.ptr));
            ordered_json out;
            out["k"] = cgf_k;
            out["lambda"] = ordered_json::parse(lambda_json.str());
            out["f"] = f;
            if (cgf_bridge) {
                double gap = 0.0;
                check(glim_cgf_bridge_gap(graph.ptr, cgf_k, lambda.ptr, &gap));
                out["bridge_gap"] = gap;
            }
            write_output(cgf_output, out.dump());
            return 0;
        }

        if (cumulant->parsed()) {
            GraphHandle graph;
            load_graph(cum_graph, graph);
            const std::string pairs = inline_or_file(cum_pairs);
            ordered_json out;
            out["k"] = cum_k;
            out["pairs"] = ordered_json::parse(pairs, nullptr, true);
            bool mismatch = false;
            if (cum_route == "direct" || cum_route == "both") {
                OwnedString value;
                check(glim_kappa(graph.ptr, cum_k, pairs.c_str(), "direct", &value.ptr));
                out["direct"] = value.str();
            }
            if (cum_route == "decomposition" || cum_route == "both") {
                OwnedString value;
                check(glim_kappa(graph.ptr, cum_k, pairs.c_str(), "decomposition", &value.ptr));
                out["decomposition"] = value.str();
            }
            if (cum_route == "both") {
                const bool equal = out["direct"] == out["decomposition"];
                out["equal"] = equal;
                mismatch = !equal;
            }
            write_output(cum_output, out.dump());
            return mismatch ? 2 : 0;
        }

        if (catalog->parsed()) {
            const int k = cat_k > 0 ? cat_k : 2 * cat_l;
            ordered_json out;
            OwnedString cat_json;
            check(glim_catalog_json(cat_l, &cat_json.ptr));
            out["catalog"] = ordered_json::parse(cat_json.str());
            if (cat_matrices) {
                OwnedString matrices;
                check(glim_matrices_json(cat_l, k, &matrices.ptr));
                out["matrices"] = ordered_json::parse(matrices.str());
            }
            int all_passed = 1;
            if (cat_verify) {
                OwnedString report;
                check(glim_rank_report_json(cat_l, k, &report.ptr, &all_passed));
                out["report"] = ordered_json::parse(report.str());
            }
            write_output(cat_output, out.dump());
            return cat_verify && all_passed == 0 ? 2 : 0;
        }

        if (taylor->parsed()) {
            GraphHandle graph;
            load_graph(tay_graph, graph);
            TaylorHandle model;
            check(glim_taylor_build(graph.ptr, tay_k, tay_order, &model.ptr));
            OwnedString model_json;
            check(glim_taylor_json(model.ptr, &model_json.ptr));
            ordered_json out;
            out["model"] = ordered_json::parse(model_json.str());
            if (tay_lambda.configured()) {
                LambdaHandle lambda;
                tay_lambda.resolve_with_k(lambda, tay_k);
                double value = 0.0;
                int inside = 0;
                check(glim_taylor_eval(model.ptr, lambda.ptr, tay_truncate, &value, &inside));
                OwnedString lambda_json;
                check(glim_lambda_serialize(lambda.ptr, &lambda_json.ptr));
                ordered_json eval;
                eval["lambda"] = ordered_json::parse(lambda_json.str());
                eval["truncate"] = tay_truncate;
                eval["value"] = value;
                eval["inside_radius"] = inside == 1;
                out["eval"] = std::move(eval);
            }
            if (tay_tail_z >= 0.0) {
                const int degree_bound = out["model"]["degree_bound"].get<int>();
                double majorant = 0.0;
                check(glim_tail_majorant(degree_bound, tay_order, tay_tail_z, &majorant));
                ordered_json tail;
                tail["z"] = tay_tail_z;
                tail["order"] = tay_order;
                if (std::isfinite(majorant))
                    tail["bound"] = majorant;
                else
                    tail["bound"] = "infinite";
                out["tail_majorant"] = std::move(tail);
            }
            write_output(tay_output, out.dump());
            return 0;
        }

        if (diagnose->parsed()) {
            const std::string spec = read_file(diag_spec);
            OwnedString report;
            check(glim_sequence_report(spec.c_str(), diag_format.c_str(), &report.ptr));
            write_output(diag_output, report.str());
            return 0;
        }

        if (verify->parsed()) {
            OwnedString report;
            int all_passed = 0;
            check(glim_verify(ver_tier.c_str(), ver_inject.empty() ? nullptr : ver_inject.c_str(),
                              &report.ptr, &all_passed));
            write_output(ver_output, report.str());
            return all_passed == 1 ? 0 : 2;
        }

        throw CliFailure(1, "no subcommand selected");
    } catch (const CliFailure& failure) {
        std::fprintf(stderr, "error: %s\n", failure.what());
        return failure.exit_code;
    } catch (const std::exception& failure) {
        std::fprintf(stderr, "error: %s\n", failure.what());
        return 1;
    }
}
