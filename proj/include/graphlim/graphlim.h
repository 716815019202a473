#ifndef GRAPHLIM_GRAPHLIM_H
#define GRAPHLIM_GRAPHLIM_H

/* C interface to the graph-statistics library. Every function returns a
 * status code; outputs travel through out-parameters. Returned strings are
 * heap-allocated and must be released with glim_string_free. Handles are
 * opaque and freed with their matching *_free. On any non-zero status,
 * glim_last_error() describes the failure (thread-local storage, valid until
 * the next library call on the same thread).
 *
 * Numeric conventions: counts are decimal strings (arbitrary precision),
 * exact probabilities and cumulants are "numerator/denominator" strings,
 * colors in JSON documents are 1-based.
 */

#ifdef __cplusplus
extern "C" {
#endif

#define GLIM_OK 0
#define GLIM_ERR_INVALID 1    /* bad argument or violated precondition */
#define GLIM_ERR_PARSE 2      /* malformed input document */
#define GLIM_ERR_BUDGET 3     /* enumeration exceeds the configured budget */
#define GLIM_ERR_DOMAIN 4     /* e.g. log of a vanishing homomorphism sum */
#define GLIM_ERR_GENERATION 5 /* random generation ran out of retries */
#define GLIM_ERR_INTERNAL 6   /* unexpected failure */

typedef struct glim_graph glim_graph;
typedef struct glim_target glim_target;
typedef struct glim_lambda glim_lambda;
typedef struct glim_taylor glim_taylor;

const char* glim_version(void);
const char* glim_last_error(void);
void glim_string_free(char* text);

/* ---- graphs ------------------------------------------------------------ */

/* Edge-list document: first line "n m", then one "u v" line per edge,
 * 0-based vertices, '#' comments allowed. */
int glim_graph_parse(const char* edge_list_text, glim_graph** out);
/* family: "cycle" (a = n), "path" (a = n), "complete" (a = n),
 * "torus" (a x b grid), "random_regular" (a = n, b = d, seeded). */
int glim_graph_family(const char* family, int a, int b, unsigned long long seed,
                      glim_graph** out);
int glim_graph_serialize(const glim_graph* g, char** out_text);
int glim_graph_counts(const glim_graph* g, int* out_vertices, int* out_edges);
void glim_graph_free(glim_graph* g);

/* ---- homomorphism counting --------------------------------------------- */

int glim_hom_count(const glim_graph* pattern, const glim_graph* host, char** out_decimal);
int glim_inj_count(const glim_graph* pattern, const glim_graph* host, char** out_decimal);
int glim_ind_count(const glim_graph* pattern, const glim_graph* host, char** out_decimal);

/* Weighted target: JSON {"k", "vertex_weights", "edge_weights"} with entries
 * as numbers or "p/q" strings; matrix symmetric and nonnegative. */
int glim_target_parse(const char* json_text, glim_target** out);
int glim_target_uniform(int k, glim_target** out);
int glim_target_serialize(const glim_target* target, char** out_json);
void glim_target_free(glim_target* target);

int glim_weighted_hom(const glim_graph* g, const glim_target* target, char** out_ratio);
int glim_t_density_exact(const glim_graph* g, const glim_target* target, char** out_ratio);
int glim_log_t_density(const glim_graph* g, const glim_target* target, double* out_value);

/* Ordered edge-tuple pattern profile: counts i(F,G) per l-edge pattern. */
int glim_i_profile_json(const glim_graph* g, int length, char** out_json);
/* Rooted ball census at the given radius, exact frequencies. */
int glim_ball_distribution_json(const glim_graph* g, int radius, char** out_json);

/* ---- tilt directions and the CGF --------------------------------------- */

/* JSON {"k", "vertex": [k numbers], "edge": [k x k numbers]}. */
int glim_lambda_parse(const char* json_text, glim_lambda** out);
/* mode "raw": every entry uniform in [-cap, cap]; mode "effective": vertex,
 * diagonal, and pair-sum coordinates drawn in the cap box, scaled so the
 * largest magnitude equals cap. Seeded and reproducible. */
int glim_lambda_random(const char* mode, int k, double cap, unsigned long long seed,
                       glim_lambda** out);
int glim_lambda_serialize(const glim_lambda* lambda, char** out_json);
void glim_lambda_free(glim_lambda* lambda);

/* f_{G,k}(lambda) = (1/v) log E exp(<lambda, v X>), exact expectation. */
int glim_cgf_value(const glim_graph* g, int k, const glim_lambda* lambda, double* out_value);
/* |f - (1/v) log t(G, H_lambda)|: the two routes to the same number. */
int glim_cgf_bridge_gap(const glim_graph* g, int k, const glim_lambda* lambda,
                        double* out_gap);

/* ---- joint cumulants ---------------------------------------------------- */

/* pairs_json: [[i,j], ...] with 1-based colors, one entry per labeled edge.
 * route: "direct" (joint cumulant of edge-count coordinates) or
 * "decomposition" (sum of i(F,G) kappa(F,J) over connected patterns). */
int glim_kappa(const glim_graph* g, int k, const char* pairs_json, const char* route,
               char** out_ratio);

/* ---- pattern catalogs and coefficient matrices -------------------------- */

int glim_catalog_json(int length, char** out_json);
int glim_matrices_json(int length, int k, char** out_json);
/* Rank/triangularity report; out_all_passed is 1 when every property holds. */
int glim_rank_report_json(int length, int k, char** out_json, int* out_all_passed);

/* ---- Taylor models ------------------------------------------------------ */

int glim_taylor_build(const glim_graph* g, int k, int order, glim_taylor** out);
int glim_taylor_json(const glim_taylor* model, char** out_json);
/* truncate_order < 0 evaluates the full model. out_inside_radius reports
 * ||lambda||_inf < 1/(4 e D) for the model's degree bound (optional). */
int glim_taylor_eval(const glim_taylor* model, const glim_lambda* lambda, int truncate_order,
                     double* out_value, int* out_inside_radius);
void glim_taylor_free(glim_taylor* model);

int glim_radius(int degree_bound, double* out_value);
/* Upper bound on the dropped Taylor tail at effective norm z; +inf when the
 * geometric term ratio reaches 1. */
int glim_tail_majorant(int degree_bound, int order, double z, double* out_value);

/* ---- family diagnostics and verification -------------------------------- */

/* spec_json: {"family", "n_min", "n_max", "n_step", "k",
 * "max_pattern_length", "lambdas": [...], "ball_radii": [...],
 * "regular_degree", "seed"}; format "json" or "csv". */
int glim_sequence_report(const char* spec_json, const char* format, char** out_text);

/* tier "smoke" or "full"; inject_failure names a check to force-fail (NULL
 * or "" for none). out_all_passed is 1 when every check passed. */
int glim_verify(const char* tier, const char* inject_failure, char** out_json,
                int* out_all_passed);

#ifdef __cplusplus
}
#endif

#endif
