/*
 * tenscol - population-based gradient-descent weight learning for graph
 * coloring (GCP) and equitable coloring (ECP).
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through this API; every fallible call returns a tc_status and
 * can fill a caller-provided error buffer with a human-readable message.
 */
#ifndef TENSCOL_H
#define TENSCOL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef TC_API
#define TC_API __attribute__((visibility("default")))
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_PARSE = 1,    /* malformed DIMACS / solution input */
    TC_ERR_INVALID = 2,  /* bad argument or configuration */
    TC_ERR_IO = 3,       /* file not readable/writable */
    TC_ERR_NUMERIC = 4,  /* non-finite values in a numeric kernel */
    TC_ERR_TOO_LARGE = 5,/* instance exceeds a configured limit */
    TC_ERR_INTERNAL = 6
} tc_status;

typedef enum tc_mode { TC_MODE_GCP = 0, TC_MODE_ECP = 1 } tc_mode;
typedef enum tc_precision { TC_PRECISION_F32 = 0, TC_PRECISION_F64 = 1 } tc_precision;
typedef enum tc_solve_status { TC_SOLVED = 0, TC_BUDGET_EXHAUSTED = 1 } tc_solve_status;

typedef struct tc_graph tc_graph;
typedef struct tc_outcome tc_outcome;
typedef struct tc_sweep tc_sweep;

TC_API const char* tc_version(void);
/* Identifier of the seeded random stream used for weight initialization. */
TC_API const char* tc_prng_name(void);

/* ---- graphs ---------------------------------------------------------- */

/* Parse a DIMACS .col file / in-memory text. Non-fatal oddities (unknown
 * line types, edge-count mismatches, duplicate edges) are kept as warnings
 * on the handle; fatal problems return TC_ERR_PARSE with the line number in
 * the error message. */
TC_API tc_status tc_graph_parse_file(const char* path, tc_graph** out,
                                     char* errbuf, size_t errlen);
TC_API tc_status tc_graph_parse_text(const char* text, const char* name, tc_graph** out,
                                     char* errbuf, size_t errlen);
TC_API void tc_graph_free(tc_graph* g);

TC_API int tc_graph_vertex_count(const tc_graph* g);
TC_API long long tc_graph_edge_count(const tc_graph* g);
TC_API double tc_graph_density(const tc_graph* g);
TC_API const char* tc_graph_name(const tc_graph* g);
TC_API int tc_graph_warning_count(const tc_graph* g);
TC_API const char* tc_graph_warning(const tc_graph* g, int idx);
TC_API tc_status tc_graph_write_file(const tc_graph* g, const char* path,
                                     char* errbuf, size_t errlen);

/* Deterministic instance generators (benchmark families). */
TC_API tc_status tc_graph_mycielski(int level, tc_graph** out, char* errbuf, size_t errlen);
TC_API tc_status tc_graph_gnp(int n, double p, uint64_t seed, tc_graph** out,
                              char* errbuf, size_t errlen);
TC_API tc_status tc_graph_geometric(int n, double radius, uint64_t seed, tc_graph** out,
                                    char* errbuf, size_t errlen);

/* ---- validation and bounds ------------------------------------------- */

typedef struct tc_validation {
    long long conflicts;        /* monochromatic edges */
    long long equity_violation; /* group-size surplus/deficit; ECP mode only */
    int legal;
} tc_validation;

/* `assignment` holds n 0-based colors in [0,k). */
TC_API tc_status tc_validate(const tc_graph* g, const int* assignment, int n, int k,
                             tc_mode mode, tc_validation* out, char* errbuf, size_t errlen);

/* DSATUR greedy coloring; writes the color count to *k_out and, when
 * `assignment` is non-NULL, n colors into it. */
TC_API tc_status tc_greedy_coloring(const tc_graph* g, uint64_t seed, int* k_out,
                                    int* assignment, char* errbuf, size_t errlen);

/* Exhaustive oracle for small graphs (refuses n > max_n; pass 0 for the
 * default limit of 12). `witness` (length n) and `explored_nodes` may be
 * NULL. */
TC_API tc_status tc_exact_chromatic(const tc_graph* g, tc_mode mode, int max_n,
                                    int* chi_out, int* witness, long long* explored_nodes,
                                    char* errbuf, size_t errlen);

/* ---- solver ----------------------------------------------------------- */

typedef struct tc_config {
    int k;
    tc_mode mode;
    int population;        /* D */
    double sigma0;         /* stddev of the initial weights */
    double eta;            /* learning rate */
    int nb_iter;           /* smoothing period */
    double rho;            /* smoothing divisor >= 1 (1 = no smoothing) */
    double alpha;          /* penalization exponent > 1 */
    double beta;           /* bonus exponent > 1 */
    double lambda;         /* penalization weight */
    double mu;             /* bonus weight */
    double nu;             /* equity weight (ECP) */
    long long max_iter;
    uint64_t seed;
    long long trace_stride;
    int deterministic;     /* zero wall-time fields for byte-identical traces */
    double time_limit_s;   /* 0 = no wall-clock stop */
    tc_precision precision;
    size_t memory_budget_bytes; /* sizing guard; 0 = default */
} tc_config;

/* Baseline parameter set for the given mode (population 200, sigma0 0.01,
 * eta 0.001, nb_iter 5, rho 10, alpha 2.5, beta 1.2, lambda 1e-5; GCP:
 * mu 1e-6, nu 0; ECP: mu 0, nu 1e-5; max_iter 2e6). k must be set by the
 * caller. */
TC_API void tc_config_defaults(tc_mode mode, tc_config* cfg);

TC_API tc_status tc_solve(const tc_graph* g, const tc_config* cfg, tc_outcome** out,
                          char* errbuf, size_t errlen);
TC_API void tc_outcome_free(tc_outcome* o);

TC_API tc_solve_status tc_outcome_status(const tc_outcome* o);
TC_API long long tc_outcome_best_fitness(const tc_outcome* o);
TC_API long long tc_outcome_iterations(const tc_outcome* o);
TC_API double tc_outcome_seconds(const tc_outcome* o);
TC_API int tc_outcome_k(const tc_outcome* o);
/* Copies the best coloring (n 0-based colors); returns n, or the required
 * length when buf is NULL/too short. */
TC_API int tc_outcome_coloring(const tc_outcome* o, int* buf, int buflen);

typedef struct tc_trace_record {
    long long iter;
    long long best_fcolor;
    long long best_feq;
    long long best_total;
    double wall_s;
} tc_trace_record;

TC_API long long tc_outcome_trace_size(const tc_outcome* o);
TC_API tc_status tc_outcome_trace_get(const tc_outcome* o, long long idx, tc_trace_record* rec,
                                      char* errbuf, size_t errlen);

/* ---- decreasing-k sweep ----------------------------------------------- */

typedef struct tc_sweep_entry {
    int k;
    int successes;
    int runs;
    double mean_iters_success;
    double mean_seconds_success;
} tc_sweep_entry;

/* Runs every seed at each k, starting from the DSATUR bound (k_start <= 0)
 * or from k_start, decrementing while at least one seed solves. */
TC_API tc_status tc_k_sweep(const tc_graph* g, const tc_config* base, const uint64_t* seeds,
                            int nseeds, int k_start, tc_sweep** out,
                            char* errbuf, size_t errlen);
TC_API void tc_sweep_free(tc_sweep* s);
TC_API int tc_sweep_best_k(const tc_sweep* s);
TC_API int tc_sweep_greedy_k(const tc_sweep* s);
TC_API int tc_sweep_entry_count(const tc_sweep* s);
TC_API tc_status tc_sweep_entry_get(const tc_sweep* s, int idx, tc_sweep_entry* e,
                                    char* errbuf, size_t errlen);
TC_API int tc_sweep_coloring(const tc_sweep* s, int* buf, int buflen);
TC_API int tc_sweep_coloring_k(const tc_sweep* s);

/* ---- solution files ---------------------------------------------------- */

/* Writes `c` header lines (instance, mode, k, conflicts, equity) followed by
 * 1-based `v <vertex> <color>` lines. Conflict/equity counts are recomputed
 * from the graph before writing. */
TC_API tc_status tc_solution_write(const char* path, const tc_graph* g, const int* assignment,
                                   int n, int k, tc_mode mode, char* errbuf, size_t errlen);
/* Reads a solution file. Call with assignment == NULL to query n first. mode
 * is returned as a tc_mode value. */
TC_API tc_status tc_solution_read(const char* path, int* n_out, int* k_out, int* mode_out,
                                  int* assignment, char* errbuf, size_t errlen);

#ifdef __cplusplus
}
#endif

#endif /* TENSCOL_H */
