/* C interface to the jpm library: signed Johnson-type distance graphs,
 * exact independence numbers, constructions and reproduction checks.
 *
 * Every function returning jpm_status sets a thread-local message readable
 * through jpm_last_error() on failure. Strings returned through char** are
 * owned by the caller and released with jpm_string_free(). Handles are
 * released with their matching *_free function; all free functions accept
 * NULL. */
#ifndef JPM_H
#define JPM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define JPM_API __declspec(dllexport)
#else
#define JPM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jpm_status {
    JPM_OK = 0,
    JPM_ERR_INVALID_SPEC,
    JPM_ERR_TOO_LARGE,
    JPM_ERR_DIMENSION_MISMATCH,
    JPM_ERR_UNKNOWN_VERTEX,
    JPM_ERR_BAD_SUPPORT,
    JPM_ERR_INVALID_PARAMS,
    JPM_ERR_WITNESS_NOT_INDEPENDENT,
    JPM_ERR_NOT_PRIME,
    JPM_ERR_P_TOO_SMALL,
    JPM_ERR_NO_PRIME_IN_WINDOW,
    JPM_ERR_MAP_NOT_INJECTIVE,
    JPM_ERR_BAD_PLACES,
    JPM_ERR_OVERFLOW,
    JPM_ERR_PARSE,
    JPM_ERR_IO,
    /* A checked vertex set contains an adjacent pair. */
    JPM_ERR_NOT_INDEPENDENT,
    /* The search stopped early; the result holds the best set found. */
    JPM_ERR_BUDGET_EXCEEDED,
    JPM_ERR_NULL_ARGUMENT,
    JPM_ERR_INTERNAL
} jpm_status;

typedef enum jpm_family {
    JPM_FAMILY_JPM = 0,
    JPM_FAMILY_J,
    JPM_FAMILY_KPM,
    JPM_FAMILY_JKL,
    JPM_FAMILY_JPARITY,
    JPM_FAMILY_JPMPARITY
} jpm_family;

typedef enum jpm_parity { JPM_PARITY_EVEN = 0, JPM_PARITY_ODD } jpm_parity;

typedef enum jpm_graph_format { JPM_FORMAT_DIMACS = 0, JPM_FORMAT_JSON } jpm_graph_format;

/* For JKL, k counts +1 entries, l counts -1 entries and t is the edge
 * product. Parity kinds ignore t. */
typedef struct jpm_spec {
    jpm_family kind;
    int n;
    int k;
    int t;
    int l;
    jpm_parity parity;
} jpm_spec;

typedef struct jpm_budget {
    uint64_t time_limit_ms;
    uint64_t node_limit;
    uint32_t threads;
} jpm_budget;

typedef struct jpm_graph jpm_graph;
typedef struct jpm_certificate jpm_certificate;

JPM_API const char* jpm_last_error(void);
JPM_API const char* jpm_status_name(jpm_status status);
JPM_API void jpm_string_free(char* text);

/* One hour, 10^9 nodes, one thread. */
JPM_API void jpm_budget_init(jpm_budget* budget);
JPM_API jpm_status jpm_family_from_name(const char* name, jpm_family* out);
JPM_API jpm_status jpm_spec_validate(const jpm_spec* spec);
JPM_API jpm_status jpm_spec_vertex_count(const jpm_spec* spec, uint64_t* out);

/* vertex_cap = 0 selects the default cap of 200000 vertices. */
JPM_API jpm_status jpm_graph_build(const jpm_spec* spec, uint64_t vertex_cap, jpm_graph** out);
JPM_API jpm_status jpm_graph_read(const char* path, jpm_graph_format format, jpm_graph** out);
/* path "-" writes to standard output. */
JPM_API jpm_status jpm_graph_write(const jpm_graph* graph, const char* path, jpm_graph_format format);
JPM_API size_t jpm_graph_order(const jpm_graph* graph);
JPM_API size_t jpm_graph_edge_count(const jpm_graph* graph);
JPM_API jpm_status jpm_graph_vertex_label(const jpm_graph* graph, size_t index, char** out);
/* Induced subgraph on vertices supported on the seven lines of a Fano
 * plane placed on `places` (seven distinct places). */
JPM_API jpm_status jpm_graph_fano_subgraph(const jpm_graph* graph, const int* places, jpm_graph** out);
JPM_API void jpm_graph_free(jpm_graph* graph);

/* Returns JPM_ERR_BUDGET_EXCEEDED (with *out set) when the search stopped
 * before proving optimality. */
JPM_API jpm_status jpm_solve_exact(const jpm_graph* graph, const jpm_budget* budget, jpm_certificate** out);
JPM_API jpm_status jpm_greedy_lower_bound(const jpm_graph* graph, uint64_t seed, jpm_certificate** out);
JPM_API size_t jpm_certificate_alpha(const jpm_certificate* cert);
JPM_API int jpm_certificate_verified(const jpm_certificate* cert);
JPM_API int jpm_certificate_optimal(const jpm_certificate* cert);
JPM_API jpm_status jpm_certificate_json(const jpm_certificate* cert, char** out);
JPM_API void jpm_certificate_free(jpm_certificate* cert);

/* Rebuilds the certificate's graph and checks its witness. JPM_OK when
 * independent; JPM_ERR_NOT_INDEPENDENT with the first adjacent pair stored
 * in *first / *second (either may be NULL). */
JPM_API jpm_status jpm_verify_certificate(const char* json_text, char** first, char** second);

typedef enum jpm_kleitman_variant {
    JPM_KLEITMAN_AUTO = 0,
    JPM_KLEITMAN_PER_SUPPORT,
    JPM_KLEITMAN_WITH_JKL_BLOCK
} jpm_kleitman_variant;

typedef struct jpm_construct_params {
    int n;
    int k;
    int t;
    /* Supports as "1,2,3;4,5,6" or NULL to let the solver find them. */
    const char* supports;
    /* Target graph for full-sign-lift. */
    jpm_spec lift_spec;
    jpm_kleitman_variant variant;
} jpm_construct_params;

/* name: tail-signs, kleitman, double-sign, full-sign-lift, pair-blocks.
 * Writes the report JSON; returns JPM_ERR_NOT_INDEPENDENT when the family
 * failed verification (report still written). */
JPM_API jpm_status jpm_construct(const char* name, const jpm_construct_params* params,
                                 const jpm_budget* budget, char** report_json);

JPM_API jpm_status jpm_kleitman_S(int n, int diameter, uint64_t* out);
JPM_API jpm_status jpm_nagy_alpha(int n, uint64_t* out);
JPM_API jpm_status jpm_katona_upper_bound(uint64_t vG, uint64_t vH, uint64_t alphaH, uint64_t* out);
/* JSON object {value, source, validity, n_min, n_max, note} or "null". */
JPM_API jpm_status jpm_predicted_alpha(const jpm_spec* spec, char** json);
/* JSON {rows: [{n, alpha, vertices, num, den}], complete, non_increasing}. */
JPM_API jpm_status jpm_ratio_sequence(int k, int t, int n_from, int n_to, const jpm_budget* budget,
                                      char** json);

/* Hypergraph JSON {p, k, b, edges} extended with b_simple and codegree. */
JPM_API jpm_status jpm_rs_hypergraph(uint32_t p, int k, int b, char** json);
JPM_API jpm_status jpm_choose_prime(int n, int k, uint32_t* p, int* exceeds_power_of_two);

typedef enum jpm_row_status { JPM_ROW_PASS = 0, JPM_ROW_FAIL, JPM_ROW_SKIPPED } jpm_row_status;

typedef struct jpm_check_result {
    jpm_row_status status;
    uint64_t expected;
    uint64_t computed;
    uint64_t millis;
    char label[96];
    char group[32];
    char reason[160];
} jpm_check_result;

JPM_API size_t jpm_repro_count(void);
/* Static strings; valid for the lifetime of the library. */
JPM_API jpm_status jpm_repro_describe(size_t index, const char** label, const char** group);
JPM_API jpm_status jpm_repro_run(size_t index, const jpm_budget* budget, jpm_check_result* out);

#ifdef __cplusplus
}
#endif

#endif /* JPM_H */
