/* C interface to the oriented hypergraph matrix library.
 *
 * Every object crosses the boundary as an opaque handle owned by the caller
 * and released with the matching *_free function. Functions return an
 * ohg_status; on failure ohg_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap-allocated and must
 * be released with ohg_string_free. */
#ifndef OHG_H
#define OHG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(OHG_BUILDING_LIBRARY)
#    define OHG_API __declspec(dllexport)
#  else
#    define OHG_API __declspec(dllimport)
#  endif
#else
#  define OHG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ohg_status {
  OHG_OK = 0,
  OHG_ERR_NULL_ARGUMENT = 1,
  OHG_ERR_PARSE = 2,           /* malformed document */
  OHG_ERR_INVALID = 3,         /* document violates hypergraph invariants */
  OHG_ERR_DOMAIN = 4,          /* switching function does not match V */
  OHG_ERR_ARGUMENT = 5,        /* unknown label, parity mismatch, bad option */
  OHG_ERR_RESOURCE = 6,        /* enumeration ceiling exceeded */
  OHG_ERR_NOT_TWO_UNIFORM = 7,
  OHG_ERR_UNSUPPORTED = 8,     /* e.g. line graph of a non-simple graph */
  OHG_ERR_OVERFLOW = 9,
  OHG_ERR_STRUCTURE = 10,
  OHG_ERR_INTERNAL = 99
} ohg_status;

typedef struct ohg_hypergraph ohg_hypergraph;
typedef struct ohg_matrix ohg_matrix;
typedef struct ohg_report ohg_report;

typedef enum ohg_matrix_kind {
  OHG_MATRIX_INCIDENCE = 0,
  OHG_MATRIX_ADJACENCY = 1,
  OHG_MATRIX_DEGREE = 2,
  OHG_MATRIX_LAPLACIAN = 3,
  OHG_MATRIX_DUAL_LAPLACIAN = 4
} ohg_matrix_kind;

typedef enum ohg_anchor_set { OHG_ANCHORS_VERTICES = 0, OHG_ANCHORS_EDGES = 1 } ohg_anchor_set;

typedef enum ohg_format { OHG_FORMAT_CSV = 0, OHG_FORMAT_JSON = 1, OHG_FORMAT_TEXT = 2 } ohg_format;

typedef struct ohg_walk_counts {
  uint64_t total;
  uint64_t positive;
  uint64_t negative;
  int64_t signed_net;
} ohg_walk_counts;

typedef struct ohg_limits {
  size_t max_incidences; /* default 12 */
  uint64_t max_walks;    /* default 1000000 */
} ohg_limits;

typedef struct ohg_random_options {
  uint64_t seed;
  size_t n_vertices;
  size_t n_edges;
  size_t max_edge_size;
  int simple;              /* nonzero: at most one incidence per (v, e) */
  double non_simple_rate;  /* used when simple == 0 */
  size_t uniform_edge_size; /* 0 = sizes drawn from [1, max_edge_size] */
  int distinct_edge_sets;
} ohg_random_options;

typedef struct ohg_verify_options {
  uint64_t seed;
  size_t trials;
  size_t max_walk_incidences;
  size_t max_vertices;
  size_t max_edges;
  size_t max_edge_size;
  size_t switchings;
  double non_simple_fraction;
  int self_test;
  unsigned threads;
  ohg_limits limits;
} ohg_verify_options;

OHG_API const char* ohg_version(void);
OHG_API const char* ohg_last_error(void);
OHG_API void ohg_string_free(char* s);

OHG_API void ohg_limits_default(ohg_limits* out);
OHG_API void ohg_random_options_default(ohg_random_options* out);
OHG_API void ohg_verify_options_default(ohg_verify_options* out);

/* Hypergraphs */
OHG_API ohg_status ohg_hypergraph_parse(const char* text, ohg_hypergraph** out);
/* Parses without enforcing invariants and reports violations as a JSON array
 * in *report_json; *is_valid is set to 1 when the array is empty. */
OHG_API ohg_status ohg_validate_text(const char* text, int* is_valid, char** report_json);
OHG_API ohg_status ohg_hypergraph_serialize(const ohg_hypergraph* g, char** out);
OHG_API void ohg_hypergraph_free(ohg_hypergraph* g);
OHG_API ohg_status ohg_hypergraph_clone(const ohg_hypergraph* g, ohg_hypergraph** out);
OHG_API int ohg_hypergraph_equal(const ohg_hypergraph* a, const ohg_hypergraph* b);

OHG_API size_t ohg_hypergraph_vertex_count(const ohg_hypergraph* g);
OHG_API size_t ohg_hypergraph_edge_count(const ohg_hypergraph* g);
OHG_API size_t ohg_hypergraph_incidence_count(const ohg_hypergraph* g);
OHG_API ohg_status ohg_hypergraph_degree(const ohg_hypergraph* g, const char* vertex, size_t* out);
OHG_API ohg_status ohg_hypergraph_is_simple(const ohg_hypergraph* g, int* out);
OHG_API ohg_status ohg_hypergraph_is_k_uniform(const ohg_hypergraph* g, size_t k, int* out);
OHG_API ohg_status ohg_hypergraph_is_k_regular(const ohg_hypergraph* g, size_t k, int* out);

OHG_API ohg_status ohg_hypergraph_dual(const ohg_hypergraph* g, ohg_hypergraph** out);
/* theta_json: object mapping each vertex label to +1 or -1. */
OHG_API ohg_status ohg_hypergraph_switch(const ohg_hypergraph* g, const char* theta_json,
                                         ohg_hypergraph** out);
OHG_API ohg_status ohg_hypergraph_random(const ohg_random_options* options, ohg_hypergraph** out);

/* Matrices */
OHG_API ohg_status ohg_matrix_build(const ohg_hypergraph* g, ohg_matrix_kind kind, ohg_matrix** out);
OHG_API ohg_status ohg_switching_matrix(const ohg_hypergraph* g, const char* theta_json,
                                        ohg_matrix** out);
/* X (weak == 0) or W (weak != 0) over n incidences, i.e. length n/2. */
OHG_API ohg_status ohg_walk_matrix(const ohg_hypergraph* g, ohg_anchor_set rows,
                                   ohg_anchor_set cols, size_t n, int weak,
                                   const ohg_limits* limits, ohg_matrix** out);
OHG_API void ohg_matrix_free(ohg_matrix* m);
OHG_API size_t ohg_matrix_rows(const ohg_matrix* m);
OHG_API size_t ohg_matrix_cols(const ohg_matrix* m);
OHG_API ohg_status ohg_matrix_entry(const ohg_matrix* m, size_t row, size_t col, int64_t* out);
/* Borrowed pointer, valid while m lives. NULL when out of range. */
OHG_API const char* ohg_matrix_row_label(const ohg_matrix* m, size_t row);
OHG_API const char* ohg_matrix_col_label(const ohg_matrix* m, size_t col);
OHG_API int ohg_matrix_equal(const ohg_matrix* a, const ohg_matrix* b);
OHG_API ohg_status ohg_matrix_serialize(const ohg_matrix* m, ohg_format format, char** out);
OHG_API ohg_status ohg_matrix_parse(const char* text, ohg_format format, ohg_matrix** out);

/* Walks */
OHG_API ohg_status ohg_walk_counts_get(const ohg_hypergraph* g, const char* from, const char* to,
                                       size_t n, int weak, const ohg_limits* limits,
                                       ohg_walk_counts* out);
/* JSON array of {"anchors": [...], "incidences": [{"v","e","k","sign"}...], "sign"}. */
OHG_API ohg_status ohg_walks_list(const ohg_hypergraph* g, const char* from, const char* to,
                                  size_t n, int weak, const ohg_limits* limits, char** out);
OHG_API ohg_status ohg_backstep_count(const ohg_hypergraph* g, const char* vertex, uint64_t* out);

/* Signed graphs: g must be 2-uniform; the line graph comes back in its
 * 2-uniform hypergraph form. */
OHG_API ohg_status ohg_line_graph(const ohg_hypergraph* g, ohg_hypergraph** out);
/* JSON array of failed identities; "[]" when H·Hᵀ = D − A = L and
 * Hᵀ·H = 2I − A_Λ both hold. */
OHG_API ohg_status ohg_signed_graph_identities(const ohg_hypergraph* g, char** out);

/* Verification. instance may be NULL to run the seeded random family. */
OHG_API ohg_status ohg_verify(const ohg_hypergraph* instance, const ohg_verify_options* options,
                              ohg_report** out);
OHG_API void ohg_report_free(ohg_report* r);
OHG_API int ohg_report_all_passed(const ohg_report* r);
OHG_API int ohg_report_incomplete(const ohg_report* r);
OHG_API size_t ohg_report_failure_count(const ohg_report* r);
OHG_API ohg_status ohg_report_serialize(const ohg_report* r, ohg_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* OHG_H */
