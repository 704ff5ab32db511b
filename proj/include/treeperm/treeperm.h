/*
 * treeperm C API.
 *
 * Ordered trees, their stack-sortable permutation codes, the edit operations
 * on those codes, tree edit distance, and exact enumeration series.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a tp_status; on
 * failure the out-parameters are left untouched and tp_last_error() gives a
 * message for the calling thread. Strings returned through char** are
 * NUL-terminated and owned by the caller (release with tp_string_free).
 * Positions are 1-based throughout.
 */
#ifndef TREEPERM_H
#define TREEPERM_H

#include <stddef.h>

#if defined(TREEPERM_BUILDING_LIBRARY)
#define TREEPERM_API __attribute__((visibility("default")))
#else
#define TREEPERM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tp_status {
  TP_OK = 0,
  TP_ERR_INVALID_ARGUMENT = 1,
  TP_ERR_PARSE = 2,
  TP_ERR_NOT_STACK_SORTABLE = 3,
  TP_ERR_NOT_COMPLETE = 4,
  TP_ERR_OUT_OF_RANGE = 5,
  TP_ERR_SIZE_LIMIT = 6,
  TP_ERR_INTERNAL = 7
} tp_status;

typedef struct tp_perm tp_perm;
typedef struct tp_tree tp_tree;
typedef struct tp_perm_list tp_perm_list;
typedef struct tp_span_list tp_span_list;
typedef struct tp_distance tp_distance;
typedef struct tp_series tp_series;

/* Inclusive range of positions (or of edge numbers for subtrees). */
typedef struct tp_span {
  size_t start;
  size_t end;
} tp_span;

TREEPERM_API const char* tp_version(void);
TREEPERM_API const char* tp_status_name(tp_status status);
TREEPERM_API const char* tp_last_error(void);
TREEPERM_API void tp_string_free(char* s);

/* ---- permutations ------------------------------------------------------ */

/* "1,5,2,4,3,7,6", "1 5 2", or bare digits "1524376"; "" is empty. */
TREEPERM_API tp_status tp_perm_parse(const char* text, tp_perm** out);
TREEPERM_API tp_status tp_perm_from_values(const int* values, size_t n, tp_perm** out);
/* Order-preserving relabelling of distinct values onto 1..n. */
TREEPERM_API tp_status tp_perm_normalize(const int* values, size_t n, tp_perm** out);
TREEPERM_API tp_status tp_perm_clone(const tp_perm* p, tp_perm** out);
TREEPERM_API void tp_perm_free(tp_perm* p);

TREEPERM_API size_t tp_perm_size(const tp_perm* p);
/* NULL for the empty permutation. Valid until p is freed. */
TREEPERM_API const int* tp_perm_values(const tp_perm* p);
TREEPERM_API tp_status tp_perm_to_string(const tp_perm* p, char** out);
TREEPERM_API int tp_perm_equal(const tp_perm* a, const tp_perm* b);

TREEPERM_API int tp_is_stack_sortable(const tp_perm* p);
/* Returns 1 and fills positions i < j < k with p[k] < p[i] < p[j] when the
   permutation contains 231, else 0. */
TREEPERM_API int tp_find_231(const tp_perm* p, size_t positions[3]);

typedef struct tp_stats {
  size_t size;
  size_t lis;
  size_t lds;
  size_t leaves;
  size_t height;
} tp_stats;

/* leaves/height describe the decoded tree; p must be stack-sortable. */
TREEPERM_API tp_status tp_perm_stats(const tp_perm* p, tp_stats* out);

/* Exhaustive searches with size guards (TP_ERR_SIZE_LIMIT). */
TREEPERM_API tp_status tp_pattern_occurs(const tp_perm* needle, const tp_perm* haystack,
                                         int* out);
TREEPERM_API tp_status tp_common_pattern_bruteforce(const tp_perm* a, const tp_perm* b,
                                                    tp_perm** out);

/* ---- trees --------------------------------------------------------------- */

/* Balanced parentheses, one "()" per edge; "" is the root alone. */
TREEPERM_API tp_status tp_tree_parse(const char* text, tp_tree** out);
TREEPERM_API void tp_tree_free(tp_tree* t);
TREEPERM_API tp_status tp_tree_to_string(const tp_tree* t, char** out);
TREEPERM_API size_t tp_tree_edge_count(const tp_tree* t);
TREEPERM_API size_t tp_tree_leaf_count(const tp_tree* t);
TREEPERM_API size_t tp_tree_height(const tp_tree* t);
TREEPERM_API int tp_tree_equal(const tp_tree* a, const tp_tree* b);
/* Subtrees as ranges of edge numbers (edges are numbered in preorder). */
TREEPERM_API tp_status tp_tree_subtrees(const tp_tree* t, tp_span_list** out);

TREEPERM_API tp_status tp_encode(const tp_tree* t, tp_perm** out);
TREEPERM_API tp_status tp_decode(const tp_perm* p, tp_tree** out);

/* ---- factors ------------------------------------------------------------- */

typedef enum tp_factor_filter { TP_FACTORS_COMPACT = 0, TP_FACTORS_COMPLETE = 1 } tp_factor_filter;

typedef enum tp_compact_kind { TP_COMPACT_SUBTREE = 0, TP_COMPACT_INTERNAL_PATH = 1 } tp_compact_kind;

TREEPERM_API tp_status tp_is_compact(const tp_perm* p, tp_span span, int* out);
TREEPERM_API tp_status tp_is_complete(const tp_perm* p, tp_span span, int* out);
/* Ordered by start, then length. */
TREEPERM_API tp_status tp_factors(const tp_perm* p, tp_factor_filter filter, tp_span_list** out);
/* For an internal path, *path receives its edges (consecutive positions). */
TREEPERM_API tp_status tp_classify_compact(const tp_perm* p, tp_span span, tp_compact_kind* kind,
                                           tp_span* path);

TREEPERM_API size_t tp_span_list_size(const tp_span_list* list);
TREEPERM_API tp_status tp_span_list_get(const tp_span_list* list, size_t index, tp_span* out);
TREEPERM_API void tp_span_list_free(tp_span_list* list);

/* ---- edit operations ----------------------------------------------------- */

typedef enum tp_insert_kind {
  TP_INSERT_INNER = 0,
  TP_INSERT_LEFT = 1,
  TP_INSERT_RIGHT = 2
} tp_insert_kind;

/* out[i] = values[i] + (values[i] >= a). */
TREEPERM_API void tp_shift_bar(const int* values, size_t n, int a, int* out);
TREEPERM_API tp_status tp_delete_at(const tp_perm* p, size_t pos, tp_perm** out);
TREEPERM_API tp_status tp_delete_value(const tp_perm* p, int value, tp_perm** out);
TREEPERM_API tp_status tp_insert(const tp_perm* p, tp_insert_kind kind, tp_span factor,
                                 tp_perm** out);
TREEPERM_API tp_status tp_insert_empty(tp_perm** out);
/* Sorted, deduplicated results of one deletion or insertion. */
TREEPERM_API tp_status tp_neighbors(const tp_perm* p, tp_perm_list** out);

TREEPERM_API size_t tp_perm_list_size(const tp_perm_list* list);
/* Borrowed; valid until the list is freed. */
TREEPERM_API const tp_perm* tp_perm_list_get(const tp_perm_list* list, size_t index);
TREEPERM_API void tp_perm_list_free(tp_perm_list* list);

/* ---- distance ------------------------------------------------------------ */

TREEPERM_API tp_status tp_distance_perm(const tp_perm* a, const tp_perm* b, tp_distance** out);
TREEPERM_API tp_status tp_distance_tree(const tp_tree* a, const tp_tree* b, tp_distance** out);
TREEPERM_API size_t tp_distance_value(const tp_distance* d);
/* A largest common pattern; borrowed. */
TREEPERM_API const tp_perm* tp_distance_common(const tp_distance* d);
/* Positions realizing the common pattern in the first (side 0) or second
   (side 1) input; returns the count. */
TREEPERM_API size_t tp_distance_witness(const tp_distance* d, int side, const size_t** positions);
/* One shortest edit sequence: the intermediate permutations, starting with
   the first input and ending with the second. */
TREEPERM_API tp_status tp_distance_script(const tp_perm* a, const tp_perm* b, tp_perm_list** steps,
                                          char** description);
TREEPERM_API void tp_distance_free(tp_distance* d);

/* Breadth-first oracle. *found is 0 when the distance exceeds cap. */
TREEPERM_API tp_status tp_bfs_distance(const tp_perm* a, const tp_perm* b, size_t cap,
                                       size_t* distance, int* found);
/* Whether b occurs as a pattern in a (polynomial). */
TREEPERM_API tp_status tp_pattern_contains(const tp_perm* a, const tp_perm* b, int* out);

/* ---- enumeration --------------------------------------------------------- */

/* Exact integers and rationals come back as decimal text ("p" or "p/q"). */
TREEPERM_API tp_status tp_catalan(size_t n, char** out);
TREEPERM_API tp_status tp_narayana(size_t n, size_t k, char** out);

typedef enum tp_series_kind {
  TP_SERIES_I = 0,
  TP_SERIES_S1 = 1,
  TP_SERIES_S2 = 2,
  TP_SERIES_D = 3,
  TP_SERIES_NARAYANA = 4,
  TP_SERIES_HEIGHTS = 5,
  TP_SERIES_HEIGHTS_CONTINUED_FRACTION = 6
} tp_series_kind;

TREEPERM_API tp_status tp_series_compute(tp_series_kind kind, size_t n, tp_series** out);
TREEPERM_API size_t tp_series_dims(const tp_series* s);
TREEPERM_API size_t tp_series_bound(const tp_series* s, size_t dim);
TREEPERM_API tp_status tp_series_coeff(const tp_series* s, const size_t* exponents, size_t count,
                                       char** out);
TREEPERM_API tp_status tp_series_text(const tp_series* s, char** out);
TREEPERM_API tp_status tp_series_json(const tp_series* s, char** out);
TREEPERM_API void tp_series_free(tp_series* s);

typedef enum tp_avg_target { TP_TARGET_ID = 0, TP_TARGET_CHAIN = 1 } tp_avg_target;

TREEPERM_API tp_status tp_avg_distance(tp_avg_target target, size_t n, char** exact,
                                       double* approx);

typedef struct tp_height_report {
  size_t n;
  double exact;
  double predicted;
  double relative_error;
} tp_height_report;

TREEPERM_API tp_status tp_avg_height_report(size_t n, tp_height_report* out);

typedef struct tp_neighborhood {
  size_t n;
  size_t trees;
  size_t max_deletions;
  size_t max_insertions;
  size_t deletion_bound;
  size_t insertion_bound;
  int bounds_hold;
  double mean_pairwise_distance;
  double n_over_ln_n;
} tp_neighborhood;

/* mean_exact may be NULL. */
TREEPERM_API tp_status tp_neighborhood_report(size_t n, tp_neighborhood* out, char** mean_exact);

/* ---- verification -------------------------------------------------------- */

typedef void (*tp_check_callback)(const char* suite, const char* name, int passed,
                                  const char* detail, void* user);

/* Runs a named suite ("all", "perm", "tree", "codec", "factors", "edit_ops",
   "distance", "enumeration"); *failures receives the failed-check count. */
TREEPERM_API tp_status tp_verify(const char* suite, size_t max_n, tp_check_callback callback,
                                 void* user, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* TREEPERM_H */
