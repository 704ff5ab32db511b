/* Exercises the shared library from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "treeperm/treeperm.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static tp_perm* perm(const char* text) {
  tp_perm* p = NULL;
  if (tp_perm_parse(text, &p) != TP_OK) {
    fprintf(stderr, "cannot parse %s: %s\n", text, tp_last_error());
    exit(1);
  }
  return p;
}

static int perm_is(const tp_perm* p, const char* text) {
  char* s = NULL;
  int same;
  if (tp_perm_to_string(p, &s) != TP_OK) return 0;
  same = strcmp(s, text) == 0;
  tp_string_free(s);
  return same;
}

static void test_codec(void) {
  tp_tree* t = NULL;
  tp_perm* p = NULL;
  tp_tree* back = NULL;
  char* text = NULL;

  EXPECT(tp_tree_parse("()(()(()))(())", &t) == TP_OK);
  EXPECT(tp_tree_edge_count(t) == 7);
  EXPECT(tp_tree_leaf_count(t) == 4);
  EXPECT(tp_tree_height(t) == 3);
  EXPECT(tp_encode(t, &p) == TP_OK);
  EXPECT(perm_is(p, "1524376"));
  EXPECT(tp_decode(p, &back) == TP_OK);
  EXPECT(tp_tree_equal(t, back));
  EXPECT(tp_tree_to_string(back, &text) == TP_OK);
  EXPECT(strcmp(text, "()(()(()))(())") == 0);
  tp_string_free(text);
  tp_tree_free(back);
  tp_perm_free(p);
  tp_tree_free(t);
}

static void test_errors(void) {
  tp_perm* p = NULL;
  tp_perm* bad = perm("231");
  tp_tree* t = NULL;
  size_t pos[3] = {0, 0, 0};

  EXPECT(tp_perm_parse("1,1", &p) == TP_ERR_INVALID_ARGUMENT);
  EXPECT(p == NULL);
  EXPECT(tp_perm_parse("1,x", &p) == TP_ERR_PARSE);
  EXPECT(strstr(tp_last_error(), "offset") != NULL);
  EXPECT(tp_tree_parse("(()", &t) == TP_ERR_PARSE);
  EXPECT(tp_decode(bad, &t) == TP_ERR_NOT_STACK_SORTABLE);
  EXPECT(strstr(tp_last_error(), "231") != NULL);
  EXPECT(!tp_is_stack_sortable(bad));
  EXPECT(tp_find_231(bad, pos) == 1);
  EXPECT(pos[0] == 1 && pos[1] == 2 && pos[2] == 3);
  EXPECT(tp_perm_parse(NULL, &p) == TP_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(tp_status_name(TP_ERR_NOT_COMPLETE), "not a complete factor") == 0);
  tp_perm_free(bad);
}

static void test_factors_and_edits(void) {
  tp_perm* p = perm("1524376");
  tp_span_list* list = NULL;
  tp_span span;
  tp_span f = {4, 5};
  tp_span five = {2, 2};
  tp_compact_kind kind;
  tp_span path = {0, 0};
  tp_perm* q = NULL;
  tp_perm_list* around = NULL;
  int flag = 0;
  int shifted[3];
  const int word[3] = {1, 5, 2};

  EXPECT(tp_factors(p, TP_FACTORS_COMPLETE, &list) == TP_OK);
  EXPECT(tp_span_list_size(list) == 11);
  EXPECT(tp_span_list_get(list, 0, &span) == TP_OK);
  EXPECT(span.start == 1 && span.end == 1);
  EXPECT(tp_span_list_get(list, 11, &span) == TP_ERR_OUT_OF_RANGE);
  tp_span_list_free(list);

  EXPECT(tp_is_complete(p, f, &flag) == TP_OK && flag == 1);
  EXPECT(tp_is_compact(p, five, &flag) == TP_OK && flag == 1);
  EXPECT(tp_is_complete(p, five, &flag) == TP_OK && flag == 0);
  EXPECT(tp_classify_compact(p, five, &kind, &path) == TP_OK);
  EXPECT(kind == TP_COMPACT_INTERNAL_PATH && path.start == 2 && path.end == 2);

  EXPECT(tp_insert(p, TP_INSERT_INNER, f, &q) == TP_OK && perm_is(q, "16254387"));
  tp_perm_free(q);
  EXPECT(tp_insert(p, TP_INSERT_RIGHT, f, &q) == TP_OK && perm_is(q, "16243587"));
  tp_perm_free(q);
  EXPECT(tp_insert(p, TP_INSERT_LEFT, f, &q) == TP_OK && perm_is(q, "16235487"));
  tp_perm_free(q);
  q = NULL;
  EXPECT(tp_insert(p, TP_INSERT_INNER, five, &q) == TP_ERR_NOT_COMPLETE);
  EXPECT(q == NULL);

  EXPECT(tp_delete_value(p, 1, &q) == TP_OK && perm_is(q, "413265"));
  tp_perm_free(q);
  EXPECT(tp_delete_at(p, 9, &q) == TP_ERR_OUT_OF_RANGE);

  tp_shift_bar(word, 3, 5, shifted);
  EXPECT(shifted[0] == 1 && shifted[1] == 6 && shifted[2] == 2);

  EXPECT(tp_neighbors(p, &around) == TP_OK);
  EXPECT(tp_perm_list_size(around) > 7);
  EXPECT(tp_perm_list_get(around, tp_perm_list_size(around)) == NULL);
  tp_perm_list_free(around);
  tp_perm_free(p);
}

static void test_distance(void) {
  tp_perm* a = perm("31264587");
  tp_perm* b = perm("1524376");
  tp_distance* d = NULL;
  tp_perm_list* steps = NULL;
  char* description = NULL;
  const size_t* witness = NULL;
  size_t bfs = 0;
  int found = 0;
  int contains = 0;
  tp_perm* small = perm("142365");

  EXPECT(tp_distance_perm(a, b, &d) == TP_OK);
  EXPECT(tp_distance_value(d) == 3);
  EXPECT(tp_perm_size(tp_distance_common(d)) == 6);
  EXPECT(tp_distance_witness(d, 0, &witness) == 6);
  EXPECT(witness != NULL && witness[0] >= 1);
  tp_distance_free(d);

  EXPECT(tp_bfs_distance(a, b, 8, &bfs, &found) == TP_OK && found && bfs == 3);
  EXPECT(tp_bfs_distance(a, b, 2, &bfs, &found) == TP_OK && !found);

  EXPECT(tp_distance_script(a, b, &steps, &description) == TP_OK);
  EXPECT(tp_perm_list_size(steps) == 4);
  EXPECT(perm_is(tp_perm_list_get(steps, 3), "1524376"));
  EXPECT(strstr(description, "insert") != NULL);
  tp_string_free(description);
  tp_perm_list_free(steps);

  EXPECT(tp_pattern_contains(b, small, &contains) == TP_OK && contains);
  tp_perm_free(small);
  tp_perm_free(a);
  tp_perm_free(b);
}

static void test_series(void) {
  tp_series* s = NULL;
  char* text = NULL;
  size_t exps[2] = {4, 4};
  double approx = 0;
  tp_height_report report;
  tp_neighborhood hood;

  EXPECT(tp_series_compute(TP_SERIES_S2, 4, &s) == TP_OK);
  EXPECT(tp_series_dims(s) == 2);
  EXPECT(tp_series_bound(s, 0) == 4);
  EXPECT(tp_series_coeff(s, exps, 2, &text) == TP_OK && strcmp(text, "7") == 0);
  tp_string_free(text);
  EXPECT(tp_series_text(s, &text) == TP_OK && strstr(text, "5*x^4*y^2") != NULL);
  tp_string_free(text);
  EXPECT(tp_series_json(s, &text) == TP_OK && strstr(text, "\"coeffs\"") != NULL);
  tp_string_free(text);
  tp_series_free(s);

  EXPECT(tp_catalan(10, &text) == TP_OK && strcmp(text, "16796") == 0);
  tp_string_free(text);
  EXPECT(tp_narayana(4, 2, &text) == TP_OK && strcmp(text, "6") == 0);
  tp_string_free(text);
  EXPECT(tp_narayana(4, 9, &text) == TP_ERR_OUT_OF_RANGE);

  EXPECT(tp_avg_distance(TP_TARGET_ID, 7, &text, &approx) == TP_OK && strcmp(text, "6") == 0);
  tp_string_free(text);
  EXPECT(tp_avg_distance(TP_TARGET_CHAIN, 2, &text, NULL) == TP_OK && strcmp(text, "1") == 0);
  tp_string_free(text);

  EXPECT(tp_avg_height_report(50, &report) == TP_OK && report.relative_error < 0.1);
  EXPECT(tp_neighborhood_report(3, &hood, NULL) == TP_OK && hood.trees == 5 && hood.bounds_hold);
  EXPECT(tp_series_compute(TP_SERIES_I, 1000, &s) == TP_ERR_SIZE_LIMIT);
}

static void count_check(const char* suite, const char* name, int passed, const char* detail,
                        void* user) {
  (void)suite;
  (void)name;
  (void)detail;
  if (passed) ++*(int*)user;
}

static void test_verify(void) {
  int passed = 0;
  size_t failed = 99;
  EXPECT(tp_verify("codec", 5, count_check, &passed, &failed) == TP_OK);
  EXPECT(failed == 0 && passed == 2);
  EXPECT(tp_verify("nope", 5, NULL, NULL, &failed) == TP_ERR_INVALID_ARGUMENT);
}

int main(void) {
  test_codec();
  test_errors();
  test_factors_and_edits();
  test_distance();
  test_series();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
