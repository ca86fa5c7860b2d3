/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "etg4/etg4.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_construct_and_query(void) {
  etg4_graph* g = NULL;
  int girth = 0, k = 0;
  EXPECT(etg4_graph_construct("k44", &g) == ETG4_OK);
  EXPECT(etg4_graph_vertex_count(g) == 8);
  EXPECT(etg4_graph_edge_count(g) == 16);
  EXPECT(etg4_graph_girth(g, &girth) == ETG4_OK && girth == 4);
  EXPECT(etg4_graph_frequency(g, &k) == ETG4_OK && k == 9);

  etg4_group* aut = NULL;
  unsigned long long order = 0;
  EXPECT(etg4_automorphism_group(g, &aut) == ETG4_OK);
  EXPECT(etg4_group_order(aut, &order) == ETG4_OK && order == 1152ULL);
  EXPECT(etg4_group_degree(aut) == 8);
  EXPECT(etg4_group_generator_count(aut) > 0);
  int images[8];
  EXPECT(etg4_group_generator(aut, 0, images) == ETG4_OK);
  EXPECT(etg4_group_generator(aut, 1000, images) == ETG4_ERR_PARAMETER);
  etg4_group_free(aut);
  etg4_graph_free(g);
}

static void test_errors(void) {
  etg4_graph* g = NULL;
  EXPECT(etg4_graph_construct("cm2:2", &g) == ETG4_ERR_PARAMETER);
  EXPECT(g == NULL);
  EXPECT(strstr(etg4_last_error(), "cm2") != NULL);
  EXPECT(etg4_graph_parse("n 3\n0 0\n", &g) == ETG4_ERR_PARSE);
  EXPECT(strstr(etg4_last_error(), "line 2") != NULL);
  EXPECT(etg4_graph_read("/nonexistent/etg4.txt", &g) == ETG4_ERR_IO);
  EXPECT(etg4_graph_construct(NULL, &g) == ETG4_ERR_NULL_ARGUMENT);
  EXPECT(etg4_graph_vertex_count(NULL) == -1);
  EXPECT(strcmp(etg4_status_name(ETG4_ERR_NOT_MEMBER), "not_member") == 0);
  int pairs[] = {0, 0};
  EXPECT(etg4_graph_from_edges(2, pairs, 1, &g) == ETG4_ERR_MALFORMED_INPUT);
}

static void test_round_trip(void) {
  etg4_graph* g = NULL;
  etg4_graph* back = NULL;
  char* text = NULL;
  char* c1 = NULL;
  char* c2 = NULL;
  EXPECT(etg4_graph_construct("co-heawood", &g) == ETG4_OK);
  EXPECT(etg4_graph_format(g, &text) == ETG4_OK);
  EXPECT(etg4_graph_parse(text, &back) == ETG4_OK);
  EXPECT(etg4_graph_certificate(g, &c1) == ETG4_OK);
  EXPECT(etg4_graph_certificate(back, &c2) == ETG4_OK);
  EXPECT(strlen(c1) == 64 && strcmp(c1, c2) == 0);

  int edges[56];
  EXPECT(etg4_graph_edges(g, edges) == ETG4_OK);
  etg4_graph* rebuilt = NULL;
  EXPECT(etg4_graph_from_edges(14, edges, 28, &rebuilt) == ETG4_OK);
  int iso = 0;
  int mapping[14];
  EXPECT(etg4_graph_isomorphism(g, rebuilt, &iso, mapping) == ETG4_OK && iso == 1);

  etg4_graph* q4 = NULL;
  EXPECT(etg4_graph_construct("q4", &q4) == ETG4_OK);
  EXPECT(etg4_graph_isomorphism(g, q4, &iso, NULL) == ETG4_OK && iso == 0);

  etg4_string_free(text);
  etg4_string_free(c1);
  etg4_string_free(c2);
  etg4_graph_free(g);
  etg4_graph_free(back);
  etg4_graph_free(rebuilt);
  etg4_graph_free(q4);
}

static void test_reports(void) {
  etg4_graph* g = NULL;
  char* report = NULL;
  EXPECT(etg4_graph_from_lattice("3 2; -2 3", &g) == ETG4_OK);
  EXPECT(etg4_classify(g, 1, &report) == ETG4_OK);
  EXPECT(strstr(report, "\"LatticeQuotient\"") != NULL);
  etg4_string_free(report);
  etg4_graph_free(g);

  EXPECT(etg4_graph_parse("n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n", &g) == ETG4_OK);
  EXPECT(etg4_classify(g, 0, &report) == ETG4_ERR_NOT_MEMBER);
  EXPECT(report != NULL && strstr(report, "not in F") != NULL);
  etg4_string_free(report);
  EXPECT(etg4_analyze(g, 0, &report) == ETG4_OK);
  EXPECT(strstr(report, "not 4-regular") != NULL);
  etg4_string_free(report);
  etg4_graph_free(g);

  int passed = 0;
  EXPECT(etg4_verify(0, &passed, &report) == ETG4_OK && passed == 1);
  etg4_string_free(report);

  int clean = 0, partial = 1;
  EXPECT(etg4_census(9, 0, 1, &clean, &partial, &report) == ETG4_OK);
  EXPECT(clean == 1 && partial == 0);
  etg4_string_free(report);
  EXPECT(etg4_census(30, 0, 1, &clean, &partial, &report) == ETG4_ERR_PARAMETER);
}

static void test_products(void) {
  etg4_graph* k5 = NULL;
  etg4_graph* x = NULL;
  etg4_group* g = NULL;
  int pairs[] = {0, 1, 1, 2, 2, 3, 3, 4, 0, 4, 0, 2, 1, 3, 2, 4, 0, 3, 1, 4};
  EXPECT(etg4_graph_from_edges(5, pairs, 10, &k5) == ETG4_OK);
  EXPECT(etg4_two_times(k5, &x) == ETG4_OK);
  EXPECT(etg4_graph_vertex_count(x) == 20);
  etg4_graph_free(x);
  EXPECT(etg4_group_parse("1 2 3 4 0\n0 2 4 1 3\n", 5, &g) == ETG4_OK);
  EXPECT(etg4_square_product(k5, g, &x) == ETG4_OK);
  EXPECT(etg4_graph_vertex_count(x) == 10);
  char* text = NULL;
  EXPECT(etg4_group_format(g, &text) == ETG4_OK && strcmp(text, "1 2 3 4 0\n0 2 4 1 3\n") == 0);
  etg4_string_free(text);
  etg4_graph_free(x);
  etg4_group_free(g);
  etg4_graph_free(k5);
}

int main(void) {
  test_construct_and_query();
  test_errors();
  test_round_trip();
  test_reports();
  test_products();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
