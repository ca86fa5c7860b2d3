/* C interface to the etg4 library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an etg4_status; on failure etg4_last_error() holds a
 * message for the calling thread until its next failing call. Strings
 * returned through char** are heap-allocated and released with
 * etg4_string_free.
 */
#ifndef ETG4_H
#define ETG4_H

#include <stddef.h>

#if defined(ETG4_BUILDING_LIBRARY)
#define ETG4_API __attribute__((visibility("default")))
#else
#define ETG4_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct etg4_graph etg4_graph;
typedef struct etg4_group etg4_group;

typedef enum etg4_status {
  ETG4_OK = 0,
  ETG4_ERR_MALFORMED_INPUT = 1,
  ETG4_ERR_PARSE = 2,
  ETG4_ERR_PARAMETER = 3,
  ETG4_ERR_PRECONDITION = 4,
  ETG4_ERR_CONTRACT = 5,
  ETG4_ERR_EMBEDDING = 6,
  ETG4_ERR_NON_ORIENTABLE = 7,
  ETG4_ERR_NOT_MEMBER = 8,
  ETG4_ERR_CLASSIFICATION_VIOLATION = 9,
  ETG4_ERR_IO = 10,
  ETG4_ERR_NULL_ARGUMENT = 11,
  ETG4_ERR_INTERNAL = 12
} etg4_status;

ETG4_API const char* etg4_status_name(etg4_status status);
ETG4_API const char* etg4_last_error(void);
ETG4_API void etg4_string_free(char* s);

/* Graphs. pairs holds 2*edge_count vertex ids. */
ETG4_API etg4_status etg4_graph_from_edges(int n, const int* pairs, size_t edge_count, etg4_graph** out);
ETG4_API etg4_status etg4_graph_parse(const char* text, etg4_graph** out);
ETG4_API etg4_status etg4_graph_read(const char* path, etg4_graph** out);
ETG4_API etg4_status etg4_graph_write(const etg4_graph* g, const char* path, const char* comment);
ETG4_API etg4_status etg4_graph_format(const etg4_graph* g, char** out);
/* Family grammar: k44, k55-m, co-heawood, q4, cm2:<m>, cinf2-window:<r>,
 * 2x:<file>, square:<file>:<generators-file>, lattice:<row>:<a>:<b>. */
ETG4_API etg4_status etg4_graph_construct(const char* family, etg4_graph** out);
ETG4_API etg4_status etg4_graph_from_lattice(const char* text, etg4_graph** out);
ETG4_API void etg4_graph_free(etg4_graph* g);

ETG4_API int etg4_graph_vertex_count(const etg4_graph* g);
ETG4_API int etg4_graph_edge_count(const etg4_graph* g);
/* Writes 2*edge_count ids. */
ETG4_API etg4_status etg4_graph_edges(const etg4_graph* g, int* pairs_out);
/* -1 for acyclic graphs. */
ETG4_API etg4_status etg4_graph_girth(const etg4_graph* g, int* girth);
/* Common number of 4-cycles per edge, or -1 when not uniform. */
ETG4_API etg4_status etg4_graph_frequency(const etg4_graph* g, int* k);

/* Hex SHA-256 of the canonical edge list. */
ETG4_API etg4_status etg4_graph_certificate(const etg4_graph* g, char** hex);
/* mapping_out (n entries) receives a with b == a relabeled when *isomorphic. */
ETG4_API etg4_status etg4_graph_isomorphism(const etg4_graph* a, const etg4_graph* b, int* isomorphic,
                                            int* mapping_out);

ETG4_API etg4_status etg4_two_times(const etg4_graph* base, etg4_graph** out);
ETG4_API etg4_status etg4_square_product(const etg4_graph* base, const etg4_group* group, etg4_graph** out);

/* Reports; json != 0 selects the JSON form. */
ETG4_API etg4_status etg4_analyze(const etg4_graph* g, int json, char** report);
/* ETG4_ERR_NOT_MEMBER and ETG4_ERR_CLASSIFICATION_VIOLATION still fill the report. */
ETG4_API etg4_status etg4_classify(const etg4_graph* g, int json, char** report);
ETG4_API etg4_status etg4_verify(int json, int* passed, char** report);
/* time_limit_ms <= 0 means no limit. *clean is 1 when every member classified. */
ETG4_API etg4_status etg4_census(int max_n, long long time_limit_ms, int json, int* clean, int* partial,
                                 char** report);

/* Groups. */
ETG4_API etg4_status etg4_automorphism_group(const etg4_graph* g, etg4_group** out);
/* One generator per line in image notation. */
ETG4_API etg4_status etg4_group_parse(const char* text, int degree, etg4_group** out);
ETG4_API etg4_status etg4_group_format(const etg4_group* group, char** out);
ETG4_API void etg4_group_free(etg4_group* group);
ETG4_API int etg4_group_degree(const etg4_group* group);
ETG4_API etg4_status etg4_group_order(const etg4_group* group, unsigned long long* order);
ETG4_API size_t etg4_group_generator_count(const etg4_group* group);
/* Writes degree ids. */
ETG4_API etg4_status etg4_group_generator(const etg4_group* group, size_t index, int* images_out);

#ifdef __cplusplus
}
#endif

#endif
