/* Copyright 2026 The tpc-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libtpclab.
 *
 * Every fallible call returns a tpc_status; on failure tpc_last_error()
 * describes it (per thread). Handles are opaque and owned by the caller
 * once returned; release them with the matching *_free function. Strings
 * returned through char** are heap allocated; release with tpc_string_free.
 */
#ifndef TPC_TPC_API_H
#define TPC_TPC_API_H

#include <stddef.h>
#include <stdint.h>

#if defined(TPC_BUILDING_LIBRARY)
#define TPC_API __attribute__((visibility("default")))
#else
#define TPC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tpc_status {
  TPC_OK = 0,
  TPC_ERR_INVALID_ARGUMENT = 1,
  TPC_ERR_DISCONNECTED = 2,
  TPC_ERR_SIZE_LIMIT = 3,
  TPC_ERR_MALFORMED_GRAPH6 = 4,
  TPC_ERR_MALFORMED_COLORING = 5,
  TPC_ERR_INVALID_FAMILY = 6,
  TPC_ERR_UNKNOWN_STATEMENT = 7,
  TPC_ERR_NOT_A_PATH = 8,
  TPC_ERR_PRECONDITION = 9,
  TPC_ERR_IO = 10,
  TPC_ERR_INTERNAL = 99
} tpc_status;

typedef struct tpc_graph tpc_graph;
typedef struct tpc_graph_list tpc_graph_list;
typedef struct tpc_coloring tpc_coloring;
typedef struct tpc_certificate tpc_certificate;
typedef struct tpc_report tpc_report;

TPC_API const char* tpc_version(void);
TPC_API const char* tpc_last_error(void);
TPC_API void tpc_string_free(char* s);

/* Search limits. Counted in search nodes, never in wall time. */
typedef struct tpc_budget {
  int64_t node_limit;
  int64_t path_step_limit;
  int prune_interval;
} tpc_budget;

TPC_API void tpc_budget_default(tpc_budget* out);

/* Graphs */
TPC_API tpc_status tpc_graph_from_graph6(const char* text, tpc_graph** out);
/* edges holds 2*m vertex indices. */
TPC_API tpc_status tpc_graph_from_edges(int n, const int* edges, size_t m, tpc_graph** out);
TPC_API void tpc_graph_free(tpc_graph* g);
TPC_API int tpc_graph_order(const tpc_graph* g);
TPC_API int tpc_graph_size(const tpc_graph* g);
TPC_API int tpc_graph_is_connected(const tpc_graph* g);
TPC_API tpc_status tpc_graph_to_graph6(const tpc_graph* g, char** out);
TPC_API tpc_status tpc_graph_complement(const tpc_graph* g, tpc_graph** out);
/* 1 when isomorphic, 0 when not, negative on error (order above 11). */
TPC_API int tpc_graph_isomorphic(const tpc_graph* a, const tpc_graph* b);

typedef enum tpc_filter {
  TPC_FILTER_CONNECTED = 0,
  TPC_FILTER_COCONNECTED = 1 /* connected with connected complement */
} tpc_filter;

/* One graph per isomorphism class, n <= 8. */
TPC_API tpc_status tpc_enumerate(int n, tpc_filter filter, tpc_graph_list** out);
/* One graph6 string per line. */
TPC_API tpc_status tpc_graph_list_read_graph6(const char* path, tpc_graph_list** out);
TPC_API size_t tpc_graph_list_size(const tpc_graph_list* list);
/* Borrowed; valid until the list is freed. */
TPC_API const tpc_graph* tpc_graph_list_at(const tpc_graph_list* list, size_t i);
TPC_API void tpc_graph_list_free(tpc_graph_list* list);

/* Colorings: {"n": int, "vertex_colors": [int], "edge_colors": [[u, v, c]]} */
TPC_API tpc_status tpc_coloring_from_json(const tpc_graph* g, const char* json,
                                          tpc_coloring** out);
TPC_API tpc_status tpc_coloring_to_json(const tpc_graph* g, const tpc_coloring* c, char** out);
TPC_API int tpc_coloring_palette_size(const tpc_coloring* c);
TPC_API void tpc_coloring_free(tpc_coloring* c);

typedef struct tpc_check_result {
  int fully_assigned; /* no element has color 0 */
  int connected;      /* every pair has a total-proper path */
  int failing_u;      /* first pair without one, or -1 */
  int failing_v;
  int strong;         /* strong property holds; -1 when not requested */
  int palette_size;
} tpc_check_result;

/* Colors are compared literally. The strong test runs only on fully
 * assigned, connected colorings. */
TPC_API tpc_status tpc_check(const tpc_graph* g, const tpc_coloring* c, int strong,
                             tpc_check_result* out);

/* Solving */
typedef enum tpc_certificate_status {
  TPC_CERT_EXACT = 0,
  TPC_CERT_BOUNDS_ONLY = 1,
  TPC_CERT_TIMEOUT = 2
} tpc_certificate_status;

/* budget may be NULL for the defaults. */
TPC_API tpc_status tpc_solve(const tpc_graph* g, const tpc_budget* budget,
                             tpc_certificate** out);
TPC_API int tpc_certificate_value(const tpc_certificate* c);
TPC_API int tpc_certificate_lower(const tpc_certificate* c);
TPC_API tpc_certificate_status tpc_certificate_status_of(const tpc_certificate* c);
TPC_API tpc_status tpc_certificate_to_json(const tpc_certificate* c, char** out);
TPC_API tpc_status tpc_certificate_witness(const tpc_certificate* c, tpc_coloring** out);
TPC_API void tpc_certificate_free(tpc_certificate* c);

/* 1 = feasible, 0 = infeasible, 2 = budget exhausted, negative on error.
 * witness (optional) receives the coloring when feasible. */
TPC_API int tpc_decide(const tpc_graph* g, int k, const tpc_budget* budget,
                       tpc_coloring** witness);

/* Named family with a constructive coloring: the one from the matching
 * proof where there is one, else tree, path or solver coloring. */
TPC_API tpc_status tpc_color_family(const char* name, const int* params, size_t count,
                                    tpc_graph** graph, tpc_coloring** coloring);

/* Verification */
typedef enum tpc_report_format {
  TPC_FORMAT_JSON = 0,
  TPC_FORMAT_CSV = 1,
  TPC_FORMAT_TEXT = 2
} tpc_report_format;

typedef enum tpc_verdict {
  TPC_VERIFIED = 0,
  TPC_COUNTEREXAMPLE = 1,
  TPC_INCONCLUSIVE = 3 /* timeouts but no counterexample */
} tpc_verdict;

TPC_API tpc_status tpc_verify(const char* statement, int n_min, int n_max,
                              const tpc_budget* budget, int jobs, tpc_report** out);
/* source may be NULL for the built-in enumeration. */
TPC_API tpc_status tpc_ng_scan(int n, const tpc_graph_list* source, const tpc_budget* budget,
                               int jobs, tpc_report** out);
TPC_API tpc_verdict tpc_report_verdict(const tpc_report* r);
TPC_API int tpc_report_examined(const tpc_report* r);
TPC_API int tpc_report_passes(const tpc_report* r);
TPC_API int tpc_report_counterexamples(const tpc_report* r);
TPC_API int tpc_report_timeouts(const tpc_report* r);
TPC_API tpc_status tpc_report_emit(const tpc_report* r, tpc_report_format format, char** out);
/* ng_scan rows as CSV (graph6,tpc,tpc_complement,sum,status); empty for verify. */
TPC_API tpc_status tpc_report_rows_csv(const tpc_report* r, char** out);
TPC_API void tpc_report_free(tpc_report* r);

/* Writes via a temporary file and rename; nothing is left on failure. */
TPC_API tpc_status tpc_write_file_atomic(const char* path, const char* content);
/* TPC_LAB_JOBS or 1. */
TPC_API int tpc_default_jobs(void);

#ifdef __cplusplus
}
#endif

#endif /* TPC_TPC_API_H */
