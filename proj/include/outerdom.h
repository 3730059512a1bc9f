/* outerdom — domination analysis for maximal outerplane graphs and
 * Hamiltonian plane triangulations.
 *
 * C application binary interface of the shared library. All fallible
 * functions return an od_status; OD_OK (0) means success. On failure the
 * thread-local message from od_last_error() describes what went wrong,
 * and output parameters are left untouched. Strings returned through
 * char** parameters are heap-allocated; release them with
 * od_string_free(). Graph handles are opaque; release them with
 * od_graph_free().
 *
 * All graph, set, trace, and report payloads are JSON text in the
 * formats described in README.md.
 */
#ifndef OUTERDOM_H
#define OUTERDOM_H

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors the library's internal error codes one-to-one. */
typedef enum od_status {
  OD_OK = 0,
  OD_ERR_BAD_INDEX = 1,
  OD_ERR_COUNT_MISMATCH = 2,
  OD_ERR_DUPLICATE_CHORD = 3,
  OD_ERR_CHORD_IS_BOUNDARY = 4,
  OD_ERR_CROSSING_CHORDS = 5,
  OD_ERR_NOT_A_CHORD = 6,
  OD_ERR_NOT_SIMPLE = 7,
  OD_ERR_TOO_LARGE = 8,
  OD_ERR_PARSE = 9,
  OD_ERR_UNKNOWN_NAME = 10,
  OD_ERR_PRECONDITION = 11,
  OD_ERR_RESULT_NOT_MOP = 12,
  OD_ERR_NOT_DOMINATING = 13,
  OD_ERR_CERTIFICATE = 14,
  OD_ERR_BOUND = 15,
  OD_ERR_SOLVER_TOO_LARGE = 16,
  OD_ERR_NOT_TRIANGULATION = 17,
  OD_ERR_NOT_HAMILTON_CYCLE = 18,
  OD_ERR_NOT_BIPARTITE = 19,
  OD_ERR_SHARED_CHORD = 20,
  OD_ERR_NO_HAMILTON_CYCLE = 21,
  OD_ERR_NOT_FOUND = 22,
  OD_ERR_INTERNAL = 23,
  OD_ERR_ARGUMENT = 100 /* null pointer or invalid value at this boundary */
} od_status;

/* Kind of a parsed instance. */
#define OD_GRAPH_MOP 0           /* boundary cycle plus noncrossing chords */
#define OD_GRAPH_TRIANGULATION 1 /* Hamiltonian plane triangulation */
#define OD_GRAPH_PLAIN 2         /* plain simple graph */

/* Library version, a static string such as "0.1.0". */
const char* od_version(void);

/* Message of the most recent failure on this thread ("" after success).
 * The pointer stays valid until the next library call on the thread. */
const char* od_last_error(void);

/* Releases a string returned through a char** output parameter. */
void od_string_free(char* s);

/* Opaque parsed instance. */
typedef struct od_graph od_graph;

void od_graph_free(od_graph* g);

/* Parses {"type":"mop"|"ham-triangulation"|"graph", ...}. A "graph"
 * object with a "cycle" array is embedded along that Hamilton cycle and
 * comes back as a triangulation. */
od_status od_graph_from_json(const char* json_text, od_graph** out);

od_status od_graph_to_json(const od_graph* g, char** out_json);

/* OD_GRAPH_* (or -1 if g is null). */
int od_graph_kind(const od_graph* g);
int od_graph_n(const od_graph* g);

/* Fixed instances by name; od_named_list returns the names as a JSON
 * array of strings. */
od_status od_named(const char* name, od_graph** out);
od_status od_named_list(char** out_json);

/* Exact domination number with a witness set. Uses the tree DP on
 * outerplane instances and branch and bound otherwise; limit_bb caps the
 * branch-and-bound size (hard cap 64). */
od_status od_gamma(const od_graph* g, int limit_bb, char** out_json);

/* Degree-2 / consecutive-pair accounting with the (n+t)/4, ceil((n+k)/4)
 * and (n+k)/4 comparisons. Outerplane instances only. with_gamma != 0
 * additionally computes the exact domination number. */
od_status od_bounds(const od_graph* g, int with_gamma, char** out_json);

/* Constructive reduction engine for outerplane instances. Returns the
 * full trace; its final set is verified to dominate and to fit
 * ceil((n+k)/4). */
od_status od_dominate(const od_graph* g, char** out_json);

/* Independent replay of a trace produced by od_dominate. *ok_out (may be
 * null) receives 1 when the trace checks out, 0 otherwise; the JSON
 * report carries the messages. Returns OD_OK in both cases. */
od_status od_verify_trace(const char* trace_json, int* ok_out, char** out_json);

/* floor(5n/16) pipeline for triangulations. A plain graph is accepted if
 * a suitable Hamilton cycle can be found (small instances only). */
od_status od_pipeline(const od_graph* g, int limit_bb, char** out_json);

/* GraphViz DOT diagram (outerplane instances and triangulations). */
od_status od_export_dot(const od_graph* g, char** out_dot);

/* Streams every labeled outerplane instance with the given n (3..16) as
 * one JSON object per emit call. Return 0 from emit to continue,
 * anything else to stop early (od_enumerate then returns OD_OK). */
typedef int (*od_emit_fn)(const char* json_text, void* user);
od_status od_enumerate(int n, od_emit_fn emit, void* user);

/* Scans every labeled outerplane instance with n_lo <= n <= n_hi for
 * gamma > (n+k)/4, exactly. *found_out (may be null) receives the number
 * of violating instances; the JSON report lists them (capped). */
od_status od_search_counterexamples(int n_lo, int n_hi, long long* found_out,
                                    char** out_json);

/* Names of the runnable verification suites, as a JSON array. */
od_status od_suite_names(char** out_json);

/* Runs one verification suite. Zero/negative n_max and count select the
 * suite defaults; workers < 1 means 1. *failures_out (may be null)
 * receives the failing-instance count; the JSON report carries the
 * details. Returns OD_OK even when the suite found violations. */
od_status od_run_suite(const char* suite, int n_max, long long count,
                       unsigned long long seed, int workers, int limit_bb,
                       long long* failures_out, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OUTERDOM_H */
