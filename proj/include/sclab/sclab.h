/* Copyright 2026 The sclab Authors
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

/* C interface to sclab. Handles are opaque; every fallible call returns a
 * status and leaves a message in sclab_last_error() (per thread). Strings
 * returned through char** are owned by the caller and released with
 * sclab_string_free. */

#ifndef SCLAB_SCLAB_H_
#define SCLAB_SCLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SCLAB_BUILDING)
#define SCLAB_API __attribute__((visibility("default")))
#else
#define SCLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sclab_status {
  SCLAB_OK = 0,
  SCLAB_ERR_INVALID_ARGUMENT = 1,
  SCLAB_ERR_CAPACITY = 2,
  SCLAB_ERR_OUT_OF_RANGE = 3,
  SCLAB_ERR_PARSE = 4,
  SCLAB_ERR_BUDGET_EXCEEDED = 5,
  SCLAB_ERR_PRECONDITION = 6,
  SCLAB_ERR_INTERNAL = 7,
  SCLAB_ERR_NULL_ARGUMENT = 8
} sclab_status;

typedef enum sclab_format {
  SCLAB_FORMAT_JSON = 0,
  SCLAB_FORMAT_TEXT = 1
} sclab_format;

typedef struct sclab_graph sclab_graph;
typedef struct sclab_sweep sclab_sweep;

SCLAB_API const char* sclab_version(void);
SCLAB_API const char* sclab_status_name(sclab_status status);
/* Message of the last failed call on this thread; "" if none. */
SCLAB_API const char* sclab_last_error(void);
SCLAB_API void sclab_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* graph6 (optionally with the >>graph6<< prefix) or an edge list ("n" then
 * "u v" lines; ';' also separates lines). Detected by content. */
SCLAB_API sclab_status sclab_graph_parse(const char* text, sclab_graph** out);
/* pairs holds 2 * edge_count endpoints. */
SCLAB_API sclab_status sclab_graph_from_edges(int n, const int* pairs,
                                              size_t edge_count,
                                              sclab_graph** out);
SCLAB_API void sclab_graph_free(sclab_graph* g);
SCLAB_API int sclab_graph_order(const sclab_graph* g);
SCLAB_API int sclab_graph_size(const sclab_graph* g);
SCLAB_API int sclab_graph_max_degree(const sclab_graph* g);
SCLAB_API sclab_status sclab_graph_edge(const sclab_graph* g, int edge_id,
                                        int* u, int* v);
SCLAB_API sclab_status sclab_graph_graph6(const sclab_graph* g, char** out);
SCLAB_API sclab_status sclab_graph_edge_list(const sclab_graph* g,
                                             char** out);

/* ---- strong cliques and colourings ------------------------------------ */

/* Exact omega_2'. witness may be NULL; otherwise it must hold
 * sclab_graph_size(g) entries and receives ascending edge ids. */
SCLAB_API sclab_status sclab_strong_clique(const sclab_graph* g, int* value,
                                           int* witness, int* witness_len);
/* Exact chi_2'. colours may be NULL or hold sclab_graph_size(g) entries.
 * SCLAB_ERR_BUDGET_EXCEEDED above edge_budget edges (default 24). */
SCLAB_API sclab_status sclab_strong_chromatic_index(const sclab_graph* g,
                                                    int edge_budget,
                                                    int* value, int* colours);

/* ---- reports ---------------------------------------------------------- */

typedef struct sclab_sweep_options {
  int k_max;           /* default 5 */
  int include_chi;     /* default 0 */
  int chi_edge_budget; /* default 24 */
  int threads;         /* default 1; 0 = hardware concurrency */
} sclab_sweep_options;

SCLAB_API void sclab_sweep_options_default(sclab_sweep_options* options);

/* Cycle and path profile up to max_len (clamped to n). */
SCLAB_API sclab_status sclab_profile(const sclab_graph* g, int max_len,
                                     sclab_format format, char** out);
/* Every bound check for one graph. *sound is 0 when a proven bound fails or
 * a constructive procedure does. */
SCLAB_API sclab_status sclab_verify(const sclab_graph* g,
                                    const sclab_sweep_options* options,
                                    sclab_format format, char** out,
                                    int* sound);

/* ---- constructions ---------------------------------------------------- */

/* family: blown_up_c5 (t), hairy_clique (q, delta), complete_bipartite
 * (a, b), bip_pendant (k, delta). params: "name=value" tokens separated by
 * spaces or commas. spec_json may be NULL. */
SCLAB_API sclab_status sclab_construct(const char* family, const char* params,
                                       sclab_graph** graph, char** spec_json);

/* ---- sweeps ----------------------------------------------------------- */

typedef void (*sclab_line_sink)(const char* line, void* user);

SCLAB_API sclab_status sclab_sweep_create(sclab_sweep** out);
SCLAB_API void sclab_sweep_free(sclab_sweep* s);
SCLAB_API sclab_status sclab_sweep_add_graph(sclab_sweep* s,
                                             const sclab_graph* g);
/* One representative per isomorphism class on n vertices, 1 <= n <= 8. */
SCLAB_API sclab_status sclab_sweep_add_enumerated(sclab_sweep* s, int n);
/* Graph6 lines or a single edge list. */
SCLAB_API sclab_status sclab_sweep_add_text(sclab_sweep* s, const char* text);
SCLAB_API size_t sclab_sweep_count(const sclab_sweep* s);
/* Emits one JSON line per graph in input order, then a summary line. */
SCLAB_API sclab_status sclab_sweep_run(sclab_sweep* s,
                                       const sclab_sweep_options* options,
                                       sclab_line_sink sink, void* user,
                                       int* sound);

/* ---- hunts ------------------------------------------------------------ */

typedef struct sclab_hunt_config {
  const char* target;     /* bound id, default "CONJ4" */
  int k;                  /* default 2 */
  int n;                  /* default 10 */
  int delta_cap;          /* default 5 */
  /* NULL selects the target's own cycle constraints. */
  const int* forbidden;
  size_t forbidden_count;
  int bipartite;          /* used only when forbidden is non-NULL */
  uint64_t seed;          /* default 0 */
  int64_t max_steps;      /* default 10000 */
  int restarts;           /* default 0 */
  int sideways_budget;    /* default 50 */
  int threads;            /* default 1 */
  const sclab_graph* initial;  /* NULL for a random start */
  int inject_construction;     /* start from the extremal construction */
} sclab_hunt_config;

SCLAB_API void sclab_hunt_config_default(sclab_hunt_config* config);
/* One JSON object describing the best state. best may be NULL. */
SCLAB_API sclab_status sclab_hunt(const sclab_hunt_config* config,
                                  char** json, sclab_graph** best);

#ifdef __cplusplus
}
#endif

#endif /* SCLAB_SCLAB_H_ */
