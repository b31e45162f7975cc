// Copyright 2026 The pdlog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the pdlog library. All handles are opaque; every call that
 * can fail returns a pdlog_status and leaves a message for
 * pdlog_last_error() on the calling thread. */

#ifndef PDLOG_PDLOG_H
#define PDLOG_PDLOG_H

#include <stddef.h>
#include <stdint.h>

#if defined(PDLOG_BUILDING_LIBRARY)
#define PDLOG_API __attribute__((visibility("default")))
#else
#define PDLOG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdlog_status {
  PDLOG_OK = 0,
  PDLOG_E_PARSE = 1,
  PDLOG_E_KIND = 2,
  PDLOG_E_DOMAIN = 3,
  PDLOG_E_BUDGET = 4,
  PDLOG_E_GENERATION = 5,
  PDLOG_E_NOT_CONNECTED = 6,
  PDLOG_E_NON_PROGRESS = 7,
  PDLOG_E_NO_GOOD_STRING = 8,
  PDLOG_E_LENGTH_MISMATCH = 9,
  PDLOG_E_IO = 10,
  PDLOG_E_INTERNAL = 11
} pdlog_status;

typedef struct pdlog_graph pdlog_graph;
typedef struct pdlog_result pdlog_result;
typedef struct pdlog_text pdlog_text;

/* Shared knobs. Zero / NULL fields take the defaults noted. */
typedef struct pdlog_options {
  uint32_t s;
  uint32_t t;
  uint64_t k;
  uint64_t seed;
  int paper_mode;          /* estimator constants (kn)^11 walks */
  const char* eps;         /* practical estimator error, default "1/50" */
  const char* delta;       /* practical failure probability, "1/10000" */
  const char* membership;  /* "scan", "orbit-min" (default), "table" */
  int exact;               /* swfp: exact probabilities instead of walks */
  uint64_t reps;           /* amplification repetitions, default 15 */
  uint64_t trials_per_candidate; /* default 32 */
  uint64_t max_candidates;       /* default 40 */
  int streaming;           /* recompute amplified output bit by bit */
  int certify;             /* swfp: exact grid check into diagnostics */
} pdlog_options;

PDLOG_API void pdlog_options_init(pdlog_options* opts);

PDLOG_API const char* pdlog_version(void);
PDLOG_API const char* pdlog_generator_version(void);
PDLOG_API const char* pdlog_status_name(pdlog_status status);
PDLOG_API const char* pdlog_last_error(void);

/* text results */
PDLOG_API const char* pdlog_text_data(const pdlog_text* text);
PDLOG_API size_t pdlog_text_size(const pdlog_text* text);
PDLOG_API void pdlog_text_free(pdlog_text* text);
/* lowercase hex SHA-256 of a byte range */
PDLOG_API pdlog_status pdlog_sha256(const char* data, size_t size,
                                    pdlog_text** out);

/* graphs */
PDLOG_API pdlog_status pdlog_graph_load_file(const char* path,
                                             pdlog_graph** out);
PDLOG_API pdlog_status pdlog_graph_parse(const char* text, size_t size,
                                         pdlog_graph** out);
/* params_json: object with any of n, density, edges, connected, cycles,
 * min_cycle, max_cycle, k, back_density, attempts. s and t may be NULL. */
PDLOG_API pdlog_status pdlog_graph_generate(const char* model,
                                            const char* params_json,
                                            uint64_t seed, pdlog_graph** out,
                                            uint32_t* s, uint32_t* t);
PDLOG_API void pdlog_graph_free(pdlog_graph* g);
PDLOG_API size_t pdlog_graph_vertex_count(const pdlog_graph* g);
PDLOG_API size_t pdlog_graph_edge_count(const pdlog_graph* g);
PDLOG_API const char* pdlog_graph_kind(const pdlog_graph* g);
PDLOG_API pdlog_status pdlog_graph_serialize(const pdlog_graph* g,
                                             pdlog_text** out);
PDLOG_API pdlog_status pdlog_graph_digest(const pdlog_graph* g,
                                          pdlog_text** out);
PDLOG_API pdlog_status pdlog_instance_size(const pdlog_graph* g, uint32_t s,
                                           uint32_t t, uint64_t k,
                                           uint64_t* out);

/* solvers; alg is "swfp", "undirected" or "eulerian" */
PDLOG_API pdlog_status pdlog_solve(const pdlog_graph* g, const char* alg,
                                   const pdlog_options* opts,
                                   pdlog_result** out);
/* index is 1-based decimal; remaining randomness from seed2 */
PDLOG_API pdlog_status pdlog_replay_swfp(const pdlog_graph* g,
                                         const pdlog_options* opts,
                                         const char* index, uint64_t seed2,
                                         pdlog_result** out);
PDLOG_API int pdlog_result_success(const pdlog_result* r);
PDLOG_API size_t pdlog_result_vertex_count(const pdlog_result* r);
PDLOG_API const uint32_t* pdlog_result_vertices(const pdlog_result* r);
PDLOG_API size_t pdlog_result_edge_count(const pdlog_result* r);
PDLOG_API const uint32_t* pdlog_result_edges(const pdlog_result* r);
/* JSON object */
PDLOG_API const char* pdlog_result_diagnostics(const pdlog_result* r);
/* JSON lines, one per move (empty for swfp) */
PDLOG_API const char* pdlog_result_trace(const pdlog_result* r);
PDLOG_API uint64_t pdlog_result_workspace_peak(const pdlog_result* r);
PDLOG_API void pdlog_result_free(pdlog_result* r);

/* estimation and oracles */
PDLOG_API pdlog_status pdlog_estimate_pk(const pdlog_graph* g,
                                         const pdlog_options* opts,
                                         uint64_t* hits, uint64_t* samples);
/* exact p_k(s, t) as "num/den" */
PDLOG_API pdlog_status pdlog_oracle_pk(const pdlog_graph* g, uint32_t s,
                                       uint32_t t, uint64_t k,
                                       pdlog_text** out);
/* keep vertices >= min_kept plus a and b; drop the orbits of edges
 * 0..deleted_prefix-1 (eulerian) */
PDLOG_API pdlog_status pdlog_oracle_connected(const pdlog_graph* g, uint32_t a,
                                              uint32_t b, uint32_t min_kept,
                                              uint32_t deleted_prefix,
                                              int directed, int* out);
/* same question through the random-walk test */
PDLOG_API pdlog_status pdlog_walk_connected(const pdlog_graph* g, uint32_t a,
                                            uint32_t b, uint32_t min_kept,
                                            uint32_t deleted_prefix,
                                            uint64_t seed, int* out);
/* edges may be NULL */
PDLOG_API pdlog_status pdlog_oracle_validate(const pdlog_graph* g,
                                             const uint32_t* vertices,
                                             size_t vertex_count,
                                             const uint32_t* edges,
                                             size_t edge_count, uint32_t s,
                                             uint32_t t, int* out);
/* one path per line */
PDLOG_API pdlog_status pdlog_oracle_enumerate(const pdlog_graph* g,
                                              uint32_t s, uint32_t t,
                                              uint64_t max_len,
                                              pdlog_text** out);
/* JSON object: certified, collision, bad_indices, offenders, grid, ... */
PDLOG_API pdlog_status pdlog_oracle_grid(const pdlog_graph* g, uint32_t t,
                                         uint64_t k, const char* eps,
                                         pdlog_text** out);

/* reproducibility */
/* PseudoDetStats as a JSON object */
PDLOG_API pdlog_status pdlog_verify(const pdlog_graph* g, const char* alg,
                                    const pdlog_options* opts, uint64_t trials,
                                    pdlog_text** out);
/* fair-coin stub: outputs "0" or "1" */
PDLOG_API pdlog_status pdlog_coin_entropy(uint64_t trials, uint64_t seed,
                                          pdlog_text** out);
/* token as lowercase hex; bits receives its declared length */
PDLOG_API pdlog_status pdlog_token_make(const pdlog_graph* g, const char* alg,
                                        const pdlog_options* opts,
                                        pdlog_text** hex, uint64_t* bits);
PDLOG_API pdlog_status pdlog_token_use(const pdlog_graph* g, const char* alg,
                                       const pdlog_options* opts,
                                       const char* hex, pdlog_text** output);
/* emit_copies: JSON object with token, outputs, all_equal */
PDLOG_API pdlog_status pdlog_copies(const pdlog_graph* g, const char* alg,
                                    const pdlog_options* opts, uint64_t copies,
                                    pdlog_text** out);

/* layered reduction; x = 0 picks the instance size */
PDLOG_API pdlog_status pdlog_reduce(const pdlog_graph* g, uint32_t s,
                                    uint32_t t, uint64_t k, uint64_t x,
                                    pdlog_graph** out, pdlog_text** sidecar);
/* pieces of a layered path, one per line */
PDLOG_API pdlog_status pdlog_project(const pdlog_graph* g, uint32_t s,
                                     uint32_t t, uint64_t k, uint64_t x,
                                     const uint32_t* vertices, size_t count,
                                     pdlog_text** out);

/* orbit decomposition; k = 0 lists every orbit, otherwise C_k only */
PDLOG_API pdlog_status pdlog_cycles(const pdlog_graph* g, uint64_t k,
                                    pdlog_text** out);

/* CSV table without timings; model may be NULL. wall (nullable) receives a
 * JSON array of per-row milliseconds. slope receives the log-log walk-step
 * fit when has_slope is set. */
PDLOG_API pdlog_status pdlog_bench(const char* suite, const uint64_t* sizes,
                                   size_t size_count, const uint64_t* seeds,
                                   size_t seed_count, uint64_t edge_factor,
                                   const char* model, pdlog_text** csv,
                                   pdlog_text** wall, double* slope,
                                   int* has_slope);

#ifdef __cplusplus
}
#endif

#endif /* PDLOG_PDLOG_H */
