/*
 * Copyright 2026 The ddcluster Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the ddcluster solver. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every fallible
 * call returns a ddc_status; on failure ddc_last_error() describes the cause
 * (thread-local, valid until the next call on the same thread).
 *
 * Vertex indices crossing this interface are 0-based.
 */

#ifndef DDCLUSTER_DDCLUSTER_H_
#define DDCLUSTER_DDCLUSTER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define DDC_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define DDC_API __attribute__((visibility("default")))
#else
#  define DDC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ddc_status {
  DDC_OK = 0,
  DDC_ERR_INVALID_ARGUMENT = 1,
  DDC_ERR_PARSE = 2,
  DDC_ERR_IO = 3,
  DDC_ERR_CONTRACT = 4,
  DDC_ERR_INTERNAL = 5
} ddc_status;

typedef enum ddc_strategy {
  DDC_STRATEGY_BASELINE = 0,
  DDC_STRATEGY_CBC = 1,
  DDC_STRATEGY_PAS = 2,
  DDC_STRATEGY_PAS_VO = 3
} ddc_strategy;

typedef enum ddc_policy { DDC_POLICY_FIXED = 0, DDC_POLICY_ADAPTIVE = 1 } ddc_policy;

typedef struct ddc_graph ddc_graph;
typedef struct ddc_result ddc_result;

typedef struct ddc_solver_config {
  ddc_strategy strategy;
  ddc_policy policy;
  int32_t width;
  uint64_t seed;
  /* Nonzero: bound each cutset node by the relaxed diagram's overall bound
   * instead of the longest path through that node. */
  int whole_diagram_cutset_bound;
} ddc_solver_config;

/* Receives one formatted line per event, without trailing newline. */
typedef void (*ddc_line_fn)(const char* line, void* user);

DDC_API const char* ddc_last_error(void);
DDC_API const char* ddc_version(void);

/* Fills *cfg with baseline, fixed, width 100, seed 0. */
DDC_API void ddc_solver_config_init(ddc_solver_config* cfg);
DDC_API ddc_status ddc_parse_strategy(const char* name, ddc_strategy* out);
DDC_API ddc_status ddc_parse_policy(const char* name, ddc_policy* out);
DDC_API const char* ddc_strategy_name(ddc_strategy s);
DDC_API const char* ddc_policy_name(ddc_policy p);

/* ---- graphs ---- */
DDC_API ddc_status ddc_graph_generate(int32_t n, double density, uint64_t seed, ddc_graph** out);
DDC_API ddc_status ddc_graph_parse(const char* text, ddc_graph** out);
DDC_API ddc_status ddc_graph_load(const char* path, ddc_graph** out);
DDC_API ddc_status ddc_graph_save(const ddc_graph* g, const char* path);
/* Writes the text encoding into buf (NUL-terminated when it fits). *needed
 * receives the size including the terminator. Passing buf == NULL queries. */
DDC_API ddc_status ddc_graph_serialize(const ddc_graph* g, char* buf, size_t cap, size_t* needed);
DDC_API int32_t ddc_graph_num_vertices(const ddc_graph* g);
DDC_API int64_t ddc_graph_num_edges(const ddc_graph* g);
DDC_API int64_t ddc_graph_weight(const ddc_graph* g, int32_t v);
DDC_API void ddc_graph_free(ddc_graph* g);

/* ---- solving ---- */
/* trace may be NULL. When given it receives "# compile=<k> kind=<restricted|
 * relaxed> size=<n>" headers and per-layer lines
 * "layer=<k> var=<v> width_pre=<a> width_post=<b> merged=<c>" (var 1-based). */
DDC_API ddc_status ddc_solve(const ddc_graph* g, const ddc_solver_config* cfg, ddc_line_fn trace,
                             void* trace_user, ddc_result** out);
DDC_API int64_t ddc_result_optimum(const ddc_result* r);
DDC_API size_t ddc_result_best_set_size(const ddc_result* r);
/* Copies up to cap vertex ids (ascending); returns the number copied. */
DDC_API size_t ddc_result_best_set(const ddc_result* r, int32_t* out, size_t cap);
DDC_API uint64_t ddc_result_nodes_processed(const ddc_result* r);
DDC_API uint64_t ddc_result_candidate_evaluations(const ddc_result* r);
DDC_API uint64_t ddc_result_relaxed_compilations(const ddc_result* r);
DDC_API double ddc_result_wall_time_s(const ddc_result* r);
DDC_API void ddc_result_free(ddc_result* r);

/* Exact optimum by enumeration; DDC_ERR_CONTRACT for more than 30 vertices. */
DDC_API ddc_status ddc_brute_force(const ddc_graph* g, int64_t* out);

/* ---- experiment sweeps ---- */
typedef struct ddc_sweep_spec {
  const double* densities;
  size_t num_densities;
  int32_t n;
  size_t instances_per_density;
  /* e.g. "baseline,cbc/fixed,pas-vo/adaptive" */
  const char* configs;
  int32_t width;
  uint64_t seed;
  /* NULL, or a directory where instances are cached and reused. */
  const char* instance_dir;
} ddc_sweep_spec;

/* Writes CSV to out_path ("-" for standard output). */
DDC_API ddc_status ddc_run_sweep(const ddc_sweep_spec* spec, const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* DDCLUSTER_DDCLUSTER_H_ */
