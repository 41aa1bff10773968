// Copyright 2026 The gridstate Authors
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

/* C interface to the gridstate library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * function returns a gs_status; on failure gs_last_error() describes the
 * problem for the calling thread. Strings handed out through char** are
 * owned by the caller and released with gs_string_free. Structured results
 * come back as JSON text. */

#ifndef GRIDSTATE_GRIDSTATE_H_
#define GRIDSTATE_GRIDSTATE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(GRIDSTATE_BUILDING_LIBRARY)
#define GS_API __attribute__((visibility("default")))
#else
#define GS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_INVALID_ARGUMENT = 1,
  GS_DIMENSION_MISMATCH = 2,
  GS_PARSE = 3,
  GS_NOT_PPT = 4,
  GS_CONTEXT_VIOLATION = 5,
  GS_OVERFLOW = 6,
  GS_NOT_FOUND = 7,
  GS_INTERNAL = 8
} gs_status;

typedef struct gs_hypergraph gs_hypergraph;
typedef struct gs_state gs_state;

GS_API const char* gs_version(void);
GS_API const char* gs_last_error(void);
GS_API const char* gs_status_name(gs_status s);
GS_API void gs_string_free(char* s);

/* Hypergraphs. */
GS_API gs_status gs_hypergraph_from_json(const char* text, gs_hypergraph** out);
GS_API gs_status gs_hypergraph_load(const char* path, gs_hypergraph** out);
/* A file path, else a built-in state name, else a fixture name. */
GS_API gs_status gs_hypergraph_resolve(const char* spec, gs_hypergraph** out);
GS_API gs_status gs_hypergraph_to_json(const gs_hypergraph* h, char** out);
GS_API gs_status gs_hypergraph_dims(const gs_hypergraph* h, int* dA, int* dB);
GS_API gs_status gs_hypergraph_num_edges(const gs_hypergraph* h, size_t* out);
GS_API void gs_hypergraph_free(gs_hypergraph* h);

/* Dense states. */
GS_API gs_status gs_state_build(const gs_hypergraph* h, gs_state** out);
GS_API gs_status gs_state_from_json(const char* text, gs_state** out);
/* A state or hypergraph file, else a built-in state name, else a fixture name. */
GS_API gs_status gs_state_resolve(const char* spec, gs_state** out);
GS_API gs_status gs_state_to_json(const gs_state* s, char** out);
GS_API gs_status gs_state_dims(const gs_state* s, int* dA, int* dB);
GS_API gs_status gs_state_entry(const gs_state* s, int row, int col, double* re, double* im);
GS_API void gs_state_free(gs_state* s);

/* Analyses. JSON results go to *json_out. */
GS_API gs_status gs_ppt_check(const gs_hypergraph* h, double tol, char** json_out);
/* hints: comma-separated monomials to branch on first, may be NULL.
 * *certified is 1 for a complete certificate, 0 when the prover got stuck. */
GS_API gs_status gs_prove_sn(const gs_hypergraph* h, int k, int target, const char* hints, size_t node_budget,
                             char** json_out, int* certified);
GS_API gs_status gs_replay_proof(const gs_hypergraph* h, const char* proof_json, int* ok, char** message);
GS_API gs_status gs_sn_upper(const gs_hypergraph* h, int* out);
GS_API gs_status gs_family(int n, char** json_out);
GS_API gs_status gs_family_member(int n, gs_hypergraph** out);
GS_API gs_status gs_certify_4x12(char** json_out);
GS_API gs_status gs_extremality(const gs_state* s, double tol, char** json_out);
/* mu <= 0 gives W = P + Q^T_B, otherwise mu 1 - W. Output uses the state layout. */
GS_API gs_status gs_witness(const gs_state* s, double tol, double mu, char** json_out);
GS_API gs_status gs_seesaw(const gs_state* s, double tol, int starts, uint64_t seed, int threads, char** json_out);
/* trace_csv_path may be NULL. */
GS_API gs_status gs_dps(const gs_state* s, double tol, int level, int extra_cuts, int allow_large, double eps,
                        const char* trace_csv_path, char** json_out);
GS_API gs_status gs_report_all(int starts, uint64_t seed, int threads, double tol, char** json_out, char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* GRIDSTATE_GRIDSTATE_H_ */
