// Copyright 2026 The cupgates Authors.
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

/* C interface to the cupgates library. Every call that can fail returns a
 * cg_status; on failure cg_last_error_message() describes the error for the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with cg_free_string(). All JSON is UTF-8. */

#ifndef CUPGATES_CUPGATES_H_
#define CUPGATES_CUPGATES_H_

#include <stddef.h>

#if defined(CUPGATES_BUILDING_LIBRARY)
#define CG_API __attribute__((visibility("default")))
#else
#define CG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_INVALID_ARGUMENT = 1,
  CG_ERR_DOMAIN = 2,
  CG_ERR_UNSUPPORTED = 3,
  CG_ERR_BUDGET = 4,
  CG_ERR_PARSE = 5,
  CG_ERR_INTERNAL = 6
} cg_status;

typedef struct cg_code cg_code;
typedef struct cg_circuit cg_circuit;

CG_API const char* cg_version(void);
CG_API const char* cg_last_error_message(void);
CG_API void cg_free_string(char* s);

/* spec: {"group":{"orders":[9,4]},"polys":["1+x^4+x^8",...],
 *        "product":"balanced"|"hypergraph"} */
CG_API cg_status cg_code_build(const char* spec_json, cg_code** out);
CG_API void cg_code_destroy(cg_code* code);
CG_API cg_status cg_code_params(const cg_code* code, size_t* n, size_t* k);
CG_API cg_status cg_code_report(const cg_code* code, char** json_out);
/* {"hx":["0101..",...],"hz":[...],"logicals":[...]} */
CG_API cg_status cg_code_matrices(const cg_code* code, char** json_out);
/* options: {"w_max":6,"ceiling":2e8,"trials":10000,"seed":1,
 *           "method":"auto"|"exact"|"randomized"} */
CG_API cg_status cg_code_distance(const cg_code* code, const char* options_json,
                                  char** json_out);

/* request: {"group":..,"element":..,"lambda":2,"variant":"symmetric",
 *           "mode":"oracle"|"closed_form"} */
CG_API cg_status cg_orient(const char* request_json, char** json_out);
/* request: {"weight":4,"signature":[1,1,2],"lambda":2,
 *           "variant":"non_associative","weight_cap":8} */
CG_API cg_status cg_configs(const char* request_json, char** json_out);

/* request: {"variant":"symmetric","labelings":["IIOO",..],"direct":false,
 *           "select":"first"|"nontrivial"}.
 * Without labelings the first valid labeling of each factor is used, or with
 * select "nontrivial" the first combination acting nontrivially. */
CG_API cg_status cg_circuit_synthesize(const cg_code* code,
                                       const char* request_json,
                                       cg_circuit** out);
CG_API cg_status cg_circuit_parse(const cg_code* code, const char* circuit_json,
                                  cg_circuit** out);
CG_API cg_status cg_circuit_json(const cg_circuit* circuit, char** json_out);
CG_API cg_status cg_circuit_gate_count(const cg_circuit* circuit,
                                       size_t* count);
CG_API void cg_circuit_destroy(cg_circuit* circuit);
/* {"preserves":true,"nontrivial":true,"witness":[..]} */
CG_API cg_status cg_circuit_verify(const cg_code* code,
                                   const cg_circuit* circuit, char** json_out);

/* format: "json" or "csv" */
CG_API cg_status cg_search(const char* config_json, const char* format,
                           char** out);
/* options: {"distance":{...},"check_distance":true,"check_gates":true,
 *           "rows":[0,2]} */
CG_API cg_status cg_verify_manifest(const char* manifest_json,
                                    const char* options_json, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* CUPGATES_CUPGATES_H_ */
