/*
 * Copyright 2026 The witopt Authors
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

#ifndef WITOPT_WITOPT_H_
#define WITOPT_WITOPT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(WITOPT_BUILDING_LIBRARY)
#define WITOPT_API __declspec(dllexport)
#else
#define WITOPT_API __declspec(dllimport)
#endif
#else
#define WITOPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum witopt_status {
  WITOPT_OK = 0,
  WITOPT_ERR_INVALID_ARGUMENT = 1,
  WITOPT_ERR_DIMENSION = 2,
  WITOPT_ERR_NUMERICAL = 3,
  WITOPT_ERR_PARSE = 4,
  WITOPT_ERR_NOT_FOUND = 5,
  WITOPT_ERR_INTERNAL = 6
} witopt_status;

typedef enum witopt_verdict {
  WITOPT_INCONCLUSIVE = 0,
  WITOPT_CONSISTENT = 1,
  WITOPT_WEAKLY_OPTIMAL = 2,
  WITOPT_OPTIMAL = 3,
  WITOPT_BOUND_VIOLATED = 4,
  WITOPT_NOT_BLOCK_POSITIVE = 5
} witopt_verdict;

typedef struct witopt_operator witopt_operator;
typedef struct witopt_report witopt_report;

WITOPT_API const char* witopt_version(void);

/* Message for the last failed call on this thread; never NULL. */
WITOPT_API const char* witopt_last_error(void);

/* Frees strings returned through char** out-parameters. */
WITOPT_API void witopt_string_free(char* s);

WITOPT_API const char* witopt_status_name(witopt_status status);
WITOPT_API const char* witopt_verdict_name(witopt_verdict verdict);

/* Operator on C^dim_a (x) C^dim_b. `re` and `im` hold (dim_a*dim_b)^2
 * row-major entries; `im` may be NULL. */
WITOPT_API witopt_status witopt_operator_create(int dim_a, int dim_b, const double* re,
                                                const double* im, const char* name,
                                                int block_positive, witopt_operator** out);
WITOPT_API witopt_status witopt_operator_from_json(const char* text, witopt_operator** out);
WITOPT_API witopt_status witopt_operator_to_json(const witopt_operator* op, char** out);
WITOPT_API witopt_status witopt_operator_dims(const witopt_operator* op, int* dim_a,
                                              int* dim_b);
/* Copies (dim_a*dim_b)^2 row-major entries; `im` may be NULL. */
WITOPT_API witopt_status witopt_operator_entries(const witopt_operator* op, double* re,
                                                 double* im);
WITOPT_API witopt_status witopt_operator_name(const witopt_operator* op, char** out);
WITOPT_API int witopt_operator_has_map(const witopt_operator* op);
/* Superoperator trace of the source map (square maps only). */
WITOPT_API witopt_status witopt_operator_map_trace(const witopt_operator* op, double* out);
WITOPT_API void witopt_operator_destroy(witopt_operator* op);

WITOPT_API size_t witopt_catalog_size(void);
/* NULL when out of range. */
WITOPT_API const char* witopt_catalog_name(size_t index);
WITOPT_API int witopt_catalog_default_dim(const char* name);
/* dim <= 0 selects the family default. */
WITOPT_API witopt_status witopt_catalog_witness(const char* name, int dim,
                                                witopt_operator** out);

typedef struct witopt_check_options {
  uint64_t seed;
  /* Eigenvalue-match tolerance; <= 0 keeps the default. */
  double tol;
  /* Seesaw restarts for check, optimizer restarts for optimize; <= 0 keeps
   * the default. */
  int restarts;
  /* Comma-separated criterion ids, or NULL/"" for all. */
  const char* criteria;
  double threshold;
  /* Treat the operator as block-positive even without an attestation. */
  int assume_block_positive;
  /* Analytic gradients for optimize (finite differences otherwise). */
  int analytic_gradient;
} witopt_check_options;

WITOPT_API void witopt_check_options_init(witopt_check_options* options);

WITOPT_API witopt_status witopt_check(const witopt_operator* op,
                                      const witopt_check_options* options,
                                      witopt_report** out);
WITOPT_API witopt_status witopt_optimize(const witopt_operator* op,
                                         const witopt_check_options* options,
                                         witopt_report** out);

WITOPT_API witopt_verdict witopt_report_overall(const witopt_report* report);
WITOPT_API size_t witopt_report_criterion_count(const witopt_report* report);
WITOPT_API const char* witopt_report_criterion_id(const witopt_report* report, size_t index);
WITOPT_API witopt_status witopt_report_criterion_verdict(const witopt_report* report,
                                                         const char* id,
                                                         witopt_verdict* out);
WITOPT_API witopt_status witopt_report_evidence(const witopt_report* report, const char* id,
                                                const char* key, double* out);
WITOPT_API witopt_status witopt_report_json(const witopt_report* report, char** out);
WITOPT_API witopt_status witopt_report_summary(const witopt_report* report, char** out);
WITOPT_API void witopt_report_destroy(witopt_report* report);

/* "appendix-a", "appendix-b" or "appendix-c". */
WITOPT_API witopt_status witopt_demo(const char* name, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WITOPT_WITOPT_H_ */
