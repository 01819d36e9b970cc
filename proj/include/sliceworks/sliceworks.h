/* Copyright 2026 The Sliceworks Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the sliceworks shared library.
 *
 * Objects are opaque handles created by *_parse or by operations and released
 * with the matching *_free. Every fallible call returns an sw_status; on
 * failure sw_last_error() describes the problem for the calling thread until
 * the next call. Strings returned through char** are owned by the caller and
 * released with sw_string_free. Quaternions are laid out as {w, x, y, z}.
 */
#ifndef SLICEWORKS_SLICEWORKS_H
#define SLICEWORKS_SLICEWORKS_H

#include <stddef.h>
#include <stdint.h>

#if defined(SLICEWORKS_BUILDING_LIBRARY)
#define SLICEWORKS_API __attribute__((visibility("default")))
#else
#define SLICEWORKS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
  SW_OK = 0,
  SW_ERR_PARSE = 1,
  SW_ERR_INVALID_ARGUMENT = 2,
  SW_ERR_ZERO_DIVISION = 3,
  SW_ERR_NOT_IN_SLICE_CONE = 4,
  SW_ERR_DEGENERATE_SLICE_PAIR = 5,
  SW_ERR_EMPTY_UNIT_SET = 6,
  SW_ERR_INSUFFICIENT_UNITS = 7,
  SW_ERR_NON_REAL_SYMMETRIZATION = 8,
  SW_ERR_NO_WITNESS_PATH = 9,
  SW_ERR_STEP_OUT_OF_RANGE = 10,
  SW_ERR_OUT_OF_DOMAIN = 11,
  SW_ERR_INCOMPATIBLE_DOMAINS = 12,
  SW_ERR_DOMAIN_CHECK_FAILED = 13,
  SW_ERR_NO_CONVERGENCE = 14,
  SW_ERR_INTERNAL = 15
} sw_status;

typedef struct sw_quat {
  double w, x, y, z;
} sw_quat;

typedef struct sw_function sw_function;
typedef struct sw_domain sw_domain;
typedef struct sw_path sw_path;
typedef struct sw_zeroset sw_zeroset;

SLICEWORKS_API const char* sw_version(void);
SLICEWORKS_API const char* sw_last_error(void);
SLICEWORKS_API const char* sw_status_name(sw_status status);
/* Process exit code for a status: 0 ok, 1 parse errors, 3 non-convergence,
 * 2 for every other precondition or domain failure. */
SLICEWORKS_API int sw_exit_code(sw_status status);
SLICEWORKS_API void sw_string_free(char* s);

SLICEWORKS_API sw_status sw_parse_quaternion(const char* text, sw_quat* out);
SLICEWORKS_API sw_status sw_quaternion_to_json(const sw_quat* q, char** out_json);

/* Functions: polynomials, truncated power series and two-slice glued functions. */
SLICEWORKS_API sw_status sw_function_parse(const char* json, sw_function** out);
SLICEWORKS_API void sw_function_free(sw_function* f);
/* Includes any precondition warnings attached by sw_conjugate/sw_symmetrize. */
SLICEWORKS_API sw_status sw_function_to_json(const sw_function* f, char** out_json);
/* Evaluates at the point (q[0], ..., q[n-1]); all components must share one slice. */
SLICEWORKS_API sw_status sw_function_evaluate(const sw_function* f, const sw_quat* q, size_t n, sw_quat* out);
SLICEWORKS_API sw_status sw_star(const sw_function* f, const sw_function* g, sw_function** out);
/* omega may be NULL, in which case the result carries a PreconditionUnverified warning. */
SLICEWORKS_API sw_status sw_conjugate(const sw_function* f, const sw_domain* omega, sw_function** out);
SLICEWORKS_API sw_status sw_symmetrize(const sw_function* f, const sw_domain* omega, sw_function** out);

SLICEWORKS_API sw_status sw_domain_parse(const char* json, sw_domain** out);
SLICEWORKS_API void sw_domain_free(sw_domain* d);
SLICEWORKS_API sw_status sw_domain_to_json(const sw_domain* d, char** out_json);

SLICEWORKS_API sw_status sw_path_parse(const char* json, sw_path** out);
SLICEWORKS_API void sw_path_free(sw_path* p);

/* Slice units, radii and domain checks; path may be NULL. */
SLICEWORKS_API sw_status sw_domain_info(const sw_domain* d, const sw_path* path, uint64_t seed, char** out_json);

/* Zeros of a one-variable polynomial; domain NULL means the whole space. */
SLICEWORKS_API sw_status sw_find_zeros(const sw_function* f, const sw_domain* domain, uint64_t seed,
                                       int check_domain, sw_zeroset** out);
SLICEWORKS_API void sw_zeroset_free(sw_zeroset* z);
SLICEWORKS_API sw_status sw_zeroset_to_json(const sw_zeroset* z, char** out_json);
SLICEWORKS_API sw_status sw_zeroset_to_csv(const sw_zeroset* z, char** out_csv);
/* Spheres are traced at `units` sampled units of the imaginary sphere. */
SLICEWORKS_API sw_status sw_zeroset_plot_csv(const sw_zeroset* z, size_t units, uint64_t seed, char** out_csv);
/* Nonzero when the domain check requested from sw_find_zeros found a violation. */
SLICEWORKS_API int sw_zeroset_domain_check_failed(const sw_zeroset* z);

/* (1, I) [[1, J], [1, K]]^-1 (vJ, vK). */
SLICEWORKS_API sw_status sw_representation_extend(const sw_quat* vJ, const sw_quat* vK, const sw_quat* J,
                                                  const sw_quat* K, const sw_quat* I, sw_quat* out);

/* Runs the property suite twice (the second run checks determinism).
 * config_json may be NULL for the defaults. */
SLICEWORKS_API sw_status sw_run_check(const char* config_json, char** out_report_json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* SLICEWORKS_SLICEWORKS_H */
