/* C interface to the veesys library.
 *
 * Every call returns a veesys_status; on failure veesys_last_error() holds a
 * message for the calling thread until its next call.  Objects returned
 * through out-parameters are owned by the caller: release systems with
 * veesys_free and strings with veesys_string_free.  Optional out-parameters
 * may be NULL. */
#ifndef VEESYS_VEESYS_H
#define VEESYS_VEESYS_H

#include <stddef.h>
#include <stdint.h>

#if defined(VEESYS_BUILDING_LIBRARY)
#define VEESYS_API __attribute__((visibility("default")))
#else
#define VEESYS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct veesys_system veesys_system;

typedef enum veesys_status {
  VEESYS_OK = 0,
  VEESYS_E_ZERO_COVECTOR,
  VEESYS_E_DEGENERATE_FORM,
  VEESYS_E_SAMPLING_EXHAUSTED,
  VEESYS_E_INVALID_SPEC,
  VEESYS_E_SINGULAR_POINT,
  VEESYS_E_EMPTY_SUBSPACE,
  VEESYS_E_EMPTY_RESTRICTION,
  VEESYS_E_INDEFINITE_FORM,
  VEESYS_E_PRECONDITION,
  VEESYS_E_PARSE,
  VEESYS_E_IO,
  VEESYS_E_INVALID_ARGUMENT,
  VEESYS_E_INTERNAL
} veesys_status;

typedef struct veesys_tolerance {
  double eps_rank;
  double eps_residual;
  double eps_regular;
  uint64_t rng_seed;
  int max_draws;
} veesys_tolerance;

VEESYS_API veesys_tolerance veesys_tolerance_default(void);
VEESYS_API const char* veesys_status_name(veesys_status status);
VEESYS_API const char* veesys_last_error(void);

/* Spec strings such as "F4:lambda=1" or "Fn:n=5,lambda=sqrt(6),M=1". */
VEESYS_API veesys_status veesys_build(const char* spec, veesys_system** out);
VEESYS_API veesys_status veesys_load(const char* path, veesys_system** out);
VEESYS_API veesys_status veesys_from_json(const char* json, veesys_system** out);
VEESYS_API veesys_status veesys_to_json(const veesys_system* system, char** out);
VEESYS_API veesys_status veesys_save(const veesys_system* system, const char* path);
VEESYS_API void veesys_free(veesys_system* system);
VEESYS_API void veesys_string_free(char* text);

/* Accessors return 0 / NULL for a NULL system. */
VEESYS_API int veesys_dim(const veesys_system* system);
VEESYS_API size_t veesys_count(const veesys_system* system);
VEESYS_API const char* veesys_name(const veesys_system* system);
/* Copies covector `index` into out[0..dim). */
VEESYS_API veesys_status veesys_covector(const veesys_system* system, size_t index, double* out,
                                         size_t out_len);

/* tol may be NULL for the defaults. */
VEESYS_API veesys_status veesys_check(const veesys_system* system, const veesys_tolerance* tol,
                                      int* is_vee, char** report_json);
VEESYS_API veesys_status veesys_wdvv_sweep(const veesys_system* system,
                                           const veesys_tolerance* tol, size_t points,
                                           double* max_residual, double* margin);
/* along: comma-separated covector literals ("e7-e8,e7+e8") or 0-based indices. */
VEESYS_API veesys_status veesys_restrict(const veesys_system* system, const char* along,
                                         const veesys_tolerance* tol, veesys_system** out,
                                         char** merge_log_json);
VEESYS_API veesys_status veesys_equivalent(const veesys_system* a, const veesys_system* b,
                                           const veesys_tolerance* tol, int* equivalent,
                                           char** certificate_json);

/* group: "E6", "E7", "E8" or "F4"; lambda is used by F4 only, NaN selects 1. */
VEESYS_API veesys_status veesys_catalog(const char* group, double lambda, char** jsonl);
VEESYS_API veesys_status veesys_verify_equivalence_table(int* all_pass, char** report_json);
VEESYS_API veesys_status veesys_verify_theorem4(int* all_pass, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* VEESYS_VEESYS_H */
