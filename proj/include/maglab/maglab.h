#ifndef MAGLAB_MAGLAB_H
#define MAGLAB_MAGLAB_H

#include <stdint.h>

#if defined(_WIN32)
#define MAGLAB_API __declspec(dllexport)
#else
#define MAGLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum maglab_status {
  MAGLAB_OK = 0,
  MAGLAB_BAD_N,
  MAGLAB_OUT_OF_RANGE,
  MAGLAB_TYPE_INVALID,
  MAGLAB_METRIC_VIOLATION,
  MAGLAB_NO_WITNESS,
  MAGLAB_INCOMPATIBLE_BACKENDS,
  MAGLAB_DIVISION_BY_ZERO,
  MAGLAB_NOT_REAL,
  MAGLAB_BAD_LENGTH,
  MAGLAB_TOO_LARGE,
  MAGLAB_ZERO_CONSTANT_TERM,
  MAGLAB_POSSIBLY_SINGULAR,
  MAGLAB_UNKNOWN_NAME,
  MAGLAB_CONDUCTOR_CAP,
  MAGLAB_PARSE,
  MAGLAB_INVALID_ARGUMENT,
  MAGLAB_INTERNAL
} maglab_status;

/* Finite metric space with exact distances. */
typedef struct maglab_space maglab_space;

/* Every char** output is a NUL-terminated JSON document owned by the caller
 * and released with maglab_string_free. On failure the output is untouched
 * and maglab_last_error() describes the failure. */

MAGLAB_API const char* maglab_version(void);
MAGLAB_API const char* maglab_status_name(maglab_status status);
/* {"error": name, "message": text} for the last failure on this thread. */
MAGLAB_API const char* maglab_last_error(void);
MAGLAB_API void maglab_string_free(char* s);

MAGLAB_API maglab_status maglab_set_conductor_cap(int cap);
MAGLAB_API int maglab_get_conductor_cap(void);

/* Names by index; NULL past the end. */
MAGLAB_API const char* maglab_suite_name(int index);
MAGLAB_API const char* maglab_fixture_name(int index);

/* family: "cycle" or "polygon". Output {"n": n, "d": [...]}. */
MAGLAB_API maglab_status maglab_type_json(const char* family, int n, char** out);

/* kind: "circular", "restricted" (uses m), "mutant" or "isomer".
 * type_json is a circular type as produced by maglab_type_json. */
MAGLAB_API maglab_status maglab_space_build(const char* kind, const char* type_json, int m, maglab_space** out);
/* One of the three spaces (index 0..2) on symbolic lengths a, b, c.
 * witness_json may be NULL or an object of rational values. */
MAGLAB_API maglab_status maglab_space_fig2(const char* a, const char* b, const char* c, const char* witness_json,
                                           int index, maglab_space** out);
MAGLAB_API maglab_status maglab_space_from_json(const char* text, maglab_space** out);
MAGLAB_API maglab_status maglab_space_to_json(const maglab_space* space, char** out);
MAGLAB_API int maglab_space_size(const maglab_space* space);
MAGLAB_API void maglab_space_free(maglab_space* space);
/* Metric axiom report; *ok is 1 when no violation was found. */
MAGLAB_API maglab_status maglab_space_validate(const maglab_space* space, char** out, int* ok);

/* Space JSON (when distances are exact) plus squared distances, points and
 * the Cayley-Menger verdict. */
MAGLAB_API maglab_status maglab_fixture_json(const char* name, char** out);

#define MAGLAB_MAGNITUDE_CLOSED_FORM 1u
#define MAGLAB_MAGNITUDE_PATH_ORACLE 2u

/* series_L: truncation exponent as a scalar string; NULL for 3 * max distance. */
MAGLAB_API maglab_status maglab_magnitude(const maglab_space* space, const char* series_L, unsigned flags, char** out);
/* Certified value at q = exp(-t) for rational t. */
MAGLAB_API maglab_status maglab_magnitude_at(const maglab_space* space, const char* t, int bits, char** out);
MAGLAB_API maglab_status maglab_riesz(const maglab_space* space, int z, char** out);

#define MAGLAB_COMPARE_MAGNITUDE 1u
#define MAGLAB_COMPARE_RIESZ 2u
#define MAGLAB_COMPARE_ISOMETRY 4u

MAGLAB_API maglab_status maglab_compare(const maglab_space* a, const maglab_space* b, unsigned flags, int isometry_cap,
                                        char** out, int* all_pass);

/* Solutions of F_n = 0 with the diff against the expected set. */
MAGLAB_API maglab_status maglab_fsolve(int n, char** out, int* all_pass);

typedef struct maglab_verify_options {
  uint64_t seed;
  int jobs;
  int property_cases;
  int isometry_cap;
  int timing; /* nonzero adds "seconds" to reports */
} maglab_verify_options;

MAGLAB_API void maglab_verify_options_init(maglab_verify_options* options);
/* options may be NULL for the defaults. */
MAGLAB_API maglab_status maglab_verify(const char* suite, const maglab_verify_options* options, char** out,
                                       int* all_pass);
MAGLAB_API maglab_status maglab_verify_fsolve(int lo, int hi, const maglab_verify_options* options, char** out,
                                              int* all_pass);
MAGLAB_API maglab_status maglab_report(int n, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
