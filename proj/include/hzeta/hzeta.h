/* C interface to the hzeta library.
 *
 * Every fallible call returns an hz_status; on failure hz_last_error() holds a
 * message for the calling thread. Strings returned through char** belong to the
 * caller and are released with hz_string_free. Handles are released with their
 * own _free function; passing NULL to any _free function is a no-op.
 */
#ifndef HZETA_H
#define HZETA_H

#include <stddef.h>

#if defined(_WIN32)
#define HZ_API __declspec(dllexport)
#else
#define HZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hz_status {
  HZ_OK = 0,
  HZ_INVALID_ARGUMENT = 1,
  HZ_GAMMA_POLE = 2,
  HZ_PRECISION_UNREACHABLE = 3,
  HZ_DIVERGENT_PARAMETERS = 4,
  HZ_TAIL_BOUND_FAILURE = 5,
  HZ_DIVISION_BY_ZERO = 6,
  HZ_NONCONSTANT_TERM = 7,
  HZ_BRACKET_FAILURE = 8,
  HZ_CERTIFICATION_FAILURE = 9,
  HZ_INSUFFICIENT_SPECTRUM = 10,
  HZ_ZETA_POLE = 11,
  HZ_RADIUS_EXCEEDED = 12,
  HZ_INSUFFICIENT_TERMS = 13,
  HZ_UNKNOWN_IDENTIFIER = 14,
  HZ_NOT_A_MULTIPLE = 15,
  HZ_INTERNAL_INCONSISTENCY = 16,
  HZ_IO_ERROR = 17,
  HZ_NULL_ARGUMENT = 100,
  HZ_UNEXPECTED = 101
} hz_status;

typedef struct hz_config hz_config;
typedef struct hz_spectrum hz_spectrum;
typedef struct hz_report hz_report;

HZ_API const char* hz_version(void);
HZ_API const char* hz_status_name(hz_status status);
/* Message of the last failed call on this thread; "" if none. */
HZ_API const char* hz_last_error(void);
HZ_API void hz_string_free(char* s);

/* Run configuration: digits, count, N, nmax, format, out, timing. */
HZ_API hz_status hz_config_new(hz_config** out);
HZ_API void hz_config_free(hz_config* config);
HZ_API hz_status hz_config_set(hz_config* config, const char* key, const char* value);
/* Applies "key = value" lines from a file on top of the current values. */
HZ_API hz_status hz_config_load(hz_config* config, const char* path);
HZ_API hz_status hz_config_get(const hz_config* config, const char* key, char** out);
HZ_API hz_status hz_config_validate(const hz_config* config);

/* Eigenvalues of one parity ("+", "-", "plus", "minus"). */
HZ_API hz_status hz_spectrum_compute(int N, const char* parity, int count, int digits, hz_spectrum** out);
HZ_API void hz_spectrum_free(hz_spectrum* spectrum);
HZ_API hz_status hz_spectrum_size(const hz_spectrum* spectrum, size_t* out);
HZ_API hz_status hz_spectrum_eigenvalue(const hz_spectrum* spectrum, size_t index, int digits, char** out);
/* format: "json" or "csv". */
HZ_API hz_status hz_spectrum_export(const hz_spectrum* spectrum, const char* format, char** out);
HZ_API hz_status hz_spectrum_import(const char* json, hz_spectrum** out);

/* Decimal value of a closed-form catalog entry. */
HZ_API hz_status hz_closed_form(const char* id, int param, int digits, char** out);
/* Catalog as "id<TAB>parameter<TAB>description" lines. */
HZ_API hz_status hz_closed_form_catalog(char** out);

/* Commands, rendered in the configured format. parity: "+", "-" or "both";
 * kind: "full", "twisted", "plus", "minus" or "all"; model: "fitted" or "two-term". */
HZ_API hz_status hz_run_spectrum(const hz_config* config, const char* parity, char** out);
HZ_API hz_status hz_run_zeta(const hz_config* config, const char* kind, const char* model, char** out);
HZ_API hz_status hz_run_derive(const hz_config* config, char** out);
HZ_API hz_status hz_run_table(const hz_config* config, char** out);

HZ_API hz_status hz_run_verify(const hz_config* config, hz_report** out);
HZ_API void hz_report_free(hz_report* report);
/* 1 when every check passed, 0 otherwise (and for NULL). */
HZ_API int hz_report_passed(const hz_report* report);
HZ_API size_t hz_report_check_count(const hz_report* report);
HZ_API size_t hz_report_failure_count(const hz_report* report);
/* Id of the i-th failed check. */
HZ_API hz_status hz_report_failure_id(const hz_report* report, size_t index, char** out);
/* format NULL uses the configured one. */
HZ_API hz_status hz_report_render(const hz_report* report, const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif
