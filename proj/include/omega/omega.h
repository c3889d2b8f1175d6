/*
 * C interface to the Omega elimination engine.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an omega_status;
 * on failure the thread's last error message is available through
 * omega_last_error() until the next call on the same thread. Strings
 * returned through char** out-parameters are released with omega_string_free.
 */
#ifndef OMEGA_OMEGA_H
#define OMEGA_OMEGA_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(OMEGA_BUILDING_LIBRARY)
#    define OMEGA_API __declspec(dllexport)
#  else
#    define OMEGA_API __declspec(dllimport)
#  endif
#else
#  define OMEGA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum omega_status {
  OMEGA_OK = 0,
  OMEGA_ERR_INVALID_ARGUMENT = 1,
  OMEGA_ERR_PARSE = 2,
  OMEGA_ERR_STRUCTURE = 3,
  OMEGA_ERR_K_TOO_LARGE = 4,
  OMEGA_ERR_REPEATED_GENERATORS = 5,
  OMEGA_ERR_PRECONDITION = 6,
  OMEGA_ERR_DISAGREEMENT = 7,
  OMEGA_ERR_ALGEBRA = 8,
  OMEGA_ERR_INTERNAL = 9
} omega_status;

typedef enum omega_method {
  OMEGA_METHOD_SCHUR = 0,
  OMEGA_METHOD_LAGRANGE = 1,
  OMEGA_METHOD_SERIES = 2
} omega_method;

typedef enum omega_format {
  OMEGA_FORMAT_TEXT = 0,
  OMEGA_FORMAT_JSON = 1
} omega_format;

/* Flags for omega_cross_check. */
#define OMEGA_CHECK_CORRUPT_NUMERATOR 0x1u

typedef struct omega_problem omega_problem;
typedef struct omega_result omega_result;
typedef struct omega_report omega_report;

OMEGA_API const char* omega_status_name(omega_status status);
OMEGA_API const char* omega_last_error(void);
OMEGA_API void omega_string_free(char* s);

/* Parses "omega(lambda^k / ((1-x1*lambda)*...*(1-y/lambda)))". lambda_name
 * may be NULL. */
OMEGA_API omega_status omega_problem_parse(const char* expr, const char* lambda_name,
                                           omega_problem** out);
/* x_list and y_list are comma-separated letters such as "x1,q^2*t"; y_list
 * may be NULL or empty. */
OMEGA_API omega_status omega_problem_from_letters(int k, const char* x_list,
                                                  const char* y_list, omega_problem** out);
/* Appends r letters to X that every evaluation specializes to 0. */
OMEGA_API omega_status omega_problem_pad(const omega_problem* p, int r, omega_problem** out);
OMEGA_API omega_status omega_problem_render(const omega_problem* p, char** out);
OMEGA_API int omega_problem_k(const omega_problem* p);
OMEGA_API int omega_problem_n(const omega_problem* p);
OMEGA_API int omega_problem_m(const omega_problem* p);
OMEGA_API void omega_problem_free(omega_problem* p);

/* truncation is used by OMEGA_METHOD_SERIES only. */
OMEGA_API omega_status omega_evaluate(const omega_problem* p, omega_method method,
                                      int truncation, omega_result** out);
OMEGA_API omega_status omega_result_render(const omega_result* r, omega_format format,
                                           char** out);
OMEGA_API void omega_result_free(omega_result* r);

/* A disagreement between methods is not an error here: the report is
 * returned with OMEGA_OK and omega_report_passed() == 0. */
OMEGA_API omega_status omega_cross_check(const omega_problem* p, int truncation,
                                         unsigned flags, omega_report** out);
OMEGA_API int omega_report_passed(const omega_report* r);
OMEGA_API omega_status omega_report_render(const omega_report* r, omega_format format,
                                           char** out);
OMEGA_API void omega_report_free(omega_report* r);

#ifdef __cplusplus
}
#endif

#endif /* OMEGA_OMEGA_H */
