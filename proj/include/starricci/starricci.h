#ifndef STARRICCI_H
#define STARRICCI_H

/* C interface to the starricci engine. All handles are opaque; every call
 * that can fail returns an sr_status and leaves a message retrievable with
 * sr_last_error_message() on the calling thread. Strings returned through
 * out-parameters are owned by the caller and released with sr_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SR_API __declspec(dllexport)
#else
#define SR_API __attribute__((visibility("default")))
#endif

typedef enum sr_status {
  SR_OK = 0,
  SR_ERR_PARSE = 1,
  SR_ERR_UNKNOWN_SYMBOL = 2,
  SR_ERR_DIVISION_BY_ZERO = 3,
  SR_ERR_INCONSISTENT = 4,
  SR_ERR_DOMAIN = 5,
  SR_ERR_INVALID_ARGUMENT = 6,
  SR_ERR_PROOF_FAILURE = 7,
  SR_ERR_CATALOG = 8,
  SR_ERR_IO = 9,
  SR_ERR_INTERNAL = 10
} sr_status;

typedef enum sr_format { SR_FORMAT_TEXT = 0, SR_FORMAT_JSON = 1 } sr_format;

typedef struct sr_session sr_session;
typedef struct sr_report sr_report;

SR_API const char* sr_version(void);
SR_API const char* sr_status_string(sr_status status);
/* Message of the last failed call on this thread; "" if none. */
SR_API const char* sr_last_error_message(void);
SR_API void sr_string_free(char* s);

/* Session: tolerances (oracle 1e-9, witness 1e-6), sample count (100) and the
 * family catalog (built-in until one is loaded). */
SR_API sr_status sr_session_create(sr_session** out);
SR_API void sr_session_destroy(sr_session* session);
SR_API sr_status sr_session_set_tolerances(sr_session* session, double tol_oracle, double tol_witness);
SR_API sr_status sr_session_set_samples(sr_session* session, int samples);
SR_API sr_status sr_session_load_catalog(sr_session* session, const char* path);

/* Commands. Each produces a report on success. */

/* target: "nonhopf", "hopf", "quadratic", "type-b" or "all"; space: "cp2",
 * "ch2" or NULL for both. A failing proof still yields a report whose
 * sr_report_passed() is 0. */
SR_API sr_status sr_prove(sr_session* session, const char* target, const char* space, sr_report** out);

/* tensor: "star-ricci" or "ricci"; context: "nonhopf" or "hopf"; assumptions
 * are "name=expr" strings; L may be NULL. */
SR_API sr_status sr_check(sr_session* session, const char* tensor, const char* condition, const char* context,
                          const char* const* assumptions, size_t n_assumptions, const char* L, sr_report** out);

SR_API sr_status sr_sweep(sr_session* session, const char* family, double r_min, double r_max, int samples,
                          const char* condition, double L, sr_report** out);

SR_API sr_status sr_expr_eval(sr_session* session, const char* text, const char* const* bindings, size_t n_bindings,
                              sr_report** out);
SR_API sr_status sr_expr_solve(sr_session* session, const char* text, const char* unknown, sr_report** out);

/* Reports. */
SR_API sr_status sr_report_render(const sr_report* report, sr_format format, char** out);
SR_API int sr_report_passed(const sr_report* report);
SR_API sr_status sr_report_parse_json(const char* text, sr_report** out);
SR_API void sr_report_destroy(sr_report* report);

#ifdef __cplusplus
}
#endif

#endif
