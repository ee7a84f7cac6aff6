/*
 * hookforge C API.
 *
 * Opaque handles, status codes, and C strings. Strings returned through a
 * handle stay valid until that handle is destroyed; strings returned through
 * a char** out-parameter are owned by the caller and released with
 * hf_string_free(). hf_last_error() describes the most recent failure on the
 * calling thread.
 */
#ifndef HOOKFORGE_H
#define HOOKFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef HOOKFORGE_BUILDING_LIBRARY
#    define HF_API __declspec(dllexport)
#  else
#    define HF_API __declspec(dllimport)
#  endif
#else
#  define HF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
    HF_OK = 0,
    HF_ERR_NULL_ARGUMENT = 1,
    HF_ERR_INVALID_ARGUMENT = 2,
    HF_ERR_UNKNOWN_CHECK = 3,
    HF_ERR_OUT_OF_RANGE = 4,
    HF_ERR_ARITHMETIC = 5,
    HF_ERR_INTERNAL = 6
} hf_status;

typedef enum hf_format { HF_FORMAT_TEXT = 0, HF_FORMAT_JSON = 1 } hf_format;

typedef struct hf_config hf_config;
typedef struct hf_report_set hf_report_set;

/* Called once per finished check with a one-line summary. */
typedef void (*hf_progress_fn)(const char* line, void* user);

HF_API const char* hf_version(void);
HF_API const char* hf_last_error(void);
HF_API const char* hf_status_name(hf_status status);
HF_API void hf_string_free(char* s);

/* ---- verification runs ------------------------------------------------ */

HF_API hf_status hf_config_create(hf_config** out);
HF_API void hf_config_destroy(hf_config* config);

/* all | theorem1 | theorem1prime | lemma1 | prop2 | prop3 | bijection |
 * egf | substitution */
HF_API hf_status hf_config_set_check(hf_config* config, const char* selector);
HF_API hf_status hf_config_set_max_n(hf_config* config, int64_t max_n);
HF_API hf_status hf_config_set_order(hf_config* config, int64_t order);
HF_API hf_status hf_config_set_trials(hf_config* config, int64_t trials);
HF_API hf_status hf_config_set_seed(hf_config* config, uint64_t seed);
/* 0 = hardware concurrency; HOOKFORGE_THREADS caps the count. */
HF_API hf_status hf_config_set_threads(hf_config* config, int64_t threads);
HF_API hf_status hf_config_set_timings(hf_config* config, int enabled);
HF_API hf_status hf_config_set_progress(hf_config* config, hf_progress_fn fn, void* user);

HF_API hf_status hf_run(const hf_config* config, hf_report_set** out);
HF_API void hf_report_set_destroy(hf_report_set* reports);

HF_API size_t hf_report_count(const hf_report_set* reports);
HF_API size_t hf_report_failures(const hf_report_set* reports);
/* check name, verdict (1 = pass) and witness (NULL on pass) of one report. */
HF_API hf_status hf_report_get(const hf_report_set* reports, size_t index, const char** check, int* passed,
                               const char** witness);
/* Renders the whole set; the string is owned by the report set. */
HF_API hf_status hf_report_render(hf_report_set* reports, hf_format format, const char** out);

/* ---- direct computations ---------------------------------------------- */
/* Results are canonical text forms, released with hf_string_free(). */

/* phi_n = sum_{lambda |- n} f^lambda w(lambda), a rational function in q. */
HF_API hf_status hf_phi(int n, char** out);
/* psi_n = sum over involutions of w(1)^{fixed points}. */
HF_API hf_status hf_psi(int n, char** out);
/* rho(n, z). */
HF_API hf_status hf_rho(int n, char** out);
/* w(lambda) for a partition written "3,1" ("-" for the empty one). */
HF_API hf_status hf_weight(const char* partition, char** out);
/* Number of standard Young tableaux of the shape. */
HF_API hf_status hf_f_lambda(const char* partition, char** out);
/* Hook lengths of the shape, row by row: "4 2 1/1". */
HF_API hf_status hf_hooks(const char* partition, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HOOKFORGE_H */
