/* bol: weighted Bergman function expansions on global-quotient orbifold
 * models, exact weight combinatorics included. C API over an internal C++
 * core; every object is an opaque handle and every call returns a status.
 * Returned strings are malloc'd; release them with bol_string_free. */
#ifndef BOL_H
#define BOL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BOL_API __declspec(dllexport)
#else
#define BOL_API __attribute__((visibility("default")))
#endif

typedef enum bol_status {
  BOL_OK = 0,
  BOL_E_INVALID = 1,
  BOL_E_NOT_SCHUR_POSITIVE = 2,
  BOL_E_NOT_FAITHFUL = 3,
  BOL_E_NOT_POSITIVE_DEFINITE = 4,
  BOL_E_ILL_CONDITIONED = 5,
  BOL_E_CONFIG = 6,
  BOL_E_NUMERIC = 7,
  BOL_E_UNKNOWN = 8
} bol_status;

typedef struct bol_weights bol_weights;
typedef struct bol_report bol_report;

BOL_API const char* bol_version(void);
/* Message for the most recent failure on this thread; never NULL. */
BOL_API const char* bol_last_error(void);
BOL_API void bol_string_free(char* s);

/* ---- weight tables ---- */
BOL_API bol_status bol_weights_rank2(long d, long p, bol_weights** out);
BOL_API bol_status bol_weights_cyclic_gen(long m, long L, bol_weights** out);
BOL_API bol_status bol_weights_from_json(const char* json_text, bol_weights** out);
BOL_API bol_status bol_weights_to_json(const bol_weights* w, char** out_json);
/* Re-derives a generated rank-2 table through the generic Schur
 * decomposition and compares entrywise. */
BOL_API bol_status bol_weights_schur_verify(const bol_weights* w);
/* Minimum total vanishing order over the excluded root-of-unity points;
 * writes -1 for an infinite order (ord = 1). */
BOL_API bol_status bol_weights_min_order(const bol_weights* w, long ord, long* out_order);
/* out_ok = 1 when the cyclic moment condition holds up to exponent L. */
BOL_API bol_status bol_weights_check_cyclic(const bol_weights* w, long m, long L, int* out_ok);
BOL_API void bol_weights_free(bol_weights* w);

/* ---- experiment pipeline ---- */
/* Parses a config, runs the full verify pipeline, writes any configured
 * output files. A report handle is produced unless the config is invalid. */
BOL_API bol_status bol_verify_run(const char* config_json, bol_report** out);
BOL_API bol_status bol_report_json(const bol_report* r, char** out_json);
BOL_API bol_status bol_report_text(const bol_report* r, char** out_text);
BOL_API bol_status bol_report_csv(const bol_report* r, char** out_csv);
BOL_API int bol_report_passed(const bol_report* r);
/* 0 pass, 1 tolerance failure, 4 config error, 5 numeric failure. */
BOL_API int bol_report_exit_code(const bol_report* r);
BOL_API void bol_report_free(bol_report* r);

/* Raw Bergman tables without fitting; quantity "borb" or "bik_trace",
 * format "csv" or "json". Byte-identical output for identical configs. */
BOL_API bol_status bol_table_run(const char* config_json, const char* quantity, long i,
                                 const char* format, char** out_data);

/* Smooth-model calibration report; out_ok = 1 when all conventions check. */
BOL_API bol_status bol_calibrate_run(char** out_json, char** out_text, int* out_ok);

#ifdef __cplusplus
}
#endif

#endif /* BOL_H */
