/* ecwsa — chaotic whale survival feature selection, C API.
 *
 * The core is C++; this header is the stable extern-C surface exposed by the
 * shared library. Objects are opaque handles released with their matching
 * _free function. Functions returning ecwsa_status write a human-readable
 * message into the caller's error buffer on failure (always NUL-terminated,
 * possibly truncated).
 */
#ifndef ECWSA_H
#define ECWSA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ECWSA_API __declspec(dllexport)
#else
#define ECWSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecwsa_status {
  ECWSA_OK = 0,
  ECWSA_ERR_INVALID_ARGUMENT = 1,
  ECWSA_ERR_PARSE = 2,
  ECWSA_ERR_IO = 3,
  ECWSA_ERR_INVALID_STATE = 4,
  ECWSA_ERR_INTERNAL = 5
} ecwsa_status;

typedef enum ecwsa_chaos_map {
  ECWSA_CHAOS_CIRCULAR = 0,
  ECWSA_CHAOS_LOGISTIC = 1,
  ECWSA_CHAOS_PIECEWISE = 2,
  ECWSA_CHAOS_TENT = 3,
  ECWSA_CHAOS_UNIFORM_RANDOM = 4
} ecwsa_chaos_map;

/* ---- configuration ---------------------------------------------------- */

typedef struct ecwsa_config {
  int population;        /* initial whale count, >= 3 */
  int max_iterations;    /* >= 1 */
  double death;          /* fraction dropped per iteration, in [0,1) */
  int base_population;   /* population floor, >= 3 and <= population */
  double alpha;          /* accuracy weight; alpha + beta must equal 1 */
  double beta;           /* subset-size weight */
  double spiral_b;       /* spiral shape constant, > 0 */
  int chaos_map;         /* ecwsa_chaos_map value */
  double chaos_initial_p;/* in [0,1] */
  int knn_k;             /* >= 1 */
  int cv_folds;          /* >= 2 */
  uint64_t seed;
  int local_search;      /* 0 or 1 */
  int mi_bins;           /* >= 2 */
} ecwsa_config;

ECWSA_API ecwsa_config ecwsa_config_default(void);

/* Reports every violated constraint in errbuf, not just the first. */
ECWSA_API ecwsa_status ecwsa_config_validate(const ecwsa_config* cfg, char* errbuf,
                                             size_t errbuf_len);

/* ---- chaotic maps ------------------------------------------------------ */

/* Accepts "circular", "logistic", "piecewise", "tent", "uniform-random". */
ECWSA_API ecwsa_status ecwsa_chaos_map_from_name(const char* name, int* out_map);
ECWSA_API const char* ecwsa_chaos_map_name(int map);

/* Writes `steps` successive p values starting from initial_p into out.
 * A seed is only consumed by the uniform-random map. */
ECWSA_API ecwsa_status ecwsa_chaos_orbit(int map, double initial_p, int steps, uint64_t seed,
                                         double* out, char* errbuf, size_t errbuf_len);

/* ---- datasets ----------------------------------------------------------- */

typedef struct ecwsa_dataset ecwsa_dataset;

/* Loads a numeric CSV and min-max normalizes every feature column to [0,1].
 * label_col: NULL for the last column, else a 0-based index or (with
 * has_header) a column name. Rows with missing cells ("?", "", "NA") are
 * dropped and counted. */
ECWSA_API ecwsa_status ecwsa_dataset_load_csv(const char* path, int has_header,
                                              const char* label_col, ecwsa_dataset** out,
                                              char* errbuf, size_t errbuf_len);
ECWSA_API void ecwsa_dataset_free(ecwsa_dataset* dataset);

ECWSA_API int ecwsa_dataset_num_features(const ecwsa_dataset* dataset);
ECWSA_API int ecwsa_dataset_num_instances(const ecwsa_dataset* dataset);
ECWSA_API int ecwsa_dataset_num_classes(const ecwsa_dataset* dataset);
ECWSA_API int ecwsa_dataset_rows_rejected(const ecwsa_dataset* dataset);
ECWSA_API uint64_t ecwsa_dataset_checksum(const ecwsa_dataset* dataset);
ECWSA_API const char* ecwsa_dataset_name(const ecwsa_dataset* dataset);

/* ---- single runs -------------------------------------------------------- */

typedef struct ecwsa_report ecwsa_report;

/* Progress callback, invoked once per iteration. */
typedef void (*ecwsa_progress_fn)(int iteration, int population_size, double best_fitness,
                                  double best_accuracy, void* user);

/* Runs the optimizer. Deterministic for a given (config, dataset) regardless
 * of worker count; ECWSA_THREADS caps the workers. */
ECWSA_API ecwsa_status ecwsa_run(const ecwsa_dataset* dataset, const ecwsa_config* cfg,
                                 ecwsa_progress_fn progress, void* user, ecwsa_report** out,
                                 char* errbuf, size_t errbuf_len);
ECWSA_API void ecwsa_report_free(ecwsa_report* report);

ECWSA_API int ecwsa_report_iterations(const ecwsa_report* report);
ECWSA_API ecwsa_status ecwsa_report_trace_row(const ecwsa_report* report, int index,
                                              int* iteration, int* population_size,
                                              double* best_fitness, double* best_accuracy,
                                              int* best_selected);
ECWSA_API double ecwsa_report_best_fitness(const ecwsa_report* report);
ECWSA_API double ecwsa_report_best_accuracy(const ecwsa_report* report);
ECWSA_API int ecwsa_report_best_selected_count(const ecwsa_report* report);
/* Copies up to cap selected feature indices into out; *written gets the
 * subset size. */
ECWSA_API ecwsa_status ecwsa_report_best_features(const ecwsa_report* report, int* out, int cap,
                                                  int* written);
ECWSA_API long long ecwsa_report_total_evaluations(const ecwsa_report* report);
ECWSA_API double ecwsa_report_wall_time_seconds(const ecwsa_report* report);

/* Strings are heap-allocated; release with ecwsa_string_free. The report
 * JSON is byte-stable for identical inputs once its "timestamp" field is
 * ignored. variant may be NULL ("custom"). */
ECWSA_API char* ecwsa_report_to_json(const ecwsa_report* report, const char* variant);
ECWSA_API char* ecwsa_report_convergence_csv(const ecwsa_report* report);
ECWSA_API void ecwsa_string_free(char* str);

/* ---- repeated runs ------------------------------------------------------ */

typedef struct ecwsa_aggregate ecwsa_aggregate;

ECWSA_API ecwsa_status ecwsa_repeat_runs(const ecwsa_dataset* dataset, const ecwsa_config* cfg,
                                         int runs, ecwsa_progress_fn progress, void* user,
                                         ecwsa_aggregate** out, char* errbuf, size_t errbuf_len);
ECWSA_API void ecwsa_aggregate_free(ecwsa_aggregate* aggregate);

ECWSA_API int ecwsa_aggregate_runs(const ecwsa_aggregate* aggregate);
ECWSA_API double ecwsa_aggregate_accuracy_min(const ecwsa_aggregate* aggregate);
ECWSA_API double ecwsa_aggregate_accuracy_avg(const ecwsa_aggregate* aggregate);
ECWSA_API double ecwsa_aggregate_accuracy_std(const ecwsa_aggregate* aggregate);
ECWSA_API double ecwsa_aggregate_accuracy_max(const ecwsa_aggregate* aggregate);
ECWSA_API double ecwsa_aggregate_mean_fitness(const ecwsa_aggregate* aggregate);
ECWSA_API double ecwsa_aggregate_mean_selected_pct(const ecwsa_aggregate* aggregate);

ECWSA_API char* ecwsa_aggregate_to_json(const ecwsa_aggregate* aggregate, const char* variant,
                                        const char* dataset_name);
ECWSA_API char* ecwsa_aggregate_csv_row(const ecwsa_aggregate* aggregate, const char* variant,
                                        const char* dataset_name);
ECWSA_API const char* ecwsa_aggregate_csv_header(void);

#ifdef __cplusplus
}
#endif

#endif /* ECWSA_H */
