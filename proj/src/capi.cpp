#include "ecwsa.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "core/chaos.hpp"
#include "core/dataset.hpp"
#include "core/engine.hpp"
#include "core/report.hpp"

using namespace ecwsa;

struct ecwsa_dataset {
  Dataset data;
};

struct ecwsa_report {
  RunReport report;
};

struct ecwsa_aggregate {
  AggregateStats stats;
};

namespace {

void write_error(char* errbuf, size_t errbuf_len, const std::string& msg) {
  if (!errbuf || errbuf_len == 0) return;
  const size_t n = std::min(errbuf_len - 1, msg.size());
  std::memcpy(errbuf, msg.data(), n);
  errbuf[n] = '\0';
}

// Runs fn, translating C++ failures into status codes.
template <typename Fn>
ecwsa_status guarded(char* errbuf, size_t errbuf_len, Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    write_error(errbuf, errbuf_len, e.what());
    return ECWSA_ERR_PARSE;
  } catch (const invalid_state_error& e) {
    write_error(errbuf, errbuf_len, e.what());
    return ECWSA_ERR_INVALID_STATE;
  } catch (const std::invalid_argument& e) {
    write_error(errbuf, errbuf_len, e.what());
    return ECWSA_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    write_error(errbuf, errbuf_len, "out of memory");
    return ECWSA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    write_error(errbuf, errbuf_len, e.what());
    return ECWSA_ERR_INTERNAL;
  }
}

RunConfig to_run_config(const ecwsa_config& c) {
  RunConfig cfg;
  cfg.population = c.population;
  cfg.max_iterations = c.max_iterations;
  cfg.death = c.death;
  cfg.base_population = c.base_population;
  cfg.alpha = c.alpha;
  cfg.beta = c.beta;
  cfg.spiral_b = c.spiral_b;
  cfg.chaos_map = static_cast<ChaosMap>(c.chaos_map);
  cfg.chaos_initial_p = c.chaos_initial_p;
  cfg.knn_k = c.knn_k;
  cfg.cv_folds = c.cv_folds;
  cfg.seed = c.seed;
  cfg.local_search = c.local_search != 0;
  cfg.mi_bins = c.mi_bins;
  return cfg;
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

ProgressFn wrap_progress(ecwsa_progress_fn progress, void* user) {
  if (!progress) return nullptr;
  return [progress, user](const TraceRow& row) {
    progress(row.iteration, row.population_size, row.best_fitness, row.best_accuracy, user);
  };
}

}  // namespace

extern "C" {

ecwsa_config ecwsa_config_default(void) {
  const RunConfig d;
  ecwsa_config c;
  c.population = d.population;
  c.max_iterations = d.max_iterations;
  c.death = d.death;
  c.base_population = d.base_population;
  c.alpha = d.alpha;
  c.beta = d.beta;
  c.spiral_b = d.spiral_b;
  c.chaos_map = static_cast<int>(d.chaos_map);
  c.chaos_initial_p = d.chaos_initial_p;
  c.knn_k = d.knn_k;
  c.cv_folds = d.cv_folds;
  c.seed = d.seed;
  c.local_search = d.local_search ? 1 : 0;
  c.mi_bins = d.mi_bins;
  return c;
}

ecwsa_status ecwsa_config_validate(const ecwsa_config* cfg, char* errbuf, size_t errbuf_len) {
  if (!cfg) {
    write_error(errbuf, errbuf_len, "cfg is null");
    return ECWSA_ERR_INVALID_ARGUMENT;
  }
  const auto errors = validate_config(to_run_config(*cfg));
  if (errors.empty()) return ECWSA_OK;
  std::string msg;
  for (const auto& e : errors) {
    if (!msg.empty()) msg += "; ";
    msg += e;
  }
  write_error(errbuf, errbuf_len, msg);
  return ECWSA_ERR_INVALID_ARGUMENT;
}

ecwsa_status ecwsa_chaos_map_from_name(const char* name, int* out_map) {
  if (!name || !out_map) return ECWSA_ERR_INVALID_ARGUMENT;
  const auto map = chaos_map_from_name(name);
  if (!map) return ECWSA_ERR_INVALID_ARGUMENT;
  *out_map = static_cast<int>(*map);
  return ECWSA_OK;
}

const char* ecwsa_chaos_map_name(int map) {
  if (map < 0 || map > static_cast<int>(ChaosMap::UniformRandom)) return "?";
  return to_string(static_cast<ChaosMap>(map));
}

ecwsa_status ecwsa_chaos_orbit(int map, double initial_p, int steps, uint64_t seed, double* out,
                               char* errbuf, size_t errbuf_len) {
  if (!out) {
    write_error(errbuf, errbuf_len, "out is null");
    return ECWSA_ERR_INVALID_ARGUMENT;
  }
  if (map < 0 || map > static_cast<int>(ChaosMap::UniformRandom)) {
    write_error(errbuf, errbuf_len, "unknown chaos map id");
    return ECWSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    ChaosState state = make_chaos_state(static_cast<ChaosMap>(map), initial_p, {}, seed);
    const auto orbit = chaos_orbit(state, steps);
    for (std::size_t i = 0; i < orbit.size(); ++i) out[i] = orbit[i];
    return ECWSA_OK;
  });
}

ecwsa_status ecwsa_dataset_load_csv(const char* path, int has_header, const char* label_col,
                                    ecwsa_dataset** out, char* errbuf, size_t errbuf_len) {
  if (!path || !out) {
    write_error(errbuf, errbuf_len, "path/out is null");
    return ECWSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    CsvOptions options;
    options.has_header = has_header != 0;
    if (label_col) options.label_column = label_col;
    Dataset loaded = load_csv(path, options);
    auto* handle = new ecwsa_dataset{min_max_normalize(loaded)};
    *out = handle;
    return ECWSA_OK;
  });
}

void ecwsa_dataset_free(ecwsa_dataset* dataset) { delete dataset; }

int ecwsa_dataset_num_features(const ecwsa_dataset* d) { return d ? d->data.num_features() : 0; }
int ecwsa_dataset_num_instances(const ecwsa_dataset* d) {
  return d ? d->data.num_instances() : 0;
}
int ecwsa_dataset_num_classes(const ecwsa_dataset* d) { return d ? d->data.num_classes() : 0; }
int ecwsa_dataset_rows_rejected(const ecwsa_dataset* d) { return d ? d->data.rows_rejected() : 0; }
uint64_t ecwsa_dataset_checksum(const ecwsa_dataset* d) { return d ? d->data.checksum() : 0; }
const char* ecwsa_dataset_name(const ecwsa_dataset* d) {
  return d ? d->data.name().c_str() : "";
}

ecwsa_status ecwsa_run(const ecwsa_dataset* dataset, const ecwsa_config* cfg,
                       ecwsa_progress_fn progress, void* user, ecwsa_report** out, char* errbuf,
                       size_t errbuf_len) {
  if (!dataset || !cfg || !out) {
    write_error(errbuf, errbuf_len, "dataset/cfg/out is null");
    return ECWSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    RunReport report = run(to_run_config(*cfg), dataset->data, wrap_progress(progress, user));
    *out = new ecwsa_report{std::move(report)};
    return ECWSA_OK;
  });
}

void ecwsa_report_free(ecwsa_report* report) { delete report; }

int ecwsa_report_iterations(const ecwsa_report* r) {
  return r ? static_cast<int>(r->report.trace.size()) : 0;
}

ecwsa_status ecwsa_report_trace_row(const ecwsa_report* r, int index, int* iteration,
                                    int* population_size, double* best_fitness,
                                    double* best_accuracy, int* best_selected) {
  if (!r || index < 0 || index >= static_cast<int>(r->report.trace.size()))
    return ECWSA_ERR_INVALID_ARGUMENT;
  const TraceRow& row = r->report.trace[static_cast<std::size_t>(index)];
  if (iteration) *iteration = row.iteration;
  if (population_size) *population_size = row.population_size;
  if (best_fitness) *best_fitness = row.best_fitness;
  if (best_accuracy) *best_accuracy = row.best_accuracy;
  if (best_selected) *best_selected = row.best_selected;
  return ECWSA_OK;
}

double ecwsa_report_best_fitness(const ecwsa_report* r) {
  return r && r->report.best.fitness ? r->report.best.fitness->fitness : 0.0;
}

double ecwsa_report_best_accuracy(const ecwsa_report* r) {
  return r && r->report.best.fitness ? r->report.best.fitness->accuracy : 0.0;
}

int ecwsa_report_best_selected_count(const ecwsa_report* r) {
  return r && r->report.best.fitness ? r->report.best.fitness->selected_count : 0;
}

ecwsa_status ecwsa_report_best_features(const ecwsa_report* r, int* out, int cap, int* written) {
  if (!r || !out || cap < 0) return ECWSA_ERR_INVALID_ARGUMENT;
  const auto features = selected_features(r->report.best.bitmask);
  const int n = static_cast<int>(features.size());
  for (int i = 0; i < std::min(cap, n); ++i) out[i] = features[static_cast<std::size_t>(i)];
  if (written) *written = n;
  return ECWSA_OK;
}

long long ecwsa_report_total_evaluations(const ecwsa_report* r) {
  return r ? r->report.total_evaluations : 0;
}

double ecwsa_report_wall_time_seconds(const ecwsa_report* r) {
  return r ? r->report.wall_time_seconds : 0.0;
}

char* ecwsa_report_to_json(const ecwsa_report* r, const char* variant) {
  if (!r) return nullptr;
  return dup_string(report_to_json(r->report, variant ? variant : "custom"));
}

char* ecwsa_report_convergence_csv(const ecwsa_report* r) {
  if (!r) return nullptr;
  return dup_string(convergence_csv(r->report));
}

void ecwsa_string_free(char* str) { delete[] str; }

ecwsa_status ecwsa_repeat_runs(const ecwsa_dataset* dataset, const ecwsa_config* cfg, int runs,
                               ecwsa_progress_fn progress, void* user, ecwsa_aggregate** out,
                               char* errbuf, size_t errbuf_len) {
  if (!dataset || !cfg || !out) {
    write_error(errbuf, errbuf_len, "dataset/cfg/out is null");
    return ECWSA_ERR_INVALID_ARGUMENT;
  }
  return guarded(errbuf, errbuf_len, [&] {
    AggregateStats stats =
        repeat_runs(to_run_config(*cfg), dataset->data, runs, wrap_progress(progress, user));
    *out = new ecwsa_aggregate{std::move(stats)};
    return ECWSA_OK;
  });
}

void ecwsa_aggregate_free(ecwsa_aggregate* aggregate) { delete aggregate; }

int ecwsa_aggregate_runs(const ecwsa_aggregate* a) { return a ? a->stats.runs : 0; }
double ecwsa_aggregate_accuracy_min(const ecwsa_aggregate* a) {
  return a ? a->stats.accuracy_min : 0.0;
}
double ecwsa_aggregate_accuracy_avg(const ecwsa_aggregate* a) {
  return a ? a->stats.accuracy_avg : 0.0;
}
double ecwsa_aggregate_accuracy_std(const ecwsa_aggregate* a) {
  return a ? a->stats.accuracy_std : 0.0;
}
double ecwsa_aggregate_accuracy_max(const ecwsa_aggregate* a) {
  return a ? a->stats.accuracy_max : 0.0;
}
double ecwsa_aggregate_mean_fitness(const ecwsa_aggregate* a) {
  return a ? a->stats.fitness_avg : 0.0;
}
double ecwsa_aggregate_mean_selected_pct(const ecwsa_aggregate* a) {
  return a ? a->stats.mean_selected_pct : 0.0;
}

char* ecwsa_aggregate_to_json(const ecwsa_aggregate* a, const char* variant,
                              const char* dataset_name) {
  if (!a) return nullptr;
  return dup_string(aggregate_to_json(a->stats, variant ? variant : "custom",
                                      dataset_name ? dataset_name : ""));
}

char* ecwsa_aggregate_csv_row(const ecwsa_aggregate* a, const char* variant,
                              const char* dataset_name) {
  if (!a) return nullptr;
  return dup_string(aggregate_csv_row(a->stats, variant ? variant : "custom",
                                      dataset_name ? dataset_name : ""));
}

const char* ecwsa_aggregate_csv_header(void) {
  static const std::string header = aggregate_csv_header();
  return header.c_str();
}

}  // extern "C"
