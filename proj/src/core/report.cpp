#include "report.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ecwsa {

namespace {

std::string checksum_hex(std::uint64_t checksum) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, checksum);
  return buf;
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {
      {"population", cfg.population},
      {"max_iterations", cfg.max_iterations},
      {"death", cfg.death},
      {"base", cfg.base_population},
      {"alpha", cfg.alpha},
      {"beta", cfg.beta},
      {"spiral_b", cfg.spiral_b},
      {"chaos_map", to_string(cfg.chaos_map)},
      {"chaos_initial_p", cfg.chaos_initial_p},
      {"knn_k", cfg.knn_k},
      {"cv_folds", cfg.cv_folds},
      {"seed", cfg.seed},
      {"local_search", cfg.local_search},
      {"mi_bins", cfg.mi_bins},
  };
}

nlohmann::json dataset_json(const DatasetSummary& ds) {
  return {
      {"name", ds.name},
      {"checksum_fnv1a64", checksum_hex(ds.checksum)},
      {"features", ds.features},
      {"instances", ds.instances},
      {"classes", ds.classes},
      {"rows_rejected", ds.rows_rejected},
  };
}

}  // namespace

std::string report_to_json(const RunReport& report, const std::string& variant) {
  nlohmann::json j;
  j["schema"] = "ecwsa.report.v1";
  j["variant"] = variant;
  j["config"] = config_json(report.config);
  j["dataset"] = dataset_json(report.dataset);

  nlohmann::json trace = nlohmann::json::array();
  for (const TraceRow& row : report.trace) {
    trace.push_back({
        {"iteration", row.iteration},
        {"population", row.population_size},
        {"best_fitness", row.best_fitness},
        {"best_accuracy", row.best_accuracy},
        {"best_selected", row.best_selected},
    });
  }
  j["trace"] = std::move(trace);

  const FitnessRecord& best = report.best.fitness.value();
  j["best"] = {
      {"fitness", best.fitness},
      {"accuracy", best.accuracy},
      {"selected_count", best.selected_count},
      {"selected_pct",
       100.0 * static_cast<double>(best.selected_count) /
           static_cast<double>(report.dataset.features)},
      {"features", selected_features(report.best.bitmask)},
  };
  j["total_evaluations"] = report.total_evaluations;
  j["local_search_skips"] = report.local_search_skips;
  j["timestamp"] = {
      {"generated_at", report.generated_at},
      {"wall_time_seconds", report.wall_time_seconds},
  };
  return j.dump(2) + "\n";
}

std::string convergence_csv(const RunReport& report) {
  std::ostringstream out;
  out << "iteration,best_accuracy\n";
  char buf[64];
  for (const TraceRow& row : report.trace) {
    std::snprintf(buf, sizeof(buf), "%d,%.9f\n", row.iteration, row.best_accuracy);
    out << buf;
  }
  return out.str();
}

std::string aggregate_to_json(const AggregateStats& agg, const std::string& variant,
                              const std::string& dataset_name) {
  nlohmann::json j;
  j["schema"] = "ecwsa.aggregate.v1";
  j["variant"] = variant;
  j["dataset"] = dataset_name;
  j["runs"] = agg.runs;
  j["std_convention"] = "population (divide by runs)";
  j["accuracy"] = {
      {"min", agg.accuracy_min},
      {"avg", agg.accuracy_avg},
      {"std", agg.accuracy_std},
      {"max", agg.accuracy_max},
  };
  j["fitness"] = {
      {"min", agg.fitness_min},
      {"avg", agg.fitness_avg},
      {"std", agg.fitness_std},
      {"max", agg.fitness_max},
  };
  j["mean_selected_pct"] = agg.mean_selected_pct;

  nlohmann::json runs = nlohmann::json::array();
  for (const RunReport& rep : agg.reports) {
    const FitnessRecord& best = rep.best.fitness.value();
    runs.push_back({
        {"seed", rep.config.seed},
        {"best_fitness", best.fitness},
        {"best_accuracy", best.accuracy},
        {"best_selected", best.selected_count},
        {"total_evaluations", rep.total_evaluations},
    });
  }
  j["per_run"] = std::move(runs);
  return j.dump(2) + "\n";
}

std::string aggregate_csv_header() {
  // population-std convention: divide by the run count, not runs-1
  return "variant,dataset,runs,acc_min,acc_avg,acc_std_population,acc_max,"
         "mean_selected_pct,mean_best_fitness\n";
}

std::string aggregate_csv_row(const AggregateStats& agg, const std::string& variant,
                              const std::string& dataset_name) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%s,%d,%.6f,%.6f,%.6f,%.6f,%.4f,%.6f\n", variant.c_str(),
                dataset_name.c_str(), agg.runs, agg.accuracy_min, agg.accuracy_avg,
                agg.accuracy_std, agg.accuracy_max, agg.mean_selected_pct, agg.fitness_avg);
  return buf;
}

}  // namespace ecwsa
