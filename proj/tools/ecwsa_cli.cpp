// Command-line front end for the ecwsa shared library: single runs, repeated
// experiments, and chaotic-orbit export. Talks to the core exclusively
// through the C API.
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecwsa.h"

namespace {

constexpr size_t kErrLen = 1024;

struct DatasetGuard {
  ecwsa_dataset* handle = nullptr;
  ~DatasetGuard() { ecwsa_dataset_free(handle); }
};

struct ReportGuard {
  ecwsa_report* handle = nullptr;
  ~ReportGuard() { ecwsa_report_free(handle); }
};

struct AggregateGuard {
  ecwsa_aggregate* handle = nullptr;
  ~AggregateGuard() { ecwsa_aggregate_free(handle); }
};

struct CommonFlags {
  std::vector<std::string> datasets;
  std::string label_col;
  bool has_header = false;
  std::string variant = "custom";
  std::string out_dir = ".";
  std::string chaos = "";
  bool no_local_search = false;
  ecwsa_config cfg = ecwsa_config_default();
};

void add_config_flags(CLI::App* cmd, CommonFlags& flags, bool multi_dataset,
                      bool single_variant = true) {
  auto* ds = cmd->add_option("--dataset", flags.datasets, "dataset CSV path");
  ds->required();
  if (!multi_dataset) ds->expected(1);
  cmd->add_option("--label-col", flags.label_col,
                  "label column: 0-based index, or name with --header (default: last column)");
  cmd->add_flag("--header", flags.has_header, "first row is a header");
  if (single_variant)
    cmd->add_option("--variant", flags.variant,
                    "ecwsa-1..4 (circular/logistic/piecewise/tent), woa-baseline, or custom");
  cmd->add_option("--pop", flags.cfg.population, "initial population size");
  cmd->add_option("--iters", flags.cfg.max_iterations, "iteration count");
  cmd->add_option("--death", flags.cfg.death, "population fraction dropped per iteration");
  cmd->add_option("--base", flags.cfg.base_population, "population floor");
  cmd->add_option("--alpha", flags.cfg.alpha, "accuracy weight");
  cmd->add_option("--beta", flags.cfg.beta, "subset-size weight");
  cmd->add_option("--knn-k", flags.cfg.knn_k, "KNN neighbor count");
  cmd->add_option("--folds", flags.cfg.cv_folds, "cross-validation folds");
  cmd->add_option("--mi-bins", flags.cfg.mi_bins, "bins for mutual-information estimates");
  cmd->add_option("--seed", flags.cfg.seed, "master seed");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_flag("--no-local-search", flags.no_local_search, "disable the filter local search");
  cmd->add_option("--chaos", flags.chaos,
                  "chaotic map: circular|logistic|piecewise|tent|uniform-random");
  cmd->add_option("--chaos-init", flags.cfg.chaos_initial_p, "initial chaotic value");
}

// The variant tag pins the ablation switches; explicit --chaos /
// --no-local-search flags only apply to "custom".
bool apply_variant(CommonFlags& flags, std::string& err) {
  if (flags.no_local_search) flags.cfg.local_search = 0;
  if (!flags.chaos.empty()) {
    int map = 0;
    if (ecwsa_chaos_map_from_name(flags.chaos.c_str(), &map) != ECWSA_OK) {
      err = "unknown chaos map: " + flags.chaos;
      return false;
    }
    flags.cfg.chaos_map = map;
  }
  const std::string& v = flags.variant;
  if (v == "custom") return true;
  if (v == "ecwsa-1")
    flags.cfg.chaos_map = ECWSA_CHAOS_CIRCULAR;
  else if (v == "ecwsa-2")
    flags.cfg.chaos_map = ECWSA_CHAOS_LOGISTIC;
  else if (v == "ecwsa-3")
    flags.cfg.chaos_map = ECWSA_CHAOS_PIECEWISE;
  else if (v == "ecwsa-4")
    flags.cfg.chaos_map = ECWSA_CHAOS_TENT;
  else if (v == "woa-baseline") {
    flags.cfg.chaos_map = ECWSA_CHAOS_UNIFORM_RANDOM;
    flags.cfg.death = 0.0;
    flags.cfg.local_search = 0;
    return true;
  } else {
    err = "unknown variant: " + v;
    return false;
  }
  flags.cfg.local_search = 1;
  return true;
}

bool load_dataset(const std::string& path, const CommonFlags& flags, DatasetGuard& guard) {
  char err[kErrLen];
  const ecwsa_status st =
      ecwsa_dataset_load_csv(path.c_str(), flags.has_header ? 1 : 0,
                             flags.label_col.empty() ? nullptr : flags.label_col.c_str(),
                             &guard.handle, err, sizeof(err));
  if (st != ECWSA_OK) {
    std::cerr << "error: cannot load dataset '" << path << "': " << err << "\n";
    return false;
  }
  std::cerr << "loaded " << path << ": " << ecwsa_dataset_num_features(guard.handle)
            << " features, " << ecwsa_dataset_num_instances(guard.handle) << " instances, "
            << ecwsa_dataset_num_classes(guard.handle) << " classes";
  if (ecwsa_dataset_rows_rejected(guard.handle) > 0)
    std::cerr << " (" << ecwsa_dataset_rows_rejected(guard.handle)
              << " rows dropped for missing values)";
  std::cerr << "\n";
  return true;
}

bool write_file(const std::filesystem::path& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return true;
}

void print_progress(int iteration, int population, double best_fitness, double best_accuracy,
                    void*) {
  std::fprintf(stderr, "[iter %3d] pop=%3d best_fitness=%.6f best_accuracy=%.6f\n", iteration,
               population, best_fitness, best_accuracy);
}

int cmd_run(CommonFlags& flags) {
  std::string err;
  if (!apply_variant(flags, err)) {
    std::cerr << "error: " << err << "\n";
    return 1;
  }
  char errbuf[kErrLen];
  if (ecwsa_config_validate(&flags.cfg, errbuf, sizeof(errbuf)) != ECWSA_OK) {
    std::cerr << "error: invalid configuration: " << errbuf << "\n";
    return 1;
  }
  DatasetGuard dataset;
  if (!load_dataset(flags.datasets.front(), flags, dataset)) return 1;

  ReportGuard report;
  const ecwsa_status st = ecwsa_run(dataset.handle, &flags.cfg, print_progress, nullptr,
                                    &report.handle, errbuf, sizeof(errbuf));
  if (st != ECWSA_OK) {
    std::cerr << "error: run failed: " << errbuf << "\n";
    return 1;
  }

  std::filesystem::create_directories(flags.out_dir);
  char* json = ecwsa_report_to_json(report.handle, flags.variant.c_str());
  char* csv = ecwsa_report_convergence_csv(report.handle);
  const bool ok = write_file(std::filesystem::path(flags.out_dir) / "report.json", json) &&
                  write_file(std::filesystem::path(flags.out_dir) / "convergence.csv", csv);
  ecwsa_string_free(json);
  ecwsa_string_free(csv);
  if (!ok) return 1;

  std::printf("best_fitness=%.6f best_accuracy=%.6f selected=%d/%d evaluations=%lld\n",
              ecwsa_report_best_fitness(report.handle),
              ecwsa_report_best_accuracy(report.handle),
              ecwsa_report_best_selected_count(report.handle),
              ecwsa_dataset_num_features(dataset.handle),
              ecwsa_report_total_evaluations(report.handle));
  std::printf("wrote %s/report.json and %s/convergence.csv\n", flags.out_dir.c_str(),
              flags.out_dir.c_str());
  return 0;
}

int cmd_experiment(CommonFlags& flags, int runs, const std::vector<std::string>& variants) {
  if (runs < 1) {
    std::cerr << "error: --runs must be >= 1\n";
    return 1;
  }
  std::vector<std::string> variant_list = variants;
  if (variant_list.empty()) variant_list.push_back(flags.variant);

  std::filesystem::create_directories(flags.out_dir);
  std::string csv = ecwsa_aggregate_csv_header();
  std::string json_rows = "[\n";
  bool first = true;

  for (const std::string& path : flags.datasets) {
    DatasetGuard dataset;
    if (!load_dataset(path, flags, dataset)) return 1;
    for (const std::string& variant : variant_list) {
      CommonFlags vflags = flags;
      vflags.variant = variant;
      std::string err;
      if (!apply_variant(vflags, err)) {
        std::cerr << "error: " << err << "\n";
        return 1;
      }
      char errbuf[kErrLen];
      if (ecwsa_config_validate(&vflags.cfg, errbuf, sizeof(errbuf)) != ECWSA_OK) {
        std::cerr << "error: invalid configuration: " << errbuf << "\n";
        return 1;
      }
      std::cerr << "running " << variant << " on " << ecwsa_dataset_name(dataset.handle) << " ("
                << runs << " runs)\n";
      AggregateGuard agg;
      const ecwsa_status st = ecwsa_repeat_runs(dataset.handle, &vflags.cfg, runs, nullptr,
                                                nullptr, &agg.handle, errbuf, sizeof(errbuf));
      if (st != ECWSA_OK) {
        std::cerr << "error: experiment failed: " << errbuf << "\n";
        return 1;
      }
      char* row = ecwsa_aggregate_csv_row(agg.handle, variant.c_str(),
                                          ecwsa_dataset_name(dataset.handle));
      csv += row;
      std::fputs(row, stdout);
      ecwsa_string_free(row);

      char* jrow = ecwsa_aggregate_to_json(agg.handle, variant.c_str(),
                                           ecwsa_dataset_name(dataset.handle));
      if (!first) json_rows += ",\n";
      json_rows += jrow;
      ecwsa_string_free(jrow);
      first = false;
    }
  }
  json_rows += "]\n";

  const bool ok =
      write_file(std::filesystem::path(flags.out_dir) / "aggregate.csv", csv.c_str()) &&
      write_file(std::filesystem::path(flags.out_dir) / "aggregate.json", json_rows.c_str());
  if (!ok) return 1;
  std::printf("wrote %s/aggregate.csv and %s/aggregate.json\n", flags.out_dir.c_str(),
              flags.out_dir.c_str());
  return 0;
}

int cmd_chaos_orbit(const std::string& map_name, double initial_p, int steps, uint64_t seed) {
  int map = 0;
  if (ecwsa_chaos_map_from_name(map_name.c_str(), &map) != ECWSA_OK) {
    std::cerr << "error: unknown chaos map '" << map_name << "'\n";
    return 1;
  }
  std::vector<double> orbit(static_cast<size_t>(steps));
  char errbuf[kErrLen];
  if (ecwsa_chaos_orbit(map, initial_p, steps, seed, orbit.data(), errbuf, sizeof(errbuf)) !=
      ECWSA_OK) {
    std::cerr << "error: " << errbuf << "\n";
    return 1;
  }
  std::printf("step,p\n");
  for (int i = 0; i < steps; ++i) std::printf("%d,%.9f\n", i + 1, orbit[static_cast<size_t>(i)]);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ecwsa — chaotic whale survival feature selection"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "single optimization run");
  add_config_flags(run_cmd, run_flags, false);

  CommonFlags exp_flags;
  int runs = 20;
  std::vector<std::string> exp_variants;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "repeated runs with aggregate statistics");
  add_config_flags(exp_cmd, exp_flags, true, false);
  exp_cmd->add_option("--runs", runs, "independent runs per variant/dataset");
  exp_cmd->add_option("--variant", exp_variants,
                      "variant(s) to compare; repeatable (default: custom)");

  std::string orbit_map;
  double orbit_init = 0.3;
  int orbit_steps = 200;
  uint64_t orbit_seed = 1;
  CLI::App* orbit_cmd = app.add_subcommand("chaos-orbit", "emit (step,p) CSV for one map");
  orbit_cmd->add_option("--map", orbit_map, "chaotic map name")->required();
  orbit_cmd->add_option("--init", orbit_init, "initial p (default 0.3)");
  orbit_cmd->add_option("--steps", orbit_steps, "steps to emit");
  orbit_cmd->add_option("--seed", orbit_seed, "seed (uniform-random map only)");

  CLI11_PARSE(app, argc, argv);

  if (run_cmd->parsed()) return cmd_run(run_flags);
  if (exp_cmd->parsed()) return cmd_experiment(exp_flags, runs, exp_variants);
  if (orbit_cmd->parsed()) return cmd_chaos_orbit(orbit_map, orbit_init, orbit_steps, orbit_seed);
  return 1;
}
