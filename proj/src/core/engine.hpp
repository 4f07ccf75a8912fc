#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "knn.hpp"
#include "mrmr.hpp"
#include "types.hpp"

namespace ecwsa {

// max(base, floor(current_size * (1 - death)))
int shrink_population(int current_size, double death, int base);

// Keeps the new_size fittest whales of a population already sorted by
// descending fitness; order preserved. Throws when new_size exceeds the
// population.
std::vector<Whale> apply_death(std::vector<Whale> population, int new_size);

struct TraceRow {
  int iteration = 0;
  int population_size = 0;
  double best_fitness = 0.0;
  double best_accuracy = 0.0;
  int best_selected = 0;
};

struct DatasetSummary {
  std::string name;
  std::uint64_t checksum = 0;
  int features = 0;
  int instances = 0;
  int classes = 0;
  int rows_rejected = 0;
};

struct RunReport {
  RunConfig config;
  DatasetSummary dataset;
  std::vector<TraceRow> trace;
  Whale best;  // global best across all iterations
  long long total_evaluations = 0;
  int local_search_skips = 0;  // iterations where the population was too small
  double wall_time_seconds = 0.0;
  std::string generated_at;  // volatile; excluded from determinism comparisons
};

using ProgressFn = std::function<void(const TraceRow&)>;

// Scoring seam: the production evaluator wraps KNN cross-validation; tests
// substitute synthetic fitness functions.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual FitnessRecord evaluate(const std::vector<std::uint8_t>& mask) = 0;
  virtual long long evaluations() const = 0;
};

class KnnEvaluator : public Evaluator {
 public:
  KnnEvaluator(const Dataset& data, const RunConfig& cfg, std::uint64_t fold_seed);
  FitnessRecord evaluate(const std::vector<std::uint8_t>& mask) override;
  long long evaluations() const override { return ctx_.evaluations.load(); }
  EvalContext& context() { return ctx_; }

 private:
  EvalContext ctx_;
  int num_features_;
  double alpha_, beta_;
};

// The full optimization loop against an arbitrary evaluator. ls_data may be
// null when local search is disabled.
RunReport run_with_evaluator(const RunConfig& cfg, int num_features, Evaluator& evaluator,
                             const DiscretizedDataset* ls_data,
                             const ProgressFn& progress = nullptr);

// Dataset must be loaded and normalized. Throws std::invalid_argument for
// invalid configs, datasets with fewer than 2 classes, or fewer than
// 2*cv_folds instances.
RunReport run(const RunConfig& cfg, const Dataset& dataset, const ProgressFn& progress = nullptr);

struct AggregateStats {
  int runs = 0;
  double accuracy_min = 0.0, accuracy_avg = 0.0, accuracy_std = 0.0, accuracy_max = 0.0;
  double fitness_min = 0.0, fitness_avg = 0.0, fitness_std = 0.0, fitness_max = 0.0;
  double mean_selected_pct = 0.0;  // mean over runs of 100*selected/n
  std::vector<RunReport> reports;
};

// Repeats run() with per-run seeds derived from cfg.seed and the run index.
// Standard deviations use the population convention (divide by runs).
AggregateStats repeat_runs(const RunConfig& cfg, const Dataset& dataset, int runs,
                           const ProgressFn& progress = nullptr);

}  // namespace ecwsa
