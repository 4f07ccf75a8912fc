#include "engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>

#include "chaos.hpp"
#include "dynamics.hpp"
#include "parallel.hpp"

namespace ecwsa {

int shrink_population(int current_size, double death, int base) {
  const int shrunk = static_cast<int>(
      std::floor(static_cast<double>(current_size) * (1.0 - death)));
  return std::max(base, shrunk);
}

std::vector<Whale> apply_death(std::vector<Whale> population, int new_size) {
  if (new_size < 0 || static_cast<std::size_t>(new_size) > population.size())
    throw std::invalid_argument("apply_death: new_size exceeds population");
  population.resize(static_cast<std::size_t>(new_size));
  return population;
}

KnnEvaluator::KnnEvaluator(const Dataset& data, const RunConfig& cfg, std::uint64_t fold_seed)
    : ctx_(make_eval_context(data, cfg.knn_k, cfg.cv_folds, fold_seed)),
      num_features_(data.num_features()),
      alpha_(cfg.alpha),
      beta_(cfg.beta) {}

FitnessRecord KnnEvaluator::evaluate(const std::vector<std::uint8_t>& mask) {
  const double accuracy = cv_accuracy(ctx_, mask);
  const int selected = static_cast<int>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
  return wrapper_fitness(accuracy, selected, num_features_, alpha_, beta_);
}

namespace {

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunReport run_with_evaluator(const RunConfig& cfg, int num_features, Evaluator& evaluator,
                             const DiscretizedDataset* ls_data, const ProgressFn& progress) {
  {
    const auto errors = validate_config(cfg);
    if (!errors.empty()) {
      std::string msg = "invalid config:";
      for (const auto& e : errors) msg += " " + e + ";";
      throw std::invalid_argument(msg);
    }
  }
  if (num_features < 1) throw std::invalid_argument("dataset has no features");

  const int threads = resolve_thread_count();
  const auto t_start = std::chrono::steady_clock::now();

  RunReport report;
  report.config = cfg;
  report.dataset.features = num_features;

  std::vector<Whale> population(static_cast<std::size_t>(cfg.population));
  for (std::size_t i = 0; i < population.size(); ++i) {
    RngStream rng = substream(cfg.seed, 0, i, Purpose::Init);
    std::vector<double> position(static_cast<std::size_t>(num_features));
    for (double& x : position) x = rng.next_range(-1.0, 1.0);
    population[i] = make_whale(std::move(position), rng);
  }

  ChaosState chaos = make_chaos_state(cfg.chaos_map, cfg.chaos_initial_p, {},
                                      derive_seed(cfg.seed, 0, 0, Purpose::Chaos));

  Whale prey;
  bool have_prey = false;

  for (int t = 0; t < cfg.max_iterations; ++t) {
    parallel_for(population.size(), threads, [&](std::size_t i) {
      if (!population[i].fitness)
        population[i].fitness = evaluator.evaluate(population[i].bitmask);
    });

    std::stable_sort(population.begin(), population.end(), [](const Whale& a, const Whale& b) {
      return a.fitness->fitness > b.fitness->fitness;
    });

    if (!have_prey || population.front().fitness->fitness > prey.fitness->fitness) {
      prey = population.front();
      have_prey = true;
    }

    TraceRow row{t, static_cast<int>(population.size()), prey.fitness->fitness,
                 prey.fitness->accuracy, prey.fitness->selected_count};
    report.trace.push_back(row);
    if (progress) progress(row);

    // One shared chaotic stream, advanced once per whale in index order; the
    // p values are fixed up front so moves can run on any number of workers.
    std::vector<double> move_p(population.size());
    for (double& p : move_p) p = chaos_next(chaos);

    const double a = decay_a(t, cfg.max_iterations);
    std::vector<Whale> moved(population.size());
    parallel_for(population.size(), threads, [&](std::size_t i) {
      RngStream rng = substream(cfg.seed, static_cast<std::uint64_t>(t) + 1, i, Purpose::Move);
      const DynamicsParams params =
          draw_dynamics_params(a, cfg.spiral_b, move_p[i], num_features, rng);
      moved[i] = dispatch_move(population[i], prey, population, params, rng);
    });
    population = std::move(moved);

    if (cfg.local_search) {
      if (population.size() >= 3 && ls_data) {
        local_search(population, *ls_data, cfg.seed, static_cast<std::uint64_t>(t) + 1);
      } else {
        ++report.local_search_skips;
      }
    }

    const int new_size =
        shrink_population(static_cast<int>(population.size()), cfg.death, cfg.base_population);
    population = apply_death(std::move(population), new_size);
  }

  report.best = prey;
  report.total_evaluations = evaluator.evaluations();
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  report.generated_at = timestamp_now();
  return report;
}

RunReport run(const RunConfig& cfg, const Dataset& dataset, const ProgressFn& progress) {
  if (dataset.num_classes() < 2)
    throw std::invalid_argument("dataset must contain at least two classes");
  if (dataset.num_instances() < cfg.cv_folds * 2)
    throw std::invalid_argument("dataset too small for the requested fold count");

  KnnEvaluator evaluator(dataset, cfg, cfg.seed);

  RunReport report;
  if (cfg.local_search) {
    DiscretizedDataset discretized(dataset, cfg.mi_bins);
    report = run_with_evaluator(cfg, dataset.num_features(), evaluator, &discretized, progress);
  } else {
    report = run_with_evaluator(cfg, dataset.num_features(), evaluator, nullptr, progress);
  }
  report.dataset = DatasetSummary{dataset.name(),         dataset.checksum(),
                                  dataset.num_features(), dataset.num_instances(),
                                  dataset.num_classes(),  dataset.rows_rejected()};
  return report;
}

AggregateStats repeat_runs(const RunConfig& cfg, const Dataset& dataset, int runs,
                           const ProgressFn& progress) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  AggregateStats agg;
  agg.runs = runs;
  agg.reports.reserve(static_cast<std::size_t>(runs));
  for (int r = 0; r < runs; ++r) {
    RunConfig run_cfg = cfg;
    run_cfg.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(r), 0, Purpose::RunSeed);
    agg.reports.push_back(run(run_cfg, dataset, progress));
  }

  const double n = static_cast<double>(runs);
  double acc_sum = 0.0, acc_sq = 0.0, fit_sum = 0.0, fit_sq = 0.0, pct_sum = 0.0;
  agg.accuracy_min = agg.fitness_min = 1.0e300;
  agg.accuracy_max = agg.fitness_max = -1.0e300;
  for (const RunReport& rep : agg.reports) {
    const FitnessRecord& best = *rep.best.fitness;
    acc_sum += best.accuracy;
    acc_sq += best.accuracy * best.accuracy;
    fit_sum += best.fitness;
    fit_sq += best.fitness * best.fitness;
    pct_sum += 100.0 * static_cast<double>(best.selected_count) /
               static_cast<double>(rep.dataset.features);
    agg.accuracy_min = std::min(agg.accuracy_min, best.accuracy);
    agg.accuracy_max = std::max(agg.accuracy_max, best.accuracy);
    agg.fitness_min = std::min(agg.fitness_min, best.fitness);
    agg.fitness_max = std::max(agg.fitness_max, best.fitness);
  }
  agg.accuracy_avg = acc_sum / n;
  agg.fitness_avg = fit_sum / n;
  agg.mean_selected_pct = pct_sum / n;
  agg.accuracy_std = std::sqrt(std::max(0.0, acc_sq / n - agg.accuracy_avg * agg.accuracy_avg));
  agg.fitness_std = std::sqrt(std::max(0.0, fit_sq / n - agg.fitness_avg * agg.fitness_avg));
  return agg;
}

}  // namespace ecwsa
