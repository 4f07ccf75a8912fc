#include "types.hpp"

#include <algorithm>
#include <cmath>

namespace ecwsa {

const char* to_string(ChaosMap map) {
  switch (map) {
    case ChaosMap::Circular: return "circular";
    case ChaosMap::Logistic: return "logistic";
    case ChaosMap::Piecewise: return "piecewise";
    case ChaosMap::Tent: return "tent";
    case ChaosMap::UniformRandom: return "uniform-random";
  }
  return "?";
}

std::optional<ChaosMap> chaos_map_from_name(const std::string& name) {
  if (name == "circular") return ChaosMap::Circular;
  if (name == "logistic") return ChaosMap::Logistic;
  if (name == "piecewise") return ChaosMap::Piecewise;
  if (name == "tent") return ChaosMap::Tent;
  if (name == "uniform-random" || name == "uniform" || name == "random")
    return ChaosMap::UniformRandom;
  return std::nullopt;
}

int Whale::selected_count() const {
  return static_cast<int>(std::count(bitmask.begin(), bitmask.end(), std::uint8_t{1}));
}

double clip_position(double x) {
  return std::clamp(x, -kPositionBound, kPositionBound);
}

void rebinarize(Whale& whale, RngStream& rng) {
  const std::size_t n = whale.position.size();
  whale.bitmask.resize(n);
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    whale.bitmask[j] = whale.position[j] >= 0.0 ? 1 : 0;
    any = any || whale.bitmask[j];
  }
  if (!any) {
    const std::size_t pick = static_cast<std::size_t>(rng.next_below(n));
    whale.bitmask[pick] = 1;
    whale.position[pick] = 1.0;
  }
  whale.fitness.reset();
}

Whale make_whale(std::vector<double> position, RngStream& rng) {
  if (position.empty()) throw std::invalid_argument("whale position must be non-empty");
  Whale whale;
  whale.position = std::move(position);
  for (double& x : whale.position) x = clip_position(x);
  rebinarize(whale, rng);
  return whale;
}

Whale whale_from_features(const std::vector<int>& features, int num_features) {
  if (features.empty()) throw std::invalid_argument("feature set must be non-empty");
  Whale whale;
  whale.position.assign(static_cast<std::size_t>(num_features), -1.0);
  whale.bitmask.assign(static_cast<std::size_t>(num_features), 0);
  for (int f : features) {
    if (f < 0 || f >= num_features) throw std::invalid_argument("feature index out of range");
    whale.position[static_cast<std::size_t>(f)] = 1.0;
    whale.bitmask[static_cast<std::size_t>(f)] = 1;
  }
  return whale;
}

std::vector<int> selected_features(const std::vector<std::uint8_t>& bitmask) {
  std::vector<int> out;
  for (std::size_t j = 0; j < bitmask.size(); ++j)
    if (bitmask[j]) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<std::string> validate_config(const RunConfig& cfg) {
  std::vector<std::string> errors;
  if (cfg.population < 3)
    errors.push_back("population must allow local search (>=3)");
  if (cfg.max_iterations < 1) errors.push_back("max_iterations must be >= 1");
  if (!(cfg.death >= 0.0 && cfg.death < 1.0)) errors.push_back("death must be in [0,1)");
  if (cfg.base_population < 3) errors.push_back("base population must be >= 3");
  if (cfg.base_population > cfg.population)
    errors.push_back("base population must not exceed the initial population");
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0)) errors.push_back("alpha must be in [0,1]");
  if (!(cfg.beta >= 0.0 && cfg.beta <= 1.0)) errors.push_back("beta must be in [0,1]");
  if (std::abs(cfg.alpha + cfg.beta - 1.0) > 1e-12)
    errors.push_back("alpha+beta must equal 1");
  if (!(cfg.spiral_b > 0.0)) errors.push_back("spiral_b must be > 0");
  if (!(cfg.chaos_initial_p >= 0.0 && cfg.chaos_initial_p <= 1.0))
    errors.push_back("chaos_initial_p must be in [0,1]");
  if (cfg.knn_k < 1) errors.push_back("knn_k must be >= 1");
  if (cfg.cv_folds < 2) errors.push_back("cv_folds must be >= 2");
  if (cfg.mi_bins < 2) errors.push_back("mi_bins must be >= 2");
  return errors;
}

}  // namespace ecwsa
