#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rng.hpp"

namespace ecwsa {

// Positions live in a bounded box so the sign-threshold binarization stays
// responsive after repeated multiplicative updates.
inline constexpr double kPositionBound = 4.0;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_state_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ChaosMap { Circular, Logistic, Piecewise, Tent, UniformRandom };

const char* to_string(ChaosMap map);
std::optional<ChaosMap> chaos_map_from_name(const std::string& name);

// Wrapper score of one candidate subset: fitness blends classification
// accuracy with how small the subset is.
struct FitnessRecord {
  double fitness = 0.0;
  double accuracy = 0.0;
  int selected_count = 0;
};

// One candidate solution. The bitmask is always the binarization of the
// position (bit j set iff position[j] >= 0) and never all-false.
struct Whale {
  std::vector<double> position;
  std::vector<std::uint8_t> bitmask;
  std::optional<FitnessRecord> fitness;

  int selected_count() const;
};

double clip_position(double x);

// Derives the bitmask from the position; an all-false mask is repaired by
// forcing one uniformly chosen entry true (position entry set to +1).
// Clears any cached fitness.
void rebinarize(Whale& whale, RngStream& rng);

// Throws std::invalid_argument on an empty position.
Whale make_whale(std::vector<double> position, RngStream& rng);

// Rebuilds a whale from an explicit non-empty feature set: +1 positions for
// selected features, -1 otherwise.
Whale whale_from_features(const std::vector<int>& features, int num_features);

std::vector<int> selected_features(const std::vector<std::uint8_t>& bitmask);

struct RunConfig {
  int population = 80;
  int max_iterations = 25;
  double death = 0.1;           // fraction of the population dropped per iteration
  int base_population = 15;     // population floor
  double alpha = 0.99;          // accuracy weight
  double beta = 0.01;           // subset-size weight
  double spiral_b = 1.0;
  ChaosMap chaos_map = ChaosMap::Tent;
  double chaos_initial_p = 0.3;
  int knn_k = 5;
  int cv_folds = 5;
  std::uint64_t seed = 1;
  bool local_search = true;
  int mi_bins = 10;
};

// Returns every violated constraint, not just the first. Empty means valid.
std::vector<std::string> validate_config(const RunConfig& cfg);

}  // namespace ecwsa
