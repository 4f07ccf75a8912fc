#pragma once

#include <cstdint>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "dataset.hpp"
#include "rng.hpp"
#include "types.hpp"

namespace ecwsa {

// Sorted unique feature indices; the set view of a whale's bitmask.
using FeatureSet = std::vector<int>;

FeatureSet mask_to_set(const std::vector<std::uint8_t>& bitmask);

// Equal-width bins over [min, max] of the column; the maximum value maps to
// bin bins-1 and constant columns map entirely to bin 0.
std::vector<int> discretize(const std::vector<double>& column, int bins);

// Plug-in estimate over the empirical joint distribution, in nats. 0*ln(0)
// terms contribute 0.
double mutual_information(const std::vector<int>& u, const std::vector<int>& v);

double entropy(const std::vector<int>& u);

inline constexpr double kWorstMrmrScore = -std::numeric_limits<double>::infinity();

// Binned feature columns plus a lazily populated MI cache. Pairwise MI
// matrices are infeasible to precompute at microarray scale, so entries are
// computed on first use. Concurrent readers may race to fill an entry; every
// writer computes the identical value, so last-writer-wins is benign.
class DiscretizedDataset {
 public:
  DiscretizedDataset(const Dataset& data, int bins);

  int num_features() const { return static_cast<int>(columns_.size()); }
  const std::vector<int>& column(int f) const { return columns_[static_cast<std::size_t>(f)]; }
  const std::vector<int>& labels() const { return labels_; }

  // MI(feature, class), cached.
  double relevance(int feature) const;
  // MI(feature_i, feature_j), cached under the unordered pair.
  double redundancy(int i, int j) const;

 private:
  std::vector<std::vector<int>> columns_;
  std::vector<int> labels_;
  mutable std::vector<double> relevance_cache_;
  mutable std::vector<std::uint8_t> relevance_known_;
  mutable std::unordered_map<std::uint64_t, double> pair_cache_;
  mutable std::mutex mutex_;
};

// Mean feature-class MI minus the mean over all ordered feature pairs
// (including i=j) of feature-feature MI. An empty set scores -infinity so it
// never wins a replacement comparison.
double mrmr_fitness(const FeatureSet& set, const DiscretizedDataset& data);

// dif = x_j \ x_k; returns (x_i u dif, x_i \ dif). Empty results are legal.
std::pair<FeatureSet, FeatureSet> make_neighbors(const FeatureSet& x_i, const FeatureSet& x_j,
                                                 const FeatureSet& x_k);

// One filter pass over the population: per whale, draw two distinct other
// whales, build both neighbors from the iteration-start snapshot and replace
// the whale when the better neighbor strictly improves its score. Populations
// smaller than 3 are left untouched. Returns the number of replacements.
int local_search(std::vector<Whale>& population, const DiscretizedDataset& data,
                 std::uint64_t master_seed, std::uint64_t iteration);

}  // namespace ecwsa
