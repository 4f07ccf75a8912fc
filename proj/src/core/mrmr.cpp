#include "mrmr.hpp"

#include <algorithm>
#include <cmath>

namespace ecwsa {

FeatureSet mask_to_set(const std::vector<std::uint8_t>& bitmask) {
  return selected_features(bitmask);
}

std::vector<int> discretize(const std::vector<double>& column, int bins) {
  if (column.empty()) throw std::invalid_argument("discretize: empty column");
  if (bins < 2) throw std::invalid_argument("discretize: bins must be >= 2");
  const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<int> out(column.size(), 0);
  if (hi <= lo) return out;  // constant column
  const double scale = static_cast<double>(bins) / (hi - lo);
  for (std::size_t i = 0; i < column.size(); ++i) {
    int b = static_cast<int>((column[i] - lo) * scale);
    out[i] = std::min(b, bins - 1);
  }
  return out;
}

double mutual_information(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("mutual_information: length mismatch");
  if (u.empty()) throw std::invalid_argument("mutual_information: empty input");

  int u_max = 0, v_max = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 0 || v[i] < 0)
      throw std::invalid_argument("mutual_information: negative symbol");
    u_max = std::max(u_max, u[i]);
    v_max = std::max(v_max, v[i]);
  }
  const int nu = u_max + 1, nv = v_max + 1;
  std::vector<long long> joint(static_cast<std::size_t>(nu) * nv, 0);
  std::vector<long long> mu(static_cast<std::size_t>(nu), 0), mv(static_cast<std::size_t>(nv), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    ++joint[static_cast<std::size_t>(u[i]) * nv + v[i]];
    ++mu[static_cast<std::size_t>(u[i])];
    ++mv[static_cast<std::size_t>(v[i])];
  }
  const double n = static_cast<double>(u.size());
  double mi = 0.0;
  for (int a = 0; a < nu; ++a) {
    for (int b = 0; b < nv; ++b) {
      const long long c = joint[static_cast<std::size_t>(a) * nv + b];
      if (c == 0) continue;
      const double p_ab = static_cast<double>(c) / n;
      const double p_a = static_cast<double>(mu[static_cast<std::size_t>(a)]) / n;
      const double p_b = static_cast<double>(mv[static_cast<std::size_t>(b)]) / n;
      mi += p_ab * std::log(p_ab / (p_a * p_b));
    }
  }
  return mi;
}

double entropy(const std::vector<int>& u) {
  return mutual_information(u, u);
}

DiscretizedDataset::DiscretizedDataset(const Dataset& data, int bins)
    : labels_(data.labels()) {
  columns_.reserve(static_cast<std::size_t>(data.num_features()));
  for (int f = 0; f < data.num_features(); ++f)
    columns_.push_back(discretize(data.column(f), bins));
  relevance_cache_.assign(columns_.size(), 0.0);
  relevance_known_.assign(columns_.size(), 0);
}

double DiscretizedDataset::relevance(int feature) const {
  const auto f = static_cast<std::size_t>(feature);
  {
    std::lock_guard lock(mutex_);
    if (relevance_known_[f]) return relevance_cache_[f];
  }
  const double value = mutual_information(columns_[f], labels_);
  std::lock_guard lock(mutex_);
  relevance_cache_[f] = value;
  relevance_known_[f] = 1;
  return value;
}

double DiscretizedDataset::redundancy(int i, int j) const {
  const auto a = static_cast<std::uint64_t>(std::min(i, j));
  const auto b = static_cast<std::uint64_t>(std::max(i, j));
  const std::uint64_t key = (a << 32) | b;
  {
    std::lock_guard lock(mutex_);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
  }
  const double value = mutual_information(columns_[static_cast<std::size_t>(i)],
                                          columns_[static_cast<std::size_t>(j)]);
  std::lock_guard lock(mutex_);
  pair_cache_[key] = value;
  return value;
}

double mrmr_fitness(const FeatureSet& set, const DiscretizedDataset& data) {
  if (set.empty()) return kWorstMrmrScore;
  const double size = static_cast<double>(set.size());
  double relevance_sum = 0.0;
  for (int f : set) relevance_sum += data.relevance(f);
  double redundancy_sum = 0.0;
  for (int i : set)
    for (int j : set) redundancy_sum += data.redundancy(i, j);
  return relevance_sum / size - redundancy_sum / (size * size);
}

std::pair<FeatureSet, FeatureSet> make_neighbors(const FeatureSet& x_i, const FeatureSet& x_j,
                                                 const FeatureSet& x_k) {
  FeatureSet dif;
  std::set_difference(x_j.begin(), x_j.end(), x_k.begin(), x_k.end(), std::back_inserter(dif));
  FeatureSet joined;
  std::set_union(x_i.begin(), x_i.end(), dif.begin(), dif.end(), std::back_inserter(joined));
  FeatureSet removed;
  std::set_difference(x_i.begin(), x_i.end(), dif.begin(), dif.end(),
                      std::back_inserter(removed));
  return {std::move(joined), std::move(removed)};
}

namespace {

std::size_t draw_excluding_two(RngStream& rng, std::size_t n, std::size_t ex1, std::size_t ex2) {
  // draws uniformly from [0, n) \ {ex1, ex2}, ex1 != ex2
  std::size_t v = static_cast<std::size_t>(rng.next_below(n - 2));
  const std::size_t lo = std::min(ex1, ex2), hi = std::max(ex1, ex2);
  if (v >= lo) ++v;
  if (v >= hi) ++v;
  return v;
}

}  // namespace

int local_search(std::vector<Whale>& population, const DiscretizedDataset& data,
                 std::uint64_t master_seed, std::uint64_t iteration) {
  const std::size_t n = population.size();
  if (n < 3) return 0;

  std::vector<FeatureSet> snapshot(n);
  std::vector<double> score(n);
  for (std::size_t i = 0; i < n; ++i) {
    snapshot[i] = mask_to_set(population[i].bitmask);
    score[i] = mrmr_fitness(snapshot[i], data);
  }

  const int num_features = data.num_features();
  int replaced = 0;
  for (std::size_t i = 0; i < n; ++i) {
    RngStream rng = substream(master_seed, iteration, i, Purpose::LocalSearch);
    std::size_t r1 = static_cast<std::size_t>(rng.next_below(n - 1));
    if (r1 >= i) ++r1;
    const std::size_t r2 = draw_excluding_two(rng, n, i, r1);

    auto [neighbor1, neighbor2] = make_neighbors(snapshot[i], snapshot[r1], snapshot[r2]);
    const double s1 = mrmr_fitness(neighbor1, data);
    const double s2 = mrmr_fitness(neighbor2, data);
    const FeatureSet& best_set = s2 > s1 ? neighbor2 : neighbor1;
    const double best_score = s2 > s1 ? s2 : s1;
    if (best_score > score[i] && !best_set.empty()) {
      population[i] = whale_from_features(best_set, num_features);
      ++replaced;
    }
  }
  return replaced;
}

}  // namespace ecwsa
