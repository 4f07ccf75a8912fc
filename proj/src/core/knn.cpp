#include "knn.hpp"

#include <algorithm>
#include <cmath>

namespace ecwsa {

EvalContext make_eval_context(const Dataset& data, int knn_k, int folds, std::uint64_t seed) {
  if (knn_k < 1) throw std::invalid_argument("knn_k must be >= 1");
  return EvalContext{data, knn_k, folds, stratified_folds(data, folds, seed), {}};
}

namespace {

// Keeps the k smallest (distance, index) pairs in ascending lexicographic
// order; equal distances keep the earlier index, which is the declared tie
// rule as long as candidates arrive in index order.
class KBest {
 public:
  explicit KBest(int k) : k_(static_cast<std::size_t>(k)) { entries_.reserve(k_); }

  void offer(double dist, int index) {
    if (entries_.size() == k_ && dist >= entries_.back().first) return;
    auto pos = std::upper_bound(entries_.begin(), entries_.end(),
                                std::make_pair(dist, index));
    entries_.insert(pos, {dist, index});
    if (entries_.size() > k_) entries_.pop_back();
  }

  const std::vector<std::pair<double, int>>& entries() const { return entries_; }

 private:
  std::size_t k_;
  std::vector<std::pair<double, int>> entries_;
};

int majority_label(const std::vector<std::pair<double, int>>& neighbors,
                   const std::vector<int>& labels, int num_classes) {
  std::vector<int> votes(static_cast<std::size_t>(num_classes), 0);
  for (const auto& [dist, idx] : neighbors) ++votes[static_cast<std::size_t>(labels[idx])];
  int best = 0;
  for (int c = 1; c < num_classes; ++c)
    if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(best)]) best = c;
  return best;
}

}  // namespace

int knn_predict(const std::vector<std::vector<double>>& train_rows,
                const std::vector<int>& train_labels, const std::vector<double>& query, int k) {
  if (train_rows.empty()) throw std::invalid_argument("knn_predict: empty training set");
  if (train_rows.size() != train_labels.size())
    throw std::invalid_argument("knn_predict: rows/labels size mismatch");
  if (k < 1) throw std::invalid_argument("knn_predict: k must be >= 1");

  const int capped_k = std::min<int>(k, static_cast<int>(train_rows.size()));
  KBest best(capped_k);
  for (std::size_t i = 0; i < train_rows.size(); ++i) {
    const auto& row = train_rows[i];
    if (row.size() != query.size())
      throw std::invalid_argument("knn_predict: feature length mismatch");
    double d2 = 0.0;
    for (std::size_t j = 0; j < query.size(); ++j) {
      const double diff = row[j] - query[j];
      d2 += diff * diff;
    }
    best.offer(d2, static_cast<int>(i));
  }
  int num_classes = 0;
  for (int label : train_labels) num_classes = std::max(num_classes, label + 1);
  return majority_label(best.entries(), train_labels, num_classes);
}

double cv_accuracy(EvalContext& ctx, const std::vector<std::uint8_t>& mask) {
  const Dataset& data = ctx.data;
  const int n_inst = data.num_instances();
  if (static_cast<int>(mask.size()) != data.num_features())
    throw std::invalid_argument("cv_accuracy: mask length mismatch");

  std::vector<int> selected = selected_features(mask);
  if (selected.empty()) throw std::invalid_argument("cv_accuracy: empty feature mask");

  const int num_classes = data.num_classes();
  double fold_sum = 0.0;
  std::vector<int> train_idx;
  train_idx.reserve(static_cast<std::size_t>(n_inst));

  for (int fold = 0; fold < ctx.fold_count; ++fold) {
    train_idx.clear();
    int test_count = 0;
    for (int i = 0; i < n_inst; ++i) {
      if (ctx.fold_of[static_cast<std::size_t>(i)] == fold)
        ++test_count;
      else
        train_idx.push_back(i);
    }
    if (test_count == 0 || train_idx.empty()) continue;

    const int capped_k = std::min<int>(ctx.knn_k, static_cast<int>(train_idx.size()));
    int correct = 0;
    for (int q = 0; q < n_inst; ++q) {
      if (ctx.fold_of[static_cast<std::size_t>(q)] != fold) continue;
      const double* qrow = data.row(q);
      KBest best(capped_k);
      for (std::size_t t = 0; t < train_idx.size(); ++t) {
        const double* trow = data.row(train_idx[t]);
        double d2 = 0.0;
        for (int f : selected) {
          const double diff = trow[f] - qrow[f];
          d2 += diff * diff;
        }
        best.offer(d2, static_cast<int>(t));
      }
      std::vector<int> votes(static_cast<std::size_t>(num_classes), 0);
      for (const auto& [dist, t] : best.entries())
        ++votes[static_cast<std::size_t>(data.labels()[static_cast<std::size_t>(
            train_idx[static_cast<std::size_t>(t)])])];
      int predicted = 0;
      for (int c = 1; c < num_classes; ++c)
        if (votes[static_cast<std::size_t>(c)] > votes[static_cast<std::size_t>(predicted)])
          predicted = c;
      if (predicted == data.labels()[static_cast<std::size_t>(q)]) ++correct;
    }
    fold_sum += static_cast<double>(correct) / static_cast<double>(test_count);
  }
  ctx.evaluations.fetch_add(1, std::memory_order_relaxed);
  return fold_sum / static_cast<double>(ctx.fold_count);
}

FitnessRecord wrapper_fitness(double accuracy, int selected_count, int n, double alpha,
                              double beta) {
  if (selected_count < 1 || selected_count > n)
    throw std::invalid_argument("wrapper_fitness: selected_count out of range");
  if (!(accuracy >= 0.0 && accuracy <= 1.0))
    throw std::invalid_argument("wrapper_fitness: accuracy out of range");
  FitnessRecord rec;
  rec.accuracy = accuracy;
  rec.selected_count = selected_count;
  rec.fitness = alpha * accuracy +
                beta * static_cast<double>(n - selected_count) / static_cast<double>(n);
  return rec;
}

}  // namespace ecwsa
