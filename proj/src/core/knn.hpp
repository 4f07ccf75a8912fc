#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "dataset.hpp"
#include "types.hpp"

namespace ecwsa {

// Read-only scoring context shared by all whales of a run. The fold
// assignment is fixed once so every subset is scored on identical folds; only
// the evaluation counter mutates, and it is atomic so concurrent evaluations
// stay linearizable.
struct EvalContext {
  const Dataset& data;
  int knn_k;
  int fold_count;
  std::vector<int> fold_of;  // per-instance fold index
  std::atomic<long long> evaluations{0};
};

EvalContext make_eval_context(const Dataset& data, int knn_k, int folds, std::uint64_t seed);

// Majority label among the k nearest training rows by Euclidean distance,
// restricted to the given feature columns. k is capped at the training-set
// size. Distance ties prefer the lower training index; vote ties prefer the
// smaller encoded class id.
int knn_predict(const std::vector<std::vector<double>>& train_rows,
                const std::vector<int>& train_labels, const std::vector<double>& query, int k);

// Mean over folds of the held-out accuracy using only masked features.
// Increments the evaluation counter by 1. Throws std::invalid_argument on an
// all-false mask.
double cv_accuracy(EvalContext& ctx, const std::vector<std::uint8_t>& mask);

// fitness = alpha*accuracy + beta*(n - selected_count)/n
FitnessRecord wrapper_fitness(double accuracy, int selected_count, int n, double alpha,
                              double beta);

}  // namespace ecwsa
