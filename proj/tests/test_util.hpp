#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "core/dataset.hpp"
#include "core/rng.hpp"

namespace testutil {

// Writes a CSV (label last) into the per-process temp dir and returns the path.
inline std::string write_csv(const std::string& name,
                             const std::vector<std::vector<double>>& features,
                             const std::vector<std::string>& labels,
                             const std::string& header = "") {
  const auto dir = std::filesystem::temp_directory_path() / "ecwsa_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path);
  if (!header.empty()) out << header << "\n";
  for (std::size_t r = 0; r < features.size(); ++r) {
    for (double v : features[r]) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.10g", v);
      out << buf << ",";
    }
    out << labels[r] << "\n";
  }
  return path.string();
}

// Two-class dataset where feature 0 tracks the label and the rest are noise.
// KNN on feature 0 alone is nearly perfect.
inline std::string make_informative_csv(const std::string& name, int instances, int features,
                                        std::uint64_t seed) {
  ecwsa::RngStream rng(seed);
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (int i = 0; i < instances; ++i) {
    const int label = i % 2;
    std::vector<double> row(static_cast<std::size_t>(features));
    row[0] = static_cast<double>(label) + rng.next_range(-0.1, 0.1);
    for (int f = 1; f < features; ++f) row[static_cast<std::size_t>(f)] = rng.next_unit();
    rows.push_back(std::move(row));
    labels.push_back(label == 0 ? "a" : "b");
  }
  return write_csv(name, rows, labels);
}

inline ecwsa::Dataset load_informative(const std::string& name, int instances, int features,
                                       std::uint64_t seed) {
  return ecwsa::min_max_normalize(
      ecwsa::load_csv(make_informative_csv(name, instances, features, seed)));
}

}  // namespace testutil
