#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "types.hpp"

namespace ecwsa {

struct CsvOptions {
  bool has_header = false;
  // Empty selects the last column. Otherwise a 0-based column index, or a
  // column name when the file has a header.
  std::string label_column;
};

// Immutable after load; freely shared across threads.
class Dataset {
 public:
  const std::string& name() const { return name_; }
  int num_features() const { return num_features_; }
  int num_instances() const { return static_cast<int>(labels_.size()); }
  int num_classes() const { return static_cast<int>(class_names_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  std::uint64_t checksum() const { return checksum_; }
  int rows_total() const { return rows_total_; }
  int rows_rejected() const { return static_cast<int>(rejected_rows_.size()); }
  const std::vector<int>& rejected_rows() const { return rejected_rows_; }
  bool normalized() const { return normalized_; }

  double at(int row, int col) const {
    return matrix_[static_cast<std::size_t>(row) * num_features_ + col];
  }
  const double* row(int r) const {
    return matrix_.data() + static_cast<std::size_t>(r) * num_features_;
  }

  std::vector<double> column(int col) const;

 private:
  friend Dataset load_csv(const std::string&, const CsvOptions&);
  friend Dataset min_max_normalize(const Dataset&);

  std::string name_;
  int num_features_ = 0;
  std::vector<double> matrix_;  // row-major, instances x features
  std::vector<int> labels_;
  std::vector<std::string> class_names_;  // encoded label -> original text
  std::vector<double> col_min_, col_max_;  // statistics used for normalization
  std::uint64_t checksum_ = 0;  // FNV-1a 64 of the raw file bytes
  int rows_total_ = 0;          // data rows seen in the file (header excluded)
  std::vector<int> rejected_rows_;  // 1-based row numbers dropped for missing values
  bool normalized_ = false;
};

// Parses a numeric CSV. Cells "?", "" and "NA" mark missing values and drop
// the whole row (row numbers recorded); any other non-numeric feature cell is
// a parse_error naming the row and column. Labels are encoded in
// first-appearance order. Throws std::invalid_argument for a single-class
// file and parse_error for malformed input.
Dataset load_csv(const std::string& path, const CsvOptions& options = {});

// Maps every column to [0,1] via (x - min) / (max - min); constant columns
// map to all-zero.
Dataset min_max_normalize(const Dataset& dataset);

// Deterministic stratified fold assignment: per-class counts per fold differ
// by at most 1, and so do total fold sizes. Throws std::invalid_argument when
// folds < 2 or folds > instance count.
std::vector<int> stratified_folds(const Dataset& dataset, int folds, std::uint64_t seed);

std::uint64_t fnv1a64(const void* data, std::size_t len);

}  // namespace ecwsa
