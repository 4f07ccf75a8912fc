#include "dataset.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rng.hpp"

namespace ecwsa {

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<double> Dataset::column(int col) const {
  std::vector<double> out(labels_.size());
  for (std::size_t r = 0; r < labels_.size(); ++r)
    out[r] = matrix_[r * num_features_ + static_cast<std::size_t>(col)];
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      fields.push_back(trim(std::string_view(line).substr(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

bool is_missing(const std::string& cell) {
  return cell.empty() || cell == "?" || cell == "NA" || cell == "na";
}

bool parse_number(const std::string& cell, double& out) {
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Dataset load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open dataset file: " + path);
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  Dataset ds;
  ds.checksum_ = fnv1a64(raw.data(), raw.size());
  ds.name_ = std::filesystem::path(path).stem().string();

  std::vector<std::string> lines;
  {
    std::istringstream ss(raw);
    std::string line;
    while (std::getline(ss, line)) {
      if (!trim(line).empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw parse_error(path + ": file has no data rows");

  std::size_t first_data = 0;
  std::vector<std::string> header;
  if (options.has_header) {
    header = split_csv_line(lines[0]);
    first_data = 1;
    if (lines.size() == 1) throw parse_error(path + ": file has no data rows");
  }

  const std::size_t num_cols = split_csv_line(lines[first_data]).size();
  if (num_cols < 2) throw std::invalid_argument(path + ": need at least one feature column and a label column");

  // resolve label column: default last, else index, else header name
  std::size_t label_col = num_cols - 1;
  if (!options.label_column.empty()) {
    const std::string& sel = options.label_column;
    bool numeric = !sel.empty() && sel.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
      label_col = static_cast<std::size_t>(std::stoul(sel));
      if (label_col >= num_cols)
        throw std::invalid_argument(path + ": label column index out of range");
    } else {
      if (!options.has_header)
        throw std::invalid_argument("label column by name requires a header row");
      auto it = std::find(header.begin(), header.end(), sel);
      if (it == header.end())
        throw std::invalid_argument(path + ": no header column named '" + sel + "'");
      label_col = static_cast<std::size_t>(it - header.begin());
    }
  }

  ds.num_features_ = static_cast<int>(num_cols - 1);

  std::vector<std::string> class_names;
  for (std::size_t li = first_data; li < lines.size(); ++li) {
    const int row_number = static_cast<int>(li - first_data + 1);  // 1-based data row
    auto fields = split_csv_line(lines[li]);
    if (fields.size() != num_cols) {
      throw parse_error(path + ": row " + std::to_string(row_number) + " has " +
                        std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(num_cols));
    }
    ++ds.rows_total_;

    bool missing = false;
    std::vector<double> feats;
    feats.reserve(num_cols - 1);
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (c == label_col) continue;
      if (is_missing(fields[c])) {
        missing = true;
        break;
      }
      double v;
      if (!parse_number(fields[c], v)) {
        throw parse_error(path + ": row " + std::to_string(row_number) + ", column " +
                          std::to_string(c + 1) + ": non-numeric feature value '" + fields[c] +
                          "'");
      }
      feats.push_back(v);
    }
    if (missing || is_missing(fields[label_col])) {
      ds.rejected_rows_.push_back(row_number);
      continue;
    }

    const std::string& label = fields[label_col];
    auto it = std::find(class_names.begin(), class_names.end(), label);
    int encoded;
    if (it == class_names.end()) {
      encoded = static_cast<int>(class_names.size());
      class_names.push_back(label);
    } else {
      encoded = static_cast<int>(it - class_names.begin());
    }
    ds.matrix_.insert(ds.matrix_.end(), feats.begin(), feats.end());
    ds.labels_.push_back(encoded);
  }

  if (ds.labels_.empty()) throw std::invalid_argument(path + ": no usable rows after filtering");
  if (class_names.size() < 2)
    throw std::invalid_argument(path + ": dataset must contain at least two classes");
  ds.class_names_ = std::move(class_names);

  ds.col_min_.resize(static_cast<std::size_t>(ds.num_features_));
  ds.col_max_.resize(static_cast<std::size_t>(ds.num_features_));
  for (int c = 0; c < ds.num_features_; ++c) {
    double lo = ds.at(0, c), hi = ds.at(0, c);
    for (int r = 1; r < ds.num_instances(); ++r) {
      lo = std::min(lo, ds.at(r, c));
      hi = std::max(hi, ds.at(r, c));
    }
    ds.col_min_[static_cast<std::size_t>(c)] = lo;
    ds.col_max_[static_cast<std::size_t>(c)] = hi;
  }
  return ds;
}

Dataset min_max_normalize(const Dataset& dataset) {
  Dataset out = dataset;
  for (int c = 0; c < out.num_features_; ++c) {
    const double lo = out.col_min_[static_cast<std::size_t>(c)];
    const double hi = out.col_max_[static_cast<std::size_t>(c)];
    const double range = hi - lo;
    for (int r = 0; r < out.num_instances(); ++r) {
      double& v = out.matrix_[static_cast<std::size_t>(r) * out.num_features_ + c];
      v = range > 0.0 ? (v - lo) / range : 0.0;
    }
  }
  out.normalized_ = true;
  return out;
}

std::vector<int> stratified_folds(const Dataset& dataset, int folds, std::uint64_t seed) {
  const int n = dataset.num_instances();
  if (folds < 2) throw std::invalid_argument("folds must be >= 2");
  if (folds > n) throw std::invalid_argument("more folds than instances");

  std::vector<std::vector<int>> by_class(static_cast<std::size_t>(dataset.num_classes()));
  for (int i = 0; i < n; ++i)
    by_class[static_cast<std::size_t>(dataset.labels()[i])].push_back(i);

  RngStream rng = substream(seed, 0, 0, Purpose::Folds);
  std::vector<int> fold_of(static_cast<std::size_t>(n), -1);
  // A running fold counter across classes keeps both the per-class and the
  // total fold sizes within one of each other.
  int counter = 0;
  for (auto& members : by_class) {
    for (std::size_t i = members.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
      std::swap(members[i - 1], members[j]);
    }
    for (int idx : members) {
      fold_of[static_cast<std::size_t>(idx)] = counter % folds;
      ++counter;
    }
  }
  return fold_of;
}

}  // namespace ecwsa
