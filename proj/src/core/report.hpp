#pragma once

#include <string>

#include "engine.hpp"

namespace ecwsa {

// Canonical run report. Every field except "timestamp" is a pure function of
// (config, dataset), so two runs with the same inputs emit byte-identical
// JSON once that one field is stripped.
std::string report_to_json(const RunReport& report, const std::string& variant = "custom");

// "iteration,best_accuracy" rows.
std::string convergence_csv(const RunReport& report);

std::string aggregate_to_json(const AggregateStats& agg, const std::string& variant,
                              const std::string& dataset_name);

// One table row; pair with aggregate_csv_header().
std::string aggregate_csv_row(const AggregateStats& agg, const std::string& variant,
                              const std::string& dataset_name);
std::string aggregate_csv_header();

}  // namespace ecwsa
