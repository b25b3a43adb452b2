#pragma once

#include <string>

#include "miml/metrics.hpp"

namespace miml {

// CSV report: header row, one row per fold plus mean and std rows for CV, a
// single row for holdout. Columns: dataset, algorithm, fold, then one per
// measure; macro measures expand to "<Measure>[<label>]" columns when
// per_label is set. Values carry 6 fractional digits.
//
// An existing file is refused unless `overwrite` is set.
void write_report(const EvaluationResult& result, const std::string& path,
                  const std::string& dataset_name, const std::string& algorithm_key,
                  bool per_label, bool overwrite = false);

// The CSV content write_report would emit.
std::string format_report(const EvaluationResult& result, const std::string& dataset_name,
                          const std::string& algorithm_key, bool per_label);

} // namespace miml
