#pragma once

#include <map>
#include <string>
#include <vector>

#include "miml/data.hpp"
#include "miml/prediction.hpp"

namespace miml {

// One row of measure values: scalar per measure, plus per-label vectors for
// macro-averaged measures when requested.
struct MeasureValues {
    std::map<std::string, double> scalars;
    std::map<std::string, Eigen::VectorXd> per_label;
};

// Result of one evaluation. For holdout, `folds` is empty and `summary`
// carries the values. For cross-validation, `folds` holds one row per fold
// and `summary` / `dispersion` the per-measure mean and sample (n-1) std.
struct EvaluationResult {
    std::vector<std::string> measures; // column order
    std::vector<std::string> label_names;
    MeasureValues summary;
    MeasureValues dispersion;
    std::vector<MeasureValues> folds;
    double train_seconds = 0.0;
    double test_seconds = 0.0;
};

// Canonical measure names, in report column order. These exact strings are
// the configuration-file contract.
const std::vector<std::string>& all_measure_names();

bool is_macro_measure(const std::string& name);

// Computes the named measures over a (truth, predictions) pairing.
//
// Conventions: precision/recall/F1 with an empty denominator score 0;
// ranking measures use average (mid) ranks for tied confidences; examples
// without relevant labels (or without irrelevant ones, for Ranking Loss) are
// skipped by the ranking measures.
EvaluationResult evaluate(const LabelMatrix& truth, const std::vector<Prediction>& preds,
                          const std::vector<std::string>& measures, bool per_label);

} // namespace miml
