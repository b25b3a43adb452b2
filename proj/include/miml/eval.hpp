#pragma once

#include "miml/classify.hpp"
#include "miml/metrics.hpp"
#include "miml/partition.hpp"

namespace miml {

// Trains once on `train_ds`, predicts every test bag, and evaluates the
// requested measures. Wall-clock train/test times are recorded on the result.
EvaluationResult evaluate_holdout(const MIMLClassifierSpec& spec, const MIMLDataset& train_ds,
                                  const MIMLDataset& test_ds,
                                  const std::vector<std::string>& measures, bool per_label);

// k-fold cross-validation: partitions the dataset, runs evaluate_holdout per
// fold, and reports per-fold values plus the mean and sample (n-1) standard
// deviation of every measure. Folds run concurrently when `parallel` is set;
// results are aggregated in fold order and identical to a sequential run.
EvaluationResult evaluate_cv(const MIMLClassifierSpec& spec, const MIMLDataset& ds, Index k,
                             std::uint64_t seed, PartitionStrategy strategy,
                             const std::vector<std::string>& measures, bool per_label,
                             bool parallel = false);

} // namespace miml
