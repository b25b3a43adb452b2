#pragma once

#include <optional>

#include "miml/data.hpp"

namespace miml {

// Descriptive statistics of a MIML dataset.
struct DatasetStats {
    Index num_bags = 0;
    Index num_labels = 0;
    Index num_attributes = 0;
    Index bag_size_min = 0;
    Index bag_size_max = 0;
    double bag_size_mean = 0.0;
    double cardinality = 0.0;
    double density = 0.0;
    Index distinct_labelsets = 0;
    Eigen::VectorXi label_frequencies;          // q
    Eigen::MatrixXi cooccurrence;               // q x q, diagonal = frequencies
    std::vector<std::optional<double>> irlbl;   // per label; absent when freq == 0
    double mean_ir = 1.0;                       // mean of defined irlbl entries
};

DatasetStats compute_stats(const MIMLDataset& ds);

// The `stats` CLI subcommand output: a flat key=value block with a fixed key
// list for scriptability.
std::string format_stats(const DatasetStats& stats,
                         const std::vector<std::string>& label_names);

} // namespace miml
