#pragma once

#include <map>
#include <string>
#include <vector>

#include "miml/data.hpp"

namespace miml {

enum class BagAggregation { Arithmetic, Geometric, MinMax };

BagAggregation aggregation_from_key(const std::string& key);

// Single-instance multi-label view of a MIML dataset: one aggregated feature
// row per bag, labels passed through unchanged.
struct MLDataset {
    Eigen::MatrixXd features; // m x d' (d' = d, or 2d for MinMax)
    LabelMatrix labels;
};

// Multi-instance single-target view: bags plus one integer target per bag
// (0/1 for BR, labelset id for LP).
struct MIDataset {
    const std::vector<Bag>* bags = nullptr; // shared with the source dataset
    std::vector<int> targets;
};

// Aggregates one bag: Arithmetic = per-attribute mean, Geometric =
// per-attribute midpoint (min+max)/2, MinMax = [min_1..min_d, max_1..max_d].
Eigen::VectorXd aggregate_bag(const Bag& bag, BagAggregation method);

MLDataset to_ml(const MIMLDataset& ds, BagAggregation method);

// Binary relevance: one MI dataset per label, bags shared across outputs.
std::vector<MIDataset> to_mi_br(const MIMLDataset& ds);

// Label powerset: labelset ids assigned in first-occurrence order; the
// dictionary maps each id back to its binary label vector.
struct LabelsetDictionary {
    std::vector<Eigen::VectorXi> classes; // id -> label vector

    int num_classes() const { return static_cast<int>(classes.size()); }
    const Eigen::VectorXi& decode(int id) const;
};

std::pair<MIDataset, LabelsetDictionary> to_mi_lp(const MIMLDataset& ds);

} // namespace miml
