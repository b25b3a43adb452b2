#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "miml/data.hpp"

namespace miml {

enum class HausdorffVariant { Average, Minimal, Maximal };

// Bag distance configuration: Hausdorff variant plus optional per-attribute
// min-max normalization using training-set ranges.
struct BagDistanceKind {
    HausdorffVariant variant = HausdorffVariant::Average;
    bool normalize = false;
};

using AttributeRanges = std::vector<std::pair<double, double>>;

// Resolves a registry key such as "distance.AverageHausdorff" (any dotted
// prefix accepted; the last component decides). Throws BadParameter on an
// unknown name.
BagDistanceKind distance_from_key(const std::string& key);
std::string distance_key(const BagDistanceKind& kind);

// Per-attribute (min, max) over all instances of all bags.
AttributeRanges attribute_ranges(const std::vector<Bag>& bags);

// Hausdorff distance between two bags with Euclidean instance metric.
// When kind.normalize is set, attributes are rescaled to [0,1] with the given
// ranges first (zero-width ranges map the attribute to 0).
double bag_distance(const BagDistanceKind& kind, const Bag& a, const Bag& b,
                    const std::optional<AttributeRanges>& ranges = std::nullopt);

// Symmetric, zero-diagonal, non-negative m x m matrix of pairwise distances.
Eigen::MatrixXd pairwise_distances(const BagDistanceKind& kind, const std::vector<Bag>& bags,
                                   const std::optional<AttributeRanges>& ranges = std::nullopt);

} // namespace miml
