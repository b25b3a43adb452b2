#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "miml/data.hpp"

namespace miml {

enum class PartitionStrategy { Random, Powerset, Iterative };

PartitionStrategy strategy_from_name(const std::string& name);
std::string strategy_name(PartitionStrategy strategy);

// Fold membership of every bag. Holdout is the k=2 case with unequal
// capacities (part 0 = train, part 1 = test).
struct FoldAssignment {
    Index k = 0;
    std::vector<Index> assignment; // per bag, in [0, k)
    std::uint64_t seed = 0;
};

// k-fold partition with equal fold capacities.
//
// All strategies draw from a single std::mt19937_64 seeded once per call;
// shuffles are Fisher-Yates with modulo draws, so the same seed reproduces
// the same assignment on any platform.
//   Random    — shuffle all bags, deal round-robin.
//   Powerset  — group bags by exact labelset (first-occurrence group order),
//               shuffle each group, deal each group to the least-filled fold.
//   Iterative — iterative stratification: repeatedly take the label with the
//               fewest remaining positive bags and assign its bags to the
//               fold with the largest remaining desire for that label; ties
//               broken by largest remaining capacity, then seeded random.
FoldAssignment partition(const MIMLDataset& ds, PartitionStrategy strategy, Index k,
                         std::uint64_t seed);

// Two-part split with capacities (train_fraction, 1 - train_fraction) and the
// same stratification semantics. Returns (train indices, test indices), each
// in dataset order.
std::pair<std::vector<Index>, std::vector<Index>>
split_holdout(const MIMLDataset& ds, PartitionStrategy strategy, double train_fraction,
              std::uint64_t seed);

// (train, test) datasets for one fold, built via select_bags in dataset order.
std::pair<MIMLDataset, MIMLDataset> materialize_folds(const MIMLDataset& ds,
                                                      const FoldAssignment& fa, Index fold);

} // namespace miml
