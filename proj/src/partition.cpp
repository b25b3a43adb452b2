#include "miml/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace miml {

namespace {

// Fisher-Yates with modulo draws. std::shuffle's draw sequence is not pinned
// by the standard; this one is, so seeds reproduce everywhere.
void shuffle_indices(std::vector<Index>& items, std::mt19937_64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[static_cast<std::size_t>(rng() % i)]);
}

struct Dealer {
    std::vector<double> remaining; // desired capacity minus assigned count

    explicit Dealer(const std::vector<double>& capacities) : remaining(capacities) {}

    // Part with the largest remaining desire; ties go to the lowest index.
    // With equal capacities this is exactly round-robin from the least-filled
    // part.
    std::size_t deal()
    {
        std::size_t best = 0;
        for (std::size_t j = 1; j < remaining.size(); ++j)
            if (remaining[j] > remaining[best])
                best = j;
        remaining[best] -= 1.0;
        return best;
    }
};

std::vector<double> capacities(Index m, const std::vector<double>& weights)
{
    std::vector<double> caps(weights.size());
    for (std::size_t j = 0; j < weights.size(); ++j)
        caps[j] = static_cast<double>(m) * weights[j];
    return caps;
}

std::vector<Index> assign_random(const MIMLDataset& ds, const std::vector<double>& weights,
                                 std::mt19937_64& rng)
{
    const Index m = ds.num_bags();
    std::vector<Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Index{0});
    shuffle_indices(order, rng);

    std::vector<Index> assignment(static_cast<std::size_t>(m));
    Dealer dealer(capacities(m, weights));
    for (Index bag : order)
        assignment[static_cast<std::size_t>(bag)] = static_cast<Index>(dealer.deal());
    return assignment;
}

std::vector<Index> assign_powerset(const MIMLDataset& ds, const std::vector<double>& weights,
                                   std::mt19937_64& rng)
{
    const Index m = ds.num_bags();
    const Index q = ds.num_labels();

    // groups in first-occurrence order
    std::map<std::vector<int>, std::size_t> group_of;
    std::vector<std::vector<Index>> groups;
    for (Index i = 0; i < m; ++i) {
        std::vector<int> key(static_cast<std::size_t>(q));
        for (Index l = 0; l < q; ++l)
            key[static_cast<std::size_t>(l)] = ds.labels.values(i, l);
        auto [it, inserted] = group_of.emplace(key, groups.size());
        if (inserted)
            groups.emplace_back();
        groups[it->second].push_back(i);
    }

    std::vector<Index> assignment(static_cast<std::size_t>(m));
    Dealer dealer(capacities(m, weights));
    for (auto& group : groups) {
        shuffle_indices(group, rng);
        for (Index bag : group)
            assignment[static_cast<std::size_t>(bag)] = static_cast<Index>(dealer.deal());
    }
    return assignment;
}

std::vector<Index> assign_iterative(const MIMLDataset& ds, const std::vector<double>& weights,
                                    std::mt19937_64& rng)
{
    const Index m = ds.num_bags();
    const Index q = ds.num_labels();
    const std::size_t parts = weights.size();
    const Eigen::MatrixXi& y = ds.labels.values;

    std::vector<double> capacity = capacities(m, weights);
    // desired positive count of label l in part j
    std::vector<std::vector<double>> desire(parts, std::vector<double>(static_cast<std::size_t>(q)));
    for (Index l = 0; l < q; ++l) {
        const double freq = y.col(l).sum();
        for (std::size_t j = 0; j < parts; ++j)
            desire[j][static_cast<std::size_t>(l)] = freq * weights[j];
    }

    std::vector<Index> assignment(static_cast<std::size_t>(m), Index{-1});
    std::vector<bool> assigned(static_cast<std::size_t>(m), false);

    auto place = [&](Index bag, std::size_t part) {
        assignment[static_cast<std::size_t>(bag)] = static_cast<Index>(part);
        assigned[static_cast<std::size_t>(bag)] = true;
        capacity[part] -= 1.0;
        for (Index l = 0; l < q; ++l)
            if (y(bag, l) == 1)
                desire[part][static_cast<std::size_t>(l)] -= 1.0;
    };

    auto pick_part = [&](const std::vector<std::size_t>& candidates) {
        return candidates.size() == 1
            ? candidates[0]
            : candidates[static_cast<std::size_t>(rng() % candidates.size())];
    };

    for (;;) {
        // label with the fewest remaining unassigned positives (> 0)
        Index target = -1;
        Index target_count = 0;
        for (Index l = 0; l < q; ++l) {
            Index count = 0;
            for (Index i = 0; i < m; ++i)
                if (!assigned[static_cast<std::size_t>(i)] && y(i, l) == 1)
                    ++count;
            if (count > 0 && (target < 0 || count < target_count)) {
                target = l;
                target_count = count;
            }
        }
        if (target < 0)
            break;

        for (Index i = 0; i < m; ++i) {
            if (assigned[static_cast<std::size_t>(i)] || y(i, target) != 1)
                continue;
            // part with the largest remaining desire for the target label,
            // ties by largest remaining capacity, then seeded random
            std::vector<std::size_t> best;
            for (std::size_t j = 0; j < parts; ++j) {
                if (best.empty()
                    || desire[j][static_cast<std::size_t>(target)]
                        > desire[best[0]][static_cast<std::size_t>(target)])
                    best = {j};
                else if (desire[j][static_cast<std::size_t>(target)]
                         == desire[best[0]][static_cast<std::size_t>(target)])
                    best.push_back(j);
            }
            if (best.size() > 1) {
                std::vector<std::size_t> fullest;
                for (std::size_t j : best)
                    if (fullest.empty() || capacity[j] > capacity[fullest[0]])
                        fullest = {j};
                    else if (capacity[j] == capacity[fullest[0]])
                        fullest.push_back(j);
                best = std::move(fullest);
            }
            place(i, pick_part(best));
        }
    }

    // bags with no positive labels left: by remaining capacity
    for (Index i = 0; i < m; ++i) {
        if (assigned[static_cast<std::size_t>(i)])
            continue;
        std::vector<std::size_t> best;
        for (std::size_t j = 0; j < parts; ++j)
            if (best.empty() || capacity[j] > capacity[best[0]])
                best = {j};
            else if (capacity[j] == capacity[best[0]])
                best.push_back(j);
        place(i, pick_part(best));
    }
    return assignment;
}

std::vector<Index> assign(const MIMLDataset& ds, PartitionStrategy strategy,
                          const std::vector<double>& weights, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    switch (strategy) {
    case PartitionStrategy::Random: return assign_random(ds, weights, rng);
    case PartitionStrategy::Powerset: return assign_powerset(ds, weights, rng);
    case PartitionStrategy::Iterative: return assign_iterative(ds, weights, rng);
    }
    throw Error(ErrorKind::BadParameter, "unknown partition strategy");
}

} // namespace

PartitionStrategy strategy_from_name(const std::string& name)
{
    if (name == "Random" || name == "random")
        return PartitionStrategy::Random;
    if (name == "Powerset" || name == "powerset")
        return PartitionStrategy::Powerset;
    if (name == "Iterative" || name == "iterative")
        return PartitionStrategy::Iterative;
    throw Error(ErrorKind::BadParameter, "unknown partition strategy '" + name + "'");
}

std::string strategy_name(PartitionStrategy strategy)
{
    switch (strategy) {
    case PartitionStrategy::Random: return "Random";
    case PartitionStrategy::Powerset: return "Powerset";
    case PartitionStrategy::Iterative: return "Iterative";
    }
    return "Random";
}

FoldAssignment partition(const MIMLDataset& ds, PartitionStrategy strategy, Index k,
                         std::uint64_t seed)
{
    const Index m = ds.num_bags();
    if (k < 2 || k > m)
        throw Error(ErrorKind::InvalidK,
                    "k = " + std::to_string(k) + " must be in [2, " + std::to_string(m) + "]");

    std::vector<double> weights(static_cast<std::size_t>(k),
                                1.0 / static_cast<double>(k));
    FoldAssignment fa;
    fa.k = k;
    fa.seed = seed;
    fa.assignment = assign(ds, strategy, weights, seed);
    return fa;
}

std::pair<std::vector<Index>, std::vector<Index>>
split_holdout(const MIMLDataset& ds, PartitionStrategy strategy, double train_fraction,
              std::uint64_t seed)
{
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw Error(ErrorKind::InvalidFraction,
                    "train fraction must lie in (0, 1)");

    std::vector<double> weights = {train_fraction, 1.0 - train_fraction};
    std::vector<Index> assignment = assign(ds, strategy, weights, seed);

    std::vector<Index> train, test;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        (assignment[i] == 0 ? train : test).push_back(static_cast<Index>(i));
    if (train.empty() || test.empty())
        throw Error(ErrorKind::InvalidFraction,
                    "train fraction leaves one part empty");
    return {std::move(train), std::move(test)};
}

std::pair<MIMLDataset, MIMLDataset> materialize_folds(const MIMLDataset& ds,
                                                      const FoldAssignment& fa, Index fold)
{
    if (fold < 0 || fold >= fa.k)
        throw Error(ErrorKind::IndexOutOfRange, "fold " + std::to_string(fold));
    std::vector<Index> train, test;
    for (std::size_t i = 0; i < fa.assignment.size(); ++i)
        (fa.assignment[i] == fold ? test : train).push_back(static_cast<Index>(i));
    return {select_bags(ds, train), select_bags(ds, test)};
}

} // namespace miml
