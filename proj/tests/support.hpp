#pragma once

// Test-only helpers: random fixture generation and independent brute-force
// oracles. Everything here is written directly from the definitions with
// plain loops and stays independent of the library's implementation paths.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "miml/data.hpp"
#include "miml/distance.hpp"
#include "miml/prediction.hpp"

namespace support {

using miml::Bag;
using miml::Index;
using miml::MIMLDataset;

struct DatasetLimits {
    Index max_bags = 20;
    Index max_dim = 5;
    Index max_labels = 4;
    Index max_bag_size = 6;
};

inline MIMLDataset random_dataset(std::mt19937_64& rng, const DatasetLimits& limits = {})
{
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    const Index m = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(limits.max_bags));
    const Index d = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(limits.max_dim));
    const Index q =
        2 + static_cast<Index>(rng() % static_cast<std::uint64_t>(limits.max_labels - 1));

    MIMLDataset ds;
    ds.relation_name = "random";
    for (Index c = 0; c < d; ++c)
        ds.schema.names.push_back("f" + std::to_string(c));
    for (Index l = 0; l < q; ++l)
        ds.labels.label_names.push_back("label" + std::to_string(l));
    ds.labels.values.resize(m, q);
    for (Index i = 0; i < m; ++i) {
        Bag bag;
        bag.id = "bag" + std::to_string(i);
        const Index n =
            1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(limits.max_bag_size));
        bag.instances.resize(n, d);
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < d; ++c)
                bag.instances(r, c) = value(rng);
        ds.bags.push_back(std::move(bag));
        for (Index l = 0; l < q; ++l)
            ds.labels.values(i, l) = static_cast<int>(rng() % 2);
    }
    return ds;
}

inline Bag random_bag(std::mt19937_64& rng, Index d, Index max_size = 6)
{
    std::uniform_real_distribution<double> value(-5.0, 5.0);
    Bag bag;
    bag.id = "b";
    const Index n = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(max_size));
    bag.instances.resize(n, d);
    for (Index r = 0; r < n; ++r)
        for (Index c = 0; c < d; ++c)
            bag.instances(r, c) = value(rng);
    return bag;
}

// ------------------------------------------------------- distance oracles

inline double euclidean(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b)
{
    double sum = 0.0;
    for (Index c = 0; c < a.size(); ++c)
        sum += (a(c) - b(c)) * (a(c) - b(c));
    return std::sqrt(sum);
}

inline double point_to_set(const Eigen::RowVectorXd& x, const Eigen::MatrixXd& set)
{
    double best = euclidean(x, set.row(0));
    for (Index r = 1; r < set.rows(); ++r)
        best = std::min(best, euclidean(x, set.row(r)));
    return best;
}

inline double oracle_hausdorff(miml::HausdorffVariant variant, const Bag& a, const Bag& b)
{
    switch (variant) {
    case miml::HausdorffVariant::Minimal: {
        double best = euclidean(a.instances.row(0), b.instances.row(0));
        for (Index i = 0; i < a.size(); ++i)
            for (Index j = 0; j < b.size(); ++j)
                best = std::min(best, euclidean(a.instances.row(i), b.instances.row(j)));
        return best;
    }
    case miml::HausdorffVariant::Maximal: {
        double ab = 0.0;
        for (Index i = 0; i < a.size(); ++i)
            ab = std::max(ab, point_to_set(a.instances.row(i), b.instances));
        double ba = 0.0;
        for (Index j = 0; j < b.size(); ++j)
            ba = std::max(ba, point_to_set(b.instances.row(j), a.instances));
        return std::max(ab, ba);
    }
    case miml::HausdorffVariant::Average: {
        double sum = 0.0;
        for (Index i = 0; i < a.size(); ++i)
            sum += point_to_set(a.instances.row(i), b.instances);
        for (Index j = 0; j < b.size(); ++j)
            sum += point_to_set(b.instances.row(j), a.instances);
        return sum / static_cast<double>(a.size() + b.size());
    }
    }
    return 0.0;
}

// -------------------------------------------------------- neighbor oracles

// Exhaustive sort by (distance, training index).
inline std::vector<Index> oracle_k_nearest(const MIMLDataset& train,
                                           miml::HausdorffVariant variant, const Bag& query,
                                           Index k, Index exclude = -1)
{
    std::vector<std::pair<double, Index>> order;
    for (Index j = 0; j < train.num_bags(); ++j) {
        if (j == exclude)
            continue;
        order.emplace_back(
            oracle_hausdorff(variant, query, train.bags[static_cast<std::size_t>(j)]), j);
    }
    std::sort(order.begin(), order.end());
    std::vector<Index> out;
    for (Index i = 0; i < k && i < static_cast<Index>(order.size()); ++i)
        out.push_back(order[static_cast<std::size_t>(i)].second);
    return out;
}

inline miml::Prediction oracle_brknn(const MIMLDataset& train, miml::HausdorffVariant variant,
                                     const Bag& query, Index k)
{
    const std::vector<Index> nn = oracle_k_nearest(train, variant, query, k);
    const Index q = train.num_labels();
    miml::Prediction pred;
    pred.confidences.resize(q);
    pred.bipartition.resize(q);
    for (Index l = 0; l < q; ++l) {
        double positives = 0.0;
        for (Index j : nn)
            positives += train.labels.values(j, l);
        pred.confidences(l) = positives / static_cast<double>(k);
        pred.bipartition(l) = pred.confidences(l) >= 0.5 ? 1 : 0;
    }
    return pred;
}

inline miml::Prediction oracle_mapknn(const MIMLDataset& train, miml::HausdorffVariant variant,
                                      const Bag& query, Index k)
{
    const Index m = train.num_bags();
    const Index q = train.num_labels();
    const double s = 1.0;

    miml::Prediction pred;
    pred.confidences.resize(q);
    pred.bipartition.resize(q);
    for (Index l = 0; l < q; ++l) {
        double freq = 0.0;
        for (Index i = 0; i < m; ++i)
            freq += train.labels.values(i, l);
        const double prior_pos = (s + freq) / (2.0 * s + static_cast<double>(m));

        std::vector<double> pos_counts(static_cast<std::size_t>(k + 1), 0.0);
        std::vector<double> neg_counts(static_cast<std::size_t>(k + 1), 0.0);
        for (Index i = 0; i < m; ++i) {
            const std::vector<Index> nn =
                oracle_k_nearest(train, variant, train.bags[static_cast<std::size_t>(i)], k, i);
            Index count = 0;
            for (Index j : nn)
                count += train.labels.values(j, l);
            if (train.labels.values(i, l) == 1)
                pos_counts[static_cast<std::size_t>(count)] += 1.0;
            else
                neg_counts[static_cast<std::size_t>(count)] += 1.0;
        }
        double pos_total = 0.0, neg_total = 0.0;
        for (Index c = 0; c <= k; ++c) {
            pos_total += pos_counts[static_cast<std::size_t>(c)];
            neg_total += neg_counts[static_cast<std::size_t>(c)];
        }

        const std::vector<Index> nn = oracle_k_nearest(train, variant, query, k);
        Index count = 0;
        for (Index j : nn)
            count += train.labels.values(j, l);

        const double bins = static_cast<double>(k + 1);
        const double like_pos =
            (s + pos_counts[static_cast<std::size_t>(count)]) / (s * bins + pos_total);
        const double like_neg =
            (s + neg_counts[static_cast<std::size_t>(count)]) / (s * bins + neg_total);
        const double pos = prior_pos * like_pos;
        const double neg = (1.0 - prior_pos) * like_neg;
        pred.confidences(l) = pos / (pos + neg);
        pred.bipartition(l) = pos >= neg ? 1 : 0;
    }
    return pred;
}

// MIMLkNN reference: citation neighborhoods rebuilt with plain loops and the
// ridge system solved through an explicit dense inverse.
struct OracleMIMLkNN {
    const MIMLDataset& train;
    miml::HausdorffVariant variant;
    Index refs;
    Index citers;
    Eigen::MatrixXd dist;
    Eigen::MatrixXd weights;

    OracleMIMLkNN(const MIMLDataset& train_ds, miml::HausdorffVariant v, Index r, Index c)
        : train(train_ds), variant(v), refs(r), citers(c)
    {
        const Index m = train.num_bags();
        const Index q = train.num_labels();
        dist.resize(m, m);
        for (Index i = 0; i < m; ++i)
            for (Index j = 0; j < m; ++j)
                dist(i, j) = oracle_hausdorff(variant, train.bags[static_cast<std::size_t>(i)],
                                              train.bags[static_cast<std::size_t>(j)]);

        Eigen::MatrixXd v_mat(m, q), t_mat(m, q);
        for (Index i = 0; i < m; ++i) {
            std::set<Index> hood;
            // r nearest references of i
            std::vector<std::pair<double, Index>> order;
            for (Index j = 0; j < m; ++j)
                if (j != i)
                    order.emplace_back(dist(i, j), j);
            std::sort(order.begin(), order.end());
            for (Index n = 0; n < refs; ++n)
                hood.insert(order[static_cast<std::size_t>(n)].second);
            // training bags counting i among their c nearest
            for (Index j = 0; j < m; ++j) {
                if (j == i)
                    continue;
                Index closer = 0;
                for (Index t = 0; t < m; ++t) {
                    if (t == j || t == i)
                        continue;
                    if (dist(j, t) < dist(j, i) || (dist(j, t) == dist(j, i) && t < i))
                        ++closer;
                }
                if (closer < citers)
                    hood.insert(j);
            }
            for (Index l = 0; l < q; ++l) {
                double count = 0.0;
                for (Index j : hood)
                    count += train.labels.values(j, l);
                v_mat(i, l) = count;
                t_mat(i, l) = train.labels.values(i, l) == 1 ? 1.0 : -1.0;
            }
        }
        const Eigen::MatrixXd gram =
            v_mat.transpose() * v_mat + 1e-6 * Eigen::MatrixXd::Identity(q, q);
        weights = gram.inverse() * v_mat.transpose() * t_mat;
    }

    Eigen::VectorXd confidences(const Bag& query) const
    {
        const Index m = train.num_bags();
        const Index q = train.num_labels();
        Eigen::VectorXd query_dist(m);
        for (Index j = 0; j < m; ++j)
            query_dist(j) =
                oracle_hausdorff(variant, query, train.bags[static_cast<std::size_t>(j)]);

        std::set<Index> hood;
        std::vector<std::pair<double, Index>> order;
        for (Index j = 0; j < m; ++j)
            order.emplace_back(query_dist(j), j);
        std::sort(order.begin(), order.end());
        for (Index n = 0; n < refs; ++n)
            hood.insert(order[static_cast<std::size_t>(n)].second);
        for (Index j = 0; j < m; ++j) {
            Index closer = 0;
            for (Index t = 0; t < m; ++t)
                if (t != j && dist(j, t) <= query_dist(j))
                    ++closer;
            if (closer < citers)
                hood.insert(j);
        }

        Eigen::VectorXd counts = Eigen::VectorXd::Zero(q);
        for (Index j : hood)
            counts += train.labels.values.row(j).cast<double>().transpose();
        return weights.transpose() * counts;
    }
};

// --------------------------------------------------------- metrics oracle

struct OracleMetrics {
    std::map<std::string, double> values;
};

// Per-definition computation with plain loops; skips for ranking measures
// follow the documented conventions.
OracleMetrics oracle_metrics(const miml::LabelMatrix& truth,
                             const std::vector<miml::Prediction>& preds);

} // namespace support
