#include "miml/classify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "miml/transform.hpp"

namespace miml {

namespace {

constexpr double kRidge = 1e-6;

// ---------------------------------------------------------------- parameters

class Params {
public:
    Params(const MIMLClassifierSpec& spec, std::initializer_list<std::string> allowed)
        : spec_(spec)
    {
        for (const auto& [name, value] : spec.params)
            if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
                throw Error(ErrorKind::BadParameter,
                            "unknown parameter '" + name + "' for " + spec.key);
    }

    bool has(const std::string& name) const { return spec_.params.count(name) > 0; }

    long get_int(const std::string& name, long fallback) const
    {
        if (!has(name))
            return fallback;
        const std::string& raw = spec_.params.at(name);
        long value = 0;
        auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
        if (ec != std::errc() || ptr != raw.data() + raw.size())
            throw Error(ErrorKind::BadParameter,
                        "parameter '" + name + "' = '" + raw + "' is not an integer");
        return value;
    }

    bool get_bool(const std::string& name, bool fallback) const
    {
        if (!has(name))
            return fallback;
        const std::string& raw = spec_.params.at(name);
        if (raw == "true" || raw == "1")
            return true;
        if (raw == "false" || raw == "0")
            return false;
        throw Error(ErrorKind::BadParameter,
                    "parameter '" + name + "' = '" + raw + "' is not a boolean");
    }

    std::string get_string(const std::string& name, const std::string& fallback) const
    {
        return has(name) ? spec_.params.at(name) : fallback;
    }

private:
    const MIMLClassifierSpec& spec_;
};

Index require_range(long value, long lo, long hi, const std::string& name)
{
    if (value < lo || value > hi)
        throw Error(ErrorKind::BadParameter,
                    "parameter '" + name + "' = " + std::to_string(value) + " must be in ["
                        + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<Index>(value);
}

Index default_references(Index m)
{
    return std::max<Index>(1, static_cast<Index>(std::lround(std::sqrt(static_cast<double>(m)))));
}

// ------------------------------------------------------------ neighbor logic

// Indices of the k smallest distances; equal distances ordered by lowest
// index. `exclude` is skipped (pass -1 to keep every candidate).
std::vector<Index> k_nearest(const Eigen::VectorXd& dist, Index k, Index exclude = -1)
{
    std::vector<Index> order;
    order.reserve(static_cast<std::size_t>(dist.size()));
    for (Index i = 0; i < dist.size(); ++i)
        if (i != exclude)
            order.push_back(i);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return dist(a) != dist(b) ? dist(a) < dist(b) : a < b;
    });
    order.resize(static_cast<std::size_t>(std::min<Index>(k, static_cast<Index>(order.size()))));
    return order;
}

// Training bags that count bag i among their c nearest neighbors (i and the
// citer itself excluded from each candidate list, ties by lowest index).
std::vector<Index> citers_of(const Eigen::MatrixXd& dist, Index i, Index c)
{
    std::vector<Index> out;
    for (Index j = 0; j < dist.rows(); ++j) {
        if (j == i)
            continue;
        Index closer = 0;
        for (Index t = 0; t < dist.rows(); ++t) {
            if (t == j || t == i)
                continue;
            if (dist(j, t) < dist(j, i) || (dist(j, t) == dist(j, i) && t < i))
                ++closer;
        }
        if (closer < c)
            out.push_back(j);
    }
    return out;
}

// Citers of an out-of-sample query: training bag j cites the query when the
// query ranks within j's c nearest among the other training bags plus the
// query itself. Distance ties go to training bags.
std::vector<Index> citers_of_query(const Eigen::MatrixXd& train_dist,
                                   const Eigen::VectorXd& query_dist, Index c)
{
    std::vector<Index> out;
    for (Index j = 0; j < train_dist.rows(); ++j) {
        Index closer = 0;
        for (Index t = 0; t < train_dist.rows(); ++t) {
            if (t == j)
                continue;
            if (train_dist(j, t) <= query_dist(j))
                ++closer;
        }
        if (closer < c)
            out.push_back(j);
    }
    return out;
}

// Shared storage of lazy learners.
struct LazyBase {
    std::vector<Bag> bags;
    Eigen::MatrixXi labels; // m x q
    BagDistanceKind kind;

    Eigen::VectorXd query_distances(const Bag& query) const
    {
        Eigen::VectorXd dist(static_cast<Index>(bags.size()));
        for (std::size_t j = 0; j < bags.size(); ++j)
            dist(static_cast<Index>(j)) = bag_distance(kind, query, bags[j]);
        return dist;
    }
};

// ------------------------------------------------------------------ MIMLkNN

// Citation-kNN feature vectors plus a ridge least-squares label mapping.
class MIMLkNNModel : public MIMLClassifier {
public:
    MIMLkNNModel(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
    {
        Params params(spec, {"nReferences", "nCiters", "metric"});
        const Index m = ds.num_bags();
        refs_ = require_range(params.get_int("nReferences", default_references(m)), 1, m - 1,
                              "nReferences");
        citers_ = require_range(params.get_int("nCiters", refs_), 0, m, "nCiters");

        base_.bags = ds.bags;
        base_.labels = ds.labels.values;
        base_.kind = distance_from_key(params.get_string("metric", "distance.AverageHausdorff"));
        dimension_ = ds.dimension();
        num_labels_ = ds.num_labels();

        train_dist_ = pairwise_distances(base_.kind, base_.bags);

        const Index q = num_labels_;
        Eigen::MatrixXd v(m, q);
        Eigen::MatrixXd t(m, q);
        for (Index i = 0; i < m; ++i) {
            v.row(i) = neighborhood_counts(k_nearest(train_dist_.col(i), refs_, i),
                                           citers_of(train_dist_, i, citers_));
            t.row(i) = (2 * base_.labels.row(i).array() - 1).cast<double>();
        }

        // min ||V W - T||^2 + ridge ||W||^2
        Eigen::MatrixXd gram = v.transpose() * v + kRidge * Eigen::MatrixXd::Identity(q, q);
        weights_ = gram.ldlt().solve(v.transpose() * t);
    }

    Prediction predict(const Bag& bag) const override
    {
        check_query(bag);
        const Eigen::VectorXd dist = base_.query_distances(bag);
        const Eigen::VectorXd counts = neighborhood_counts(
            k_nearest(dist, refs_), citers_of_query(train_dist_, dist, citers_));

        Prediction pred;
        pred.confidences = weights_.transpose() * counts;
        pred.bipartition = (pred.confidences.array() >= 0.0).cast<int>();
        return pred;
    }

private:
    Eigen::VectorXd neighborhood_counts(const std::vector<Index>& refs,
                                        const std::vector<Index>& citers) const
    {
        std::set<Index> hood(refs.begin(), refs.end());
        hood.insert(citers.begin(), citers.end());
        Eigen::VectorXd counts = Eigen::VectorXd::Zero(num_labels_);
        for (Index j : hood)
            counts += base_.labels.row(j).cast<double>();
        return counts;
    }

    LazyBase base_;
    Index refs_ = 0;
    Index citers_ = 0;
    Eigen::MatrixXd train_dist_;
    Eigen::MatrixXd weights_; // q x q
};

// ---------------------------------------------------------------- MIMLBRkNN

// Per-label vote fraction among the k nearest training bags.
class BRkNNModel : public MIMLClassifier {
public:
    BRkNNModel(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
    {
        Params params(spec, {"numNeighbours", "metric"});
        k_ = require_range(params.get_int("numNeighbours", 10), 1, ds.num_bags(),
                           "numNeighbours");
        base_.bags = ds.bags;
        base_.labels = ds.labels.values;
        base_.kind = distance_from_key(params.get_string("metric", "distance.AverageHausdorff"));
        dimension_ = ds.dimension();
        num_labels_ = ds.num_labels();
    }

    Prediction predict(const Bag& bag) const override
    {
        check_query(bag);
        const std::vector<Index> nn = k_nearest(base_.query_distances(bag), k_);
        Eigen::VectorXd counts = Eigen::VectorXd::Zero(num_labels_);
        for (Index j : nn)
            counts += base_.labels.row(j).cast<double>();

        Prediction pred;
        pred.confidences = counts / static_cast<double>(k_);
        pred.bipartition = (pred.confidences.array() >= 0.5).cast<int>();
        return pred;
    }

private:
    LazyBase base_;
    Index k_ = 0;
};

// --------------------------------------------------------------- MIMLMAPkNN

// MAP rule over neighbor-positive counts with Laplace smoothing (s = 1);
// frequency tables estimated with leave-one-out neighbor search.
class MAPkNNModel : public MIMLClassifier {
public:
    MAPkNNModel(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
    {
        Params params(spec, {"numNeighbours", "metric"});
        const Index m = ds.num_bags();
        k_ = require_range(params.get_int("numNeighbours", 10), 1, m - 1, "numNeighbours");
        base_.bags = ds.bags;
        base_.labels = ds.labels.values;
        base_.kind = distance_from_key(params.get_string("metric", "distance.AverageHausdorff"));
        dimension_ = ds.dimension();
        num_labels_ = ds.num_labels();

        const Index q = num_labels_;
        const double s = 1.0;

        prior_pos_.resize(q);
        for (Index l = 0; l < q; ++l)
            prior_pos_(l) =
                (s + base_.labels.col(l).sum()) / (2.0 * s + static_cast<double>(m));

        // count tables: rows = labels, columns = neighbor-positive count 0..k
        Eigen::MatrixXd pos_counts = Eigen::MatrixXd::Zero(q, k_ + 1);
        Eigen::MatrixXd neg_counts = Eigen::MatrixXd::Zero(q, k_ + 1);
        const Eigen::MatrixXd dist = pairwise_distances(base_.kind, base_.bags);
        for (Index i = 0; i < m; ++i) {
            const std::vector<Index> nn = k_nearest(dist.col(i), k_, i);
            for (Index l = 0; l < q; ++l) {
                Index count = 0;
                for (Index j : nn)
                    count += base_.labels(j, l);
                if (base_.labels(i, l) == 1)
                    pos_counts(l, count) += 1.0;
                else
                    neg_counts(l, count) += 1.0;
            }
        }

        like_pos_.resize(q, k_ + 1);
        like_neg_.resize(q, k_ + 1);
        const double bins = static_cast<double>(k_ + 1);
        for (Index l = 0; l < q; ++l)
            for (Index c = 0; c <= k_; ++c) {
                like_pos_(l, c) = (s + pos_counts(l, c)) / (s * bins + pos_counts.row(l).sum());
                like_neg_(l, c) = (s + neg_counts(l, c)) / (s * bins + neg_counts.row(l).sum());
            }
    }

    Prediction predict(const Bag& bag) const override
    {
        check_query(bag);
        const std::vector<Index> nn = k_nearest(base_.query_distances(bag), k_);

        Prediction pred;
        pred.confidences.resize(num_labels_);
        pred.bipartition.resize(num_labels_);
        for (Index l = 0; l < num_labels_; ++l) {
            Index count = 0;
            for (Index j : nn)
                count += base_.labels(j, l);
            const double pos = prior_pos_(l) * like_pos_(l, count);
            const double neg = (1.0 - prior_pos_(l)) * like_neg_(l, count);
            pred.confidences(l) = pos / (pos + neg); // posterior of label presence
            pred.bipartition(l) = pos >= neg ? 1 : 0;
        }
        return pred;
    }

private:
    LazyBase base_;
    Index k_ = 0;
    Eigen::VectorXd prior_pos_;
    Eigen::MatrixXd like_pos_;
    Eigen::MatrixXd like_neg_;
};

// ------------------------------------------------------------------ LP kNN

// Label-powerset kNN: majority labelset among the k nearest bags; per-label
// confidence is the neighbor fraction carrying the label.
class LPkNNModel : public MIMLClassifier {
public:
    LPkNNModel(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
    {
        Params params(spec, {"numNeighbours", "metric"});
        k_ = require_range(params.get_int("numNeighbours", 10), 1, ds.num_bags(),
                           "numNeighbours");
        base_.bags = ds.bags;
        base_.labels = ds.labels.values;
        base_.kind = distance_from_key(params.get_string("metric", "distance.AverageHausdorff"));
        dimension_ = ds.dimension();
        num_labels_ = ds.num_labels();

        auto [mi, dict] = to_mi_lp(ds);
        targets_ = std::move(mi.targets);
        dict_ = std::move(dict);
    }

    Prediction predict(const Bag& bag) const override
    {
        check_query(bag);
        const std::vector<Index> nn = k_nearest(base_.query_distances(bag), k_);

        std::vector<Index> votes(static_cast<std::size_t>(dict_.num_classes()), 0);
        Eigen::VectorXd counts = Eigen::VectorXd::Zero(num_labels_);
        for (Index j : nn) {
            ++votes[static_cast<std::size_t>(targets_[static_cast<std::size_t>(j)])];
            counts += base_.labels.row(j).cast<double>();
        }
        const auto winner =
            std::max_element(votes.begin(), votes.end()) - votes.begin(); // ties: lowest id

        Prediction pred;
        pred.confidences = counts / static_cast<double>(k_);
        pred.bipartition = dict_.decode(static_cast<int>(winner));
        return pred;
    }

private:
    LazyBase base_;
    Index k_ = 0;
    std::vector<int> targets_;
    LabelsetDictionary dict_;
};

// -------------------------------------------------------------- MIMLBagging

class BaggingModel : public MIMLClassifier {
public:
    BaggingModel(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
    {
        Params params(spec, {"numClassifiers", "seed", "sampleWithReplacement"});
        if (!spec.base)
            throw Error(ErrorKind::BadParameter,
                        spec.key + " needs a nested baseClassifier element");
        const long t = params.get_int("numClassifiers", 10);
        if (t < 1)
            throw Error(ErrorKind::BadParameter, "numClassifiers must be >= 1");
        const bool sample = params.get_bool("sampleWithReplacement", true);
        const std::uint64_t seed = static_cast<std::uint64_t>(params.get_int("seed", 1));
        dimension_ = ds.dimension();
        num_labels_ = ds.num_labels();

        const Index m = ds.num_bags();
        std::mt19937_64 rng(seed);
        for (long member = 0; member < t; ++member) {
            if (sample) {
                std::vector<Index> indices(static_cast<std::size_t>(m));
                for (auto& idx : indices)
                    idx = static_cast<Index>(rng() % static_cast<std::uint64_t>(m));
                members_.push_back(train(*spec.base, select_bags(ds, indices)));
            } else {
                members_.push_back(train(*spec.base, ds));
            }
        }
    }

    Prediction predict(const Bag& bag) const override
    {
        check_query(bag);
        Prediction pred;
        pred.confidences = Eigen::VectorXd::Zero(num_labels_);
        Eigen::VectorXd votes = Eigen::VectorXd::Zero(num_labels_);
        for (const auto& member : members_) {
            Prediction p = member->predict(bag);
            pred.confidences += p.confidences;
            votes += p.bipartition.cast<double>();
        }
        const double t = static_cast<double>(members_.size());
        pred.confidences /= t;
        pred.bipartition = (votes.array() * 2.0 >= t).cast<int>(); // ties positive
        return pred;
    }

private:
    std::vector<TrainedModel> members_;
};

// ------------------------------------------------------------ ToML wrapper

// Aggregates bags to single instances and delegates to a single-instance
// multi-label learner (kNN over Euclidean distance, which is any Hausdorff
// variant on one-instance bags).
class ToMLModel : public MIMLClassifier {
public:
    ToMLModel(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
    {
        Params params(spec, {"transformMethod", "baseLearner", "numNeighbours"});
        method_ = aggregation_from_key(params.get_string("transformMethod", "Arithmetic"));
        dimension_ = ds.dimension();
        num_labels_ = ds.num_labels();

        MIMLClassifierSpec inner;
        const std::string learner = params.get_string("baseLearner", "MLkNN");
        if (learner == "BRkNN")
            inner.key = "classifiers.lazy.MIMLBRkNN";
        else if (learner == "LPkNN")
            inner.key = "classifiers.lazy.MIMLLPkNN";
        else if (learner == "MLkNN")
            inner.key = "classifiers.lazy.MIMLMAPkNN";
        else
            throw Error(ErrorKind::BadParameter,
                        "baseLearner '" + learner + "' must be BRkNN, LPkNN, or MLkNN");
        if (params.has("numNeighbours"))
            inner.params["numNeighbours"] = params.get_string("numNeighbours", "");

        inner_ = train(inner, aggregated_dataset(ds));
    }

    Prediction predict(const Bag& bag) const override
    {
        check_query(bag);
        return inner_->predict(singleton(aggregate_bag(bag, method_), bag.id));
    }

private:
    static Bag singleton(const Eigen::VectorXd& row, const std::string& id)
    {
        Bag bag;
        bag.id = id;
        bag.instances = row.transpose();
        return bag;
    }

    MIMLDataset aggregated_dataset(const MIMLDataset& ds) const
    {
        const MLDataset ml = to_ml(ds, method_);
        MIMLDataset out;
        out.relation_name = ds.relation_name;
        out.labels = ml.labels;
        for (Index c = 0; c < ml.features.cols(); ++c)
            out.schema.names.push_back("agg" + std::to_string(c));
        for (Index i = 0; i < ml.features.rows(); ++i)
            out.bags.push_back(
                singleton(ml.features.row(i), ds.bags[static_cast<std::size_t>(i)].id));
        return out;
    }

    BagAggregation method_ = BagAggregation::Arithmetic;
    TrainedModel inner_;
};

// ------------------------------------------------------------ ToMI wrapper

// BR or LP label transformation over a built-in multi-instance base learner:
// CitationKNN (references + citers voting on Hausdorff distance) or SimpleMI
// (aggregate the bag, then plain kNN).
class ToMIModel : public MIMLClassifier {
public:
    ToMIModel(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
    {
        Params params(spec, {"labelTransform", "baseLearner", "nReferences", "nCiters",
                             "numNeighbours", "transformMethod", "metric"});
        const Index m = ds.num_bags();

        const std::string transform = params.get_string("labelTransform", "BR");
        if (transform == "BR")
            lp_ = false;
        else if (transform == "LP")
            lp_ = true;
        else
            throw Error(ErrorKind::BadParameter,
                        "labelTransform '" + transform + "' must be BR or LP");

        const std::string learner = params.get_string("baseLearner", "CitationKNN");
        if (learner == "CitationKNN")
            citation_ = true;
        else if (learner == "SimpleMI")
            citation_ = false;
        else
            throw Error(ErrorKind::BadParameter,
                        "baseLearner '" + learner + "' must be CitationKNN or SimpleMI");

        base_.kind = distance_from_key(params.get_string("metric", "distance.AverageHausdorff"));
        base_.labels = ds.labels.values;
        dimension_ = ds.dimension();
        num_labels_ = ds.num_labels();

        if (citation_) {
            refs_ = require_range(params.get_int("nReferences", default_references(m)), 1, m - 1,
                                  "nReferences");
            citers_ = require_range(params.get_int("nCiters", refs_), 0, m, "nCiters");
            base_.bags = ds.bags;
            train_dist_ = pairwise_distances(base_.kind, base_.bags);
        } else {
            k_ = require_range(params.get_int("numNeighbours", 10), 1, m, "numNeighbours");
            method_ = aggregation_from_key(params.get_string("transformMethod", "Arithmetic"));
            base_.bags.reserve(static_cast<std::size_t>(m));
            for (const auto& bag : ds.bags) {
                Bag agg;
                agg.id = bag.id;
                agg.instances = aggregate_bag(bag, method_).transpose();
                base_.bags.push_back(std::move(agg));
            }
        }

        if (lp_) {
            auto [mi, dict] = to_mi_lp(ds);
            targets_ = std::move(mi.targets);
            dict_ = std::move(dict);
        } else {
            // one binary MI dataset per label; the targets are the columns of
            // the label matrix, which base_.labels already holds
            br_targets_ = to_mi_br(ds);
        }
    }

    Prediction predict(const Bag& bag) const override
    {
        check_query(bag);
        std::vector<Index> voters = voting_set(bag);

        Prediction pred;
        pred.confidences = Eigen::VectorXd::Zero(num_labels_);
        const double n = static_cast<double>(voters.size());
        if (lp_) {
            std::vector<Index> votes(static_cast<std::size_t>(dict_.num_classes()), 0);
            for (Index j : voters) {
                ++votes[static_cast<std::size_t>(targets_[static_cast<std::size_t>(j)])];
                pred.confidences += base_.labels.row(j).cast<double>();
            }
            pred.confidences /= n;
            const auto winner = std::max_element(votes.begin(), votes.end()) - votes.begin();
            pred.bipartition = dict_.decode(static_cast<int>(winner));
        } else {
            for (Index l = 0; l < num_labels_; ++l) {
                double positives = 0.0;
                const auto& targets = br_targets_[static_cast<std::size_t>(l)].targets;
                for (Index j : voters)
                    positives += targets[static_cast<std::size_t>(j)];
                pred.confidences(l) = positives / n;
            }
            pred.bipartition = (pred.confidences.array() >= 0.5).cast<int>();
        }
        return pred;
    }

private:
    std::vector<Index> voting_set(const Bag& query) const
    {
        if (citation_) {
            const Eigen::VectorXd dist = base_.query_distances(query);
            std::vector<Index> refs = k_nearest(dist, refs_);
            std::vector<Index> citers = citers_of_query(train_dist_, dist, citers_);
            std::set<Index> merged(refs.begin(), refs.end());
            merged.insert(citers.begin(), citers.end());
            return {merged.begin(), merged.end()};
        }
        Bag agg;
        agg.id = query.id;
        agg.instances = aggregate_bag(query, method_).transpose();
        return k_nearest(base_.query_distances(agg), k_);
    }

    LazyBase base_;
    bool lp_ = false;
    bool citation_ = true;
    Index refs_ = 0;
    Index citers_ = 0;
    Index k_ = 0;
    BagAggregation method_ = BagAggregation::Arithmetic;
    Eigen::MatrixXd train_dist_;
    std::vector<int> targets_;
    LabelsetDictionary dict_;
    std::vector<MIDataset> br_targets_;
};

// ---------------------------------------------------------------- registry

using Factory = std::function<TrainedModel(const MIMLClassifierSpec&, const MIMLDataset&)>;

template <typename Model>
Factory make_factory()
{
    return [](const MIMLClassifierSpec& spec, const MIMLDataset& ds) -> TrainedModel {
        return std::make_unique<Model>(spec, ds);
    };
}

const std::map<std::string, Factory>& registry()
{
    static const std::map<std::string, Factory> instance = {
        {"classifiers.lazy.MIMLkNN", make_factory<MIMLkNNModel>()},
        {"classifiers.lazy.MIMLBRkNN", make_factory<BRkNNModel>()},
        {"classifiers.lazy.MIMLMAPkNN", make_factory<MAPkNNModel>()},
        {"classifiers.lazy.MIMLLPkNN", make_factory<LPkNNModel>()},
        {"classifiers.meta.MIMLBagging", make_factory<BaggingModel>()},
        {"classifiers.mimlTOml.MIMLClassifierToML", make_factory<ToMLModel>()},
        {"classifiers.mimlTOmi.MIMLClassifierToMI", make_factory<ToMIModel>()},
    };
    return instance;
}

} // namespace

void MIMLClassifier::check_query(const Bag& bag) const
{
    if (bag.dimension() != dimension_)
        throw Error(ErrorKind::DimensionMismatch,
                    "query bag has dimension " + std::to_string(bag.dimension())
                        + ", model was trained with " + std::to_string(dimension_));
}

std::string canonical_algorithm_key(const std::string& key)
{
    std::vector<std::string> parts;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, '.'))
        if (part != "miml")
            parts.push_back(part);
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += '.';
        out += parts[i];
    }
    return out;
}

TrainedModel train(const MIMLClassifierSpec& spec, const MIMLDataset& ds)
{
    const std::string key = canonical_algorithm_key(spec.key);
    auto it = registry().find(key);
    if (it == registry().end())
        throw Error(ErrorKind::UnknownAlgorithm, "'" + spec.key + "'");
    return it->second(spec, ds);
}

std::vector<std::string> registered_algorithms()
{
    std::vector<std::string> keys;
    for (const auto& [key, factory] : registry())
        keys.push_back(key);
    return keys;
}

std::vector<Prediction> predict_all(const MIMLClassifier& model, const MIMLDataset& ds)
{
    std::vector<Prediction> preds;
    preds.reserve(ds.bags.size());
    for (const auto& bag : ds.bags)
        preds.push_back(model.predict(bag));
    return preds;
}

} // namespace miml
