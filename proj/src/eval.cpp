#include "miml/eval.hpp"

#include <chrono>
#include <cmath>
#include <thread>

namespace miml {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

} // namespace

EvaluationResult evaluate_holdout(const MIMLClassifierSpec& spec, const MIMLDataset& train_ds,
                                  const MIMLDataset& test_ds,
                                  const std::vector<std::string>& measures, bool per_label)
{
    if (train_ds.schema != test_ds.schema
        || train_ds.labels.label_names != test_ds.labels.label_names)
        throw Error(ErrorKind::SchemaError, "train and test sets have different schemas");

    const auto train_start = Clock::now();
    TrainedModel model = train(spec, train_ds);
    const double train_seconds = seconds_since(train_start);

    const auto test_start = Clock::now();
    std::vector<Prediction> preds = predict_all(*model, test_ds);
    const double test_seconds = seconds_since(test_start);

    EvaluationResult result = evaluate(test_ds.labels, preds, measures, per_label);
    result.train_seconds = train_seconds;
    result.test_seconds = test_seconds;
    return result;
}

EvaluationResult evaluate_cv(const MIMLClassifierSpec& spec, const MIMLDataset& ds, Index k,
                             std::uint64_t seed, PartitionStrategy strategy,
                             const std::vector<std::string>& measures, bool per_label,
                             bool parallel)
{
    const FoldAssignment fa = partition(ds, strategy, k, seed);

    std::vector<EvaluationResult> fold_results(static_cast<std::size_t>(k));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(k));

    auto run_fold = [&](Index fold) {
        try {
            auto [train_ds, test_ds] = materialize_folds(ds, fa, fold);
            fold_results[static_cast<std::size_t>(fold)] =
                evaluate_holdout(spec, train_ds, test_ds, measures, per_label);
        } catch (...) {
            failures[static_cast<std::size_t>(fold)] = std::current_exception();
        }
    };

    if (parallel) {
        std::vector<std::thread> workers;
        for (Index fold = 0; fold < k; ++fold)
            workers.emplace_back(run_fold, fold);
        for (auto& worker : workers)
            worker.join();
    } else {
        for (Index fold = 0; fold < k; ++fold)
            run_fold(fold);
    }

    for (Index fold = 0; fold < k; ++fold)
        if (failures[static_cast<std::size_t>(fold)]) {
            try {
                std::rethrow_exception(failures[static_cast<std::size_t>(fold)]);
            } catch (const Error& e) {
                throw Error(e.kind(),
                            "fold " + std::to_string(fold) + ": " + e.what());
            }
        }

    EvaluationResult result;
    result.measures = fold_results.front().measures;
    result.label_names = fold_results.front().label_names;
    for (auto& fold_result : fold_results) {
        result.folds.push_back(fold_result.summary);
        result.train_seconds += fold_result.train_seconds;
        result.test_seconds += fold_result.test_seconds;
    }

    const double n = static_cast<double>(k);
    for (const auto& name : result.measures) {
        double sum = 0.0;
        for (const auto& fold : result.folds)
            sum += fold.scalars.at(name);
        const double mean = sum / n;
        double sq = 0.0;
        for (const auto& fold : result.folds)
            sq += (fold.scalars.at(name) - mean) * (fold.scalars.at(name) - mean);
        result.summary.scalars[name] = mean;
        result.dispersion.scalars[name] = std::sqrt(sq / (n - 1.0));

        if (per_label && is_macro_measure(name)) {
            const Index q = result.folds.front().per_label.at(name).size();
            Eigen::VectorXd mean_l = Eigen::VectorXd::Zero(q);
            for (const auto& fold : result.folds)
                mean_l += fold.per_label.at(name);
            mean_l /= n;
            Eigen::VectorXd sq_l = Eigen::VectorXd::Zero(q);
            for (const auto& fold : result.folds)
                sq_l += (fold.per_label.at(name) - mean_l).array().square().matrix();
            result.summary.per_label[name] = mean_l;
            result.dispersion.per_label[name] = (sq_l / (n - 1.0)).array().sqrt();
        }
    }
    return result;
}

} // namespace miml
