#include <doctest.h>

#include "miml/metrics.hpp"
#include "support.hpp"

using namespace miml;

namespace {

LabelMatrix truth_from(const Eigen::MatrixXi& values)
{
    LabelMatrix truth;
    truth.values = values;
    for (Index l = 0; l < values.cols(); ++l)
        truth.label_names.push_back("l" + std::to_string(l));
    return truth;
}

Prediction pred_from(std::initializer_list<int> bits, std::initializer_list<double> conf)
{
    Prediction p;
    p.bipartition.resize(static_cast<Index>(bits.size()));
    p.confidences.resize(static_cast<Index>(conf.size()));
    Index i = 0;
    for (int b : bits)
        p.bipartition(i++) = b;
    i = 0;
    for (double c : conf)
        p.confidences(i++) = c;
    return p;
}

std::vector<Prediction> random_predictions(std::mt19937_64& rng, Index m, Index q)
{
    std::uniform_real_distribution<double> conf(0.0, 1.0);
    std::vector<Prediction> preds;
    for (Index i = 0; i < m; ++i) {
        Prediction p;
        p.bipartition.resize(q);
        p.confidences.resize(q);
        for (Index l = 0; l < q; ++l) {
            p.bipartition(l) = static_cast<int>(rng() % 2);
            // quantized confidences so ties actually occur
            p.confidences(l) = std::round(conf(rng) * 4.0) / 4.0;
        }
        preds.push_back(std::move(p));
    }
    return preds;
}

} // namespace

TEST_CASE("hand-counted single example (1,0,1) vs (1,1,1)")
{
    Eigen::MatrixXi values(1, 3);
    values << 1, 0, 1;
    std::vector<Prediction> preds = {pred_from({1, 1, 1}, {0.9, 0.8, 0.7})};

    EvaluationResult r = evaluate(truth_from(values), preds, {}, false);
    CHECK(r.summary.scalars.at("Hamming Loss") == doctest::Approx(1.0 / 3.0));
    CHECK(r.summary.scalars.at("Micro-averaged Recall") == doctest::Approx(1.0));
    // zero-support label scores 0 in the macro average
    CHECK(r.summary.scalars.at("Macro-averaged Precision") == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("perfect predictions")
{
    std::mt19937_64 rng(71);
    MIMLDataset ds = support::random_dataset(rng);
    // an all-zero truth row would score 0 by the zero-denominator convention,
    // so guarantee at least one positive per example
    for (Index i = 0; i < ds.num_bags(); ++i)
        ds.labels.values(i, static_cast<Index>(static_cast<std::uint64_t>(rng())
                                               % static_cast<std::uint64_t>(ds.num_labels())))
            = 1;
    std::vector<Prediction> preds;
    for (Index i = 0; i < ds.num_bags(); ++i) {
        Prediction p;
        p.bipartition = ds.labels.values.row(i).transpose();
        p.confidences = p.bipartition.cast<double>();
        preds.push_back(std::move(p));
    }
    EvaluationResult r = evaluate(ds.labels, preds, {}, false);
    CHECK(r.summary.scalars.at("Hamming Loss") == 0.0);
    CHECK(r.summary.scalars.at("Subset Accuracy") == 1.0);
    CHECK(r.summary.scalars.at("Ranking Loss") == 0.0);
    CHECK(r.summary.scalars.at("Micro-averaged F1") == 1.0);
    CHECK(r.summary.scalars.at("Example-based Precision") == 1.0);
}

TEST_CASE("all-wrong bipartitions give Hamming loss 1")
{
    Eigen::MatrixXi values(2, 2);
    values << 1, 0, 0, 1;
    std::vector<Prediction> preds = {pred_from({0, 1}, {0.1, 0.9}),
                                     pred_from({1, 0}, {0.9, 0.1})};
    EvaluationResult r = evaluate(truth_from(values), preds, {"Hamming Loss"}, false);
    CHECK(r.summary.scalars.at("Hamming Loss") == 1.0);
}

TEST_CASE("unknown measures and length mismatches are rejected up front")
{
    Eigen::MatrixXi values(1, 2);
    values << 1, 0;
    std::vector<Prediction> preds = {pred_from({1, 0}, {1.0, 0.0})};
    try {
        evaluate(truth_from(values), preds, {"Hamming Distance"}, false);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownMeasure);
    }
    preds.push_back(preds.front());
    try {
        evaluate(truth_from(values), preds, {}, false);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LengthMismatch);
    }
}

TEST_CASE("per-label vectors accompany macro measures")
{
    Eigen::MatrixXi values(1, 2);
    values << 1, 0;
    std::vector<Prediction> preds = {pred_from({1, 0}, {1.0, 0.0})};
    EvaluationResult r =
        evaluate(truth_from(values), preds, {"Macro-averaged Precision"}, true);
    REQUIRE(r.summary.per_label.count("Macro-averaged Precision") == 1);
    CHECK(r.summary.per_label.at("Macro-averaged Precision").size() == 2);
}

TEST_CASE("all measures match the brute-force oracle on random inputs")
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const Index m = 1 + static_cast<Index>(rng() % 12);
        const Index q = 2 + static_cast<Index>(rng() % 4);
        Eigen::MatrixXi values(m, q);
        for (Index i = 0; i < m; ++i)
            for (Index l = 0; l < q; ++l)
                values(i, l) = static_cast<int>(rng() % 2);
        LabelMatrix truth = truth_from(values);
        std::vector<Prediction> preds = random_predictions(rng, m, q);

        EvaluationResult r = evaluate(truth, preds, {}, false);
        support::OracleMetrics oracle = support::oracle_metrics(truth, preds);
        for (const auto& [name, expected] : oracle.values)
            CHECK(std::abs(r.summary.scalars.at(name) - expected) <= 1e-12);
    }
}

TEST_CASE("joint permutation of examples leaves every measure unchanged")
{
    std::mt19937_64 rng(79);
    const Index m = 10, q = 3;
    Eigen::MatrixXi values(m, q);
    for (Index i = 0; i < m; ++i)
        for (Index l = 0; l < q; ++l)
            values(i, l) = static_cast<int>(rng() % 2);
    LabelMatrix truth = truth_from(values);
    std::vector<Prediction> preds = random_predictions(rng, m, q);

    std::vector<Index> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), Index{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    LabelMatrix shuffled_truth = truth;
    std::vector<Prediction> shuffled_preds(preds.size());
    for (Index i = 0; i < m; ++i) {
        shuffled_truth.values.row(i) = truth.values.row(perm[static_cast<std::size_t>(i)]);
        shuffled_preds[static_cast<std::size_t>(i)] =
            preds[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    }

    EvaluationResult a = evaluate(truth, preds, {}, false);
    EvaluationResult b = evaluate(shuffled_truth, shuffled_preds, {}, false);
    for (const auto& [name, value] : a.summary.scalars)
        CHECK(b.summary.scalars.at(name) == doctest::Approx(value).epsilon(1e-14));
}

TEST_CASE("ranking measures are invariant to monotone confidence transforms")
{
    std::mt19937_64 rng(83);
    const Index m = 8, q = 4;
    Eigen::MatrixXi values(m, q);
    for (Index i = 0; i < m; ++i)
        for (Index l = 0; l < q; ++l)
            values(i, l) = static_cast<int>(rng() % 2);
    LabelMatrix truth = truth_from(values);
    std::vector<Prediction> preds = random_predictions(rng, m, q);

    std::vector<Prediction> transformed = preds;
    for (auto& p : transformed)
        p.confidences = (3.0 * p.confidences.array() + 1.0).exp();

    const std::vector<std::string> ranking = {"One Error", "Ranking Loss", "Coverage",
                                              "Average Precision"};
    EvaluationResult a = evaluate(truth, preds, ranking, false);
    EvaluationResult b = evaluate(truth, transformed, ranking, false);
    for (const auto& name : ranking)
        CHECK(a.summary.scalars.at(name) == doctest::Approx(b.summary.scalars.at(name)));
}

TEST_CASE("micro and macro F1 coincide under identical per-label counts")
{
    // two labels with identical confusion counts by symmetry
    Eigen::MatrixXi values(4, 2);
    values << 1, 1, 1, 1, 0, 0, 0, 0;
    std::vector<Prediction> preds = {
        pred_from({1, 1}, {1, 1}), pred_from({0, 0}, {0, 0}),
        pred_from({1, 1}, {1, 1}), pred_from({0, 0}, {0, 0})};
    EvaluationResult r =
        evaluate(truth_from(values), preds, {"Macro-averaged F1", "Micro-averaged F1"}, false);
    CHECK(r.summary.scalars.at("Macro-averaged F1")
          == doctest::Approx(r.summary.scalars.at("Micro-averaged F1")));
}
