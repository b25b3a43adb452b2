#include "miml/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace miml {

namespace {

const std::vector<std::string> kMeasures = {
    "Hamming Loss",
    "Subset Accuracy",
    "Example-based Precision",
    "Example-based Recall",
    "Example-based F1",
    "Accuracy",
    "Macro-averaged Precision",
    "Macro-averaged Recall",
    "Macro-averaged F1",
    "Micro-averaged Precision",
    "Micro-averaged Recall",
    "Micro-averaged F1",
    "One Error",
    "Coverage",
    "Ranking Loss",
    "Average Precision",
};

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

// Average (mid) ranks by descending confidence, 1-based.
Eigen::VectorXd mid_ranks(const Eigen::VectorXd& conf)
{
    const Index q = conf.size();
    Eigen::VectorXd ranks(q);
    for (Index l = 0; l < q; ++l) {
        Index greater = 0;
        Index ties = 0;
        for (Index j = 0; j < q; ++j) {
            if (conf(j) > conf(l))
                ++greater;
            else if (conf(j) == conf(l))
                ++ties;
        }
        ranks(l) = 1.0 + static_cast<double>(greater) + (static_cast<double>(ties) - 1.0) / 2.0;
    }
    return ranks;
}

struct LabelCounts {
    Eigen::VectorXd tp, fp, fn, tn;
};

LabelCounts confusion_counts(const LabelMatrix& truth, const std::vector<Prediction>& preds)
{
    const Index m = truth.values.rows();
    const Index q = truth.values.cols();
    LabelCounts c;
    c.tp = Eigen::VectorXd::Zero(q);
    c.fp = Eigen::VectorXd::Zero(q);
    c.fn = Eigen::VectorXd::Zero(q);
    c.tn = Eigen::VectorXd::Zero(q);
    for (Index i = 0; i < m; ++i)
        for (Index l = 0; l < q; ++l) {
            const int y = truth.values(i, l);
            const int z = preds[static_cast<std::size_t>(i)].bipartition(l);
            if (y == 1 && z == 1)
                c.tp(l) += 1.0;
            else if (y == 0 && z == 1)
                c.fp(l) += 1.0;
            else if (y == 1 && z == 0)
                c.fn(l) += 1.0;
            else
                c.tn(l) += 1.0;
        }
    return c;
}

} // namespace

const std::vector<std::string>& all_measure_names() { return kMeasures; }

bool is_macro_measure(const std::string& name)
{
    return name.rfind("Macro-averaged", 0) == 0;
}

EvaluationResult evaluate(const LabelMatrix& truth, const std::vector<Prediction>& preds,
                          const std::vector<std::string>& measures, bool per_label)
{
    const Index m = truth.values.rows();
    const Index q = truth.values.cols();
    if (static_cast<Index>(preds.size()) != m)
        throw Error(ErrorKind::LengthMismatch,
                    std::to_string(preds.size()) + " predictions for " + std::to_string(m)
                        + " truth rows");
    for (const auto& p : preds)
        if (p.bipartition.size() != q || p.confidences.size() != q)
            throw Error(ErrorKind::LengthMismatch, "prediction width does not match label count");

    std::vector<std::string> wanted = measures.empty() ? kMeasures : measures;
    for (const auto& name : wanted)
        if (std::find(kMeasures.begin(), kMeasures.end(), name) == kMeasures.end())
            throw Error(ErrorKind::UnknownMeasure, "'" + name + "'");

    EvaluationResult result;
    result.measures = wanted;
    result.label_names = truth.label_names;

    // example-based accumulators
    double hamming = 0.0, subset = 0.0, ex_prec = 0.0, ex_rec = 0.0, ex_f1 = 0.0, jaccard = 0.0;
    // ranking accumulators
    double one_error = 0.0, coverage = 0.0, rank_loss = 0.0, avg_prec = 0.0;
    Index one_error_n = 0, rank_loss_n = 0, avg_prec_n = 0;

    for (Index i = 0; i < m; ++i) {
        const auto& pred = preds[static_cast<std::size_t>(i)];
        double inter = 0.0, uni = 0.0, y_count = 0.0, z_count = 0.0, diff = 0.0;
        bool equal = true;
        for (Index l = 0; l < q; ++l) {
            const int y = truth.values(i, l);
            const int z = pred.bipartition(l);
            if (y != z) {
                diff += 1.0;
                equal = false;
            }
            if (y == 1 && z == 1)
                inter += 1.0;
            if (y == 1 || z == 1)
                uni += 1.0;
            y_count += y;
            z_count += z;
        }
        hamming += diff / static_cast<double>(q);
        subset += equal ? 1.0 : 0.0;
        ex_prec += safe_div(inter, z_count);
        ex_rec += safe_div(inter, y_count);
        ex_f1 += safe_div(2.0 * inter, y_count + z_count);
        jaccard += safe_div(inter, uni);

        // ranking measures
        const Eigen::VectorXd ranks = mid_ranks(pred.confidences);
        const double relevant = y_count;
        const double irrelevant = static_cast<double>(q) - y_count;

        if (relevant > 0.0) {
            // top label: lowest index attaining the maximum confidence
            Index top = 0;
            for (Index l = 1; l < q; ++l)
                if (pred.confidences(l) > pred.confidences(top))
                    top = l;
            one_error += truth.values(i, top) == 1 ? 0.0 : 1.0;
            ++one_error_n;

            double max_rank = 0.0;
            for (Index l = 0; l < q; ++l)
                if (truth.values(i, l) == 1)
                    max_rank = std::max(max_rank, ranks(l));
            coverage += max_rank - 1.0;

            double ap = 0.0;
            for (Index l = 0; l < q; ++l) {
                if (truth.values(i, l) != 1)
                    continue;
                double covered = 0.0; // relevant labels ranked at or above l
                for (Index j = 0; j < q; ++j)
                    if (truth.values(i, j) == 1 && ranks(j) <= ranks(l))
                        covered += 1.0;
                ap += covered / ranks(l);
            }
            avg_prec += ap / relevant;
            ++avg_prec_n;
        }
        if (relevant > 0.0 && irrelevant > 0.0) {
            double penalty = 0.0;
            for (Index r = 0; r < q; ++r) {
                if (truth.values(i, r) != 1)
                    continue;
                for (Index s = 0; s < q; ++s) {
                    if (truth.values(i, s) == 1)
                        continue;
                    if (pred.confidences(r) < pred.confidences(s))
                        penalty += 1.0;
                    else if (pred.confidences(r) == pred.confidences(s))
                        penalty += 0.5;
                }
            }
            rank_loss += penalty / (relevant * irrelevant);
            ++rank_loss_n;
        }
    }

    const LabelCounts c = confusion_counts(truth, preds);
    Eigen::VectorXd prec_l(q), rec_l(q), f1_l(q);
    for (Index l = 0; l < q; ++l) {
        prec_l(l) = safe_div(c.tp(l), c.tp(l) + c.fp(l));
        rec_l(l) = safe_div(c.tp(l), c.tp(l) + c.fn(l));
        f1_l(l) = safe_div(2.0 * c.tp(l), 2.0 * c.tp(l) + c.fp(l) + c.fn(l));
    }
    const double tp = c.tp.sum(), fp = c.fp.sum(), fn = c.fn.sum();
    const double dm = static_cast<double>(m);

    std::map<std::string, double> all;
    all["Hamming Loss"] = hamming / dm;
    all["Subset Accuracy"] = subset / dm;
    all["Example-based Precision"] = ex_prec / dm;
    all["Example-based Recall"] = ex_rec / dm;
    all["Example-based F1"] = ex_f1 / dm;
    all["Accuracy"] = jaccard / dm;
    all["Macro-averaged Precision"] = prec_l.mean();
    all["Macro-averaged Recall"] = rec_l.mean();
    all["Macro-averaged F1"] = f1_l.mean();
    all["Micro-averaged Precision"] = safe_div(tp, tp + fp);
    all["Micro-averaged Recall"] = safe_div(tp, tp + fn);
    all["Micro-averaged F1"] = safe_div(2.0 * tp, 2.0 * tp + fp + fn);
    all["One Error"] = one_error_n > 0 ? one_error / static_cast<double>(one_error_n) : 0.0;
    all["Coverage"] = coverage / dm;
    all["Ranking Loss"] = rank_loss_n > 0 ? rank_loss / static_cast<double>(rank_loss_n) : 0.0;
    all["Average Precision"] = avg_prec_n > 0 ? avg_prec / static_cast<double>(avg_prec_n) : 0.0;

    for (const auto& name : wanted) {
        result.summary.scalars[name] = all.at(name);
        if (per_label && is_macro_measure(name)) {
            if (name == "Macro-averaged Precision")
                result.summary.per_label[name] = prec_l;
            else if (name == "Macro-averaged Recall")
                result.summary.per_label[name] = rec_l;
            else
                result.summary.per_label[name] = f1_l;
        }
    }
    return result;
}

} // namespace miml
