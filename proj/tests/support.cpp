#include "support.hpp"

namespace support {

namespace {

using miml::LabelMatrix;
using miml::Prediction;

// Average rank of label l (1-based, descending confidence), computed from a
// sorted copy rather than pairwise comparisons.
double rank_of(const Eigen::VectorXd& conf, Index l)
{
    std::vector<double> sorted(conf.data(), conf.data() + conf.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const double c = conf(l);
    auto first = std::lower_bound(sorted.begin(), sorted.end(), c, std::greater<>());
    auto last = std::upper_bound(sorted.begin(), sorted.end(), c, std::greater<>());
    const double lo = static_cast<double>(first - sorted.begin()) + 1.0;
    const double hi = static_cast<double>(last - sorted.begin());
    return (lo + hi) / 2.0;
}

} // namespace

OracleMetrics oracle_metrics(const LabelMatrix& truth, const std::vector<Prediction>& preds)
{
    const Index m = truth.values.rows();
    const Index q = truth.values.cols();
    OracleMetrics out;
    auto& v = out.values;

    // example-based
    double hamming = 0.0, subset = 0.0, prec = 0.0, rec = 0.0, f1 = 0.0, acc = 0.0;
    for (Index i = 0; i < m; ++i) {
        Index sym_diff = 0, inter = 0, uni = 0, y = 0, z = 0;
        for (Index l = 0; l < q; ++l) {
            const int yl = truth.values(i, l);
            const int zl = preds[static_cast<std::size_t>(i)].bipartition(l);
            sym_diff += yl != zl;
            inter += yl == 1 && zl == 1;
            uni += yl == 1 || zl == 1;
            y += yl;
            z += zl;
        }
        hamming += static_cast<double>(sym_diff) / static_cast<double>(q);
        subset += sym_diff == 0;
        prec += z == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(z);
        rec += y == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(y);
        f1 += y + z == 0 ? 0.0 : 2.0 * static_cast<double>(inter) / static_cast<double>(y + z);
        acc += uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
    }
    const double dm = static_cast<double>(m);
    v["Hamming Loss"] = hamming / dm;
    v["Subset Accuracy"] = subset / dm;
    v["Example-based Precision"] = prec / dm;
    v["Example-based Recall"] = rec / dm;
    v["Example-based F1"] = f1 / dm;
    v["Accuracy"] = acc / dm;

    // label-based
    double macro_p = 0.0, macro_r = 0.0, macro_f = 0.0;
    double tp_sum = 0.0, fp_sum = 0.0, fn_sum = 0.0;
    for (Index l = 0; l < q; ++l) {
        double tp = 0.0, fp = 0.0, fn = 0.0;
        for (Index i = 0; i < m; ++i) {
            const int yl = truth.values(i, l);
            const int zl = preds[static_cast<std::size_t>(i)].bipartition(l);
            tp += yl == 1 && zl == 1;
            fp += yl == 0 && zl == 1;
            fn += yl == 1 && zl == 0;
        }
        macro_p += tp + fp == 0.0 ? 0.0 : tp / (tp + fp);
        macro_r += tp + fn == 0.0 ? 0.0 : tp / (tp + fn);
        macro_f += 2.0 * tp + fp + fn == 0.0 ? 0.0 : 2.0 * tp / (2.0 * tp + fp + fn);
        tp_sum += tp;
        fp_sum += fp;
        fn_sum += fn;
    }
    v["Macro-averaged Precision"] = macro_p / static_cast<double>(q);
    v["Macro-averaged Recall"] = macro_r / static_cast<double>(q);
    v["Macro-averaged F1"] = macro_f / static_cast<double>(q);
    v["Micro-averaged Precision"] = tp_sum + fp_sum == 0.0 ? 0.0 : tp_sum / (tp_sum + fp_sum);
    v["Micro-averaged Recall"] = tp_sum + fn_sum == 0.0 ? 0.0 : tp_sum / (tp_sum + fn_sum);
    v["Micro-averaged F1"] =
        2.0 * tp_sum + fp_sum + fn_sum == 0.0 ? 0.0 : 2.0 * tp_sum / (2.0 * tp_sum + fp_sum + fn_sum);

    // ranking
    double one_error = 0.0, coverage = 0.0, rank_loss = 0.0, avg_prec = 0.0;
    double one_error_n = 0.0, rank_loss_n = 0.0, avg_prec_n = 0.0;
    for (Index i = 0; i < m; ++i) {
        const Eigen::VectorXd& conf = preds[static_cast<std::size_t>(i)].confidences;
        Index relevant = 0;
        for (Index l = 0; l < q; ++l)
            relevant += truth.values(i, l);
        const Index irrelevant = q - relevant;

        if (relevant > 0) {
            Index top = 0;
            for (Index l = 1; l < q; ++l)
                if (conf(l) > conf(top))
                    top = l;
            one_error += truth.values(i, top) == 1 ? 0.0 : 1.0;
            one_error_n += 1.0;

            double max_rank = 0.0;
            double ap = 0.0;
            for (Index l = 0; l < q; ++l) {
                if (truth.values(i, l) != 1)
                    continue;
                const double r = rank_of(conf, l);
                max_rank = std::max(max_rank, r);
                double covered = 0.0;
                for (Index j = 0; j < q; ++j)
                    if (truth.values(i, j) == 1 && rank_of(conf, j) <= r)
                        covered += 1.0;
                ap += covered / r;
            }
            coverage += max_rank - 1.0;
            avg_prec += ap / static_cast<double>(relevant);
            avg_prec_n += 1.0;
        }
        if (relevant > 0 && irrelevant > 0) {
            double penalty = 0.0;
            for (Index r = 0; r < q; ++r)
                for (Index s = 0; s < q; ++s) {
                    if (truth.values(i, r) != 1 || truth.values(i, s) != 0)
                        continue;
                    if (conf(r) < conf(s))
                        penalty += 1.0;
                    else if (conf(r) == conf(s))
                        penalty += 0.5;
                }
            rank_loss += penalty / static_cast<double>(relevant * irrelevant);
            rank_loss_n += 1.0;
        }
    }
    v["One Error"] = one_error_n == 0.0 ? 0.0 : one_error / one_error_n;
    v["Coverage"] = coverage / dm;
    v["Ranking Loss"] = rank_loss_n == 0.0 ? 0.0 : rank_loss / rank_loss_n;
    v["Average Precision"] = avg_prec_n == 0.0 ? 0.0 : avg_prec / avg_prec_n;
    return out;
}

} // namespace support
