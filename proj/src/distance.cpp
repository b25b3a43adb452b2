#include "miml/distance.hpp"

#include <cmath>
#include <limits>

namespace miml {

namespace {

std::string last_component(const std::string& key)
{
    auto pos = key.rfind('.');
    return pos == std::string::npos ? key : key.substr(pos + 1);
}

Eigen::MatrixXd normalized(const Eigen::MatrixXd& instances, const AttributeRanges& ranges)
{
    Eigen::MatrixXd out(instances.rows(), instances.cols());
    for (Index c = 0; c < instances.cols(); ++c) {
        const auto [lo, hi] = ranges[static_cast<std::size_t>(c)];
        const double width = hi - lo;
        if (width > 0.0)
            out.col(c) = (instances.col(c).array() - lo) / width;
        else
            out.col(c).setZero(); // constant attribute
    }
    return out;
}

} // namespace

BagDistanceKind distance_from_key(const std::string& key)
{
    const std::string name = last_component(key);
    if (name == "AverageHausdorff")
        return {HausdorffVariant::Average, false};
    if (name == "MinimalHausdorff")
        return {HausdorffVariant::Minimal, false};
    if (name == "MaximalHausdorff")
        return {HausdorffVariant::Maximal, false};
    throw Error(ErrorKind::BadParameter, "unknown distance '" + key + "'");
}

std::string distance_key(const BagDistanceKind& kind)
{
    switch (kind.variant) {
    case HausdorffVariant::Average: return "distance.AverageHausdorff";
    case HausdorffVariant::Minimal: return "distance.MinimalHausdorff";
    case HausdorffVariant::Maximal: return "distance.MaximalHausdorff";
    }
    return "distance.AverageHausdorff";
}

AttributeRanges attribute_ranges(const std::vector<Bag>& bags)
{
    AttributeRanges ranges;
    if (bags.empty())
        return ranges;
    const Index d = bags.front().dimension();
    ranges.assign(static_cast<std::size_t>(d),
                  {std::numeric_limits<double>::infinity(),
                   -std::numeric_limits<double>::infinity()});
    for (const auto& bag : bags)
        for (Index c = 0; c < d; ++c) {
            auto& [lo, hi] = ranges[static_cast<std::size_t>(c)];
            lo = std::min(lo, bag.instances.col(c).minCoeff());
            hi = std::max(hi, bag.instances.col(c).maxCoeff());
        }
    return ranges;
}

double bag_distance(const BagDistanceKind& kind, const Bag& a, const Bag& b,
                    const std::optional<AttributeRanges>& ranges)
{
    if (a.size() < 1 || b.size() < 1)
        throw Error(ErrorKind::DimensionMismatch, "bags must be non-empty");
    if (a.dimension() != b.dimension())
        throw Error(ErrorKind::DimensionMismatch,
                    "bag dimensions differ: " + std::to_string(a.dimension()) + " vs "
                        + std::to_string(b.dimension()));

    Eigen::MatrixXd xa = a.instances;
    Eigen::MatrixXd xb = b.instances;
    if (kind.normalize) {
        if (!ranges || static_cast<Index>(ranges->size()) != a.dimension())
            throw Error(ErrorKind::MissingRanges,
                        "normalization requires ranges for all attributes");
        xa = normalized(xa, *ranges);
        xb = normalized(xb, *ranges);
    }

    // all pairwise instance distances
    Eigen::MatrixXd dist(xa.rows(), xb.rows());
    for (Index i = 0; i < xa.rows(); ++i)
        for (Index j = 0; j < xb.rows(); ++j)
            dist(i, j) = (xa.row(i) - xb.row(j)).norm();

    switch (kind.variant) {
    case HausdorffVariant::Minimal:
        return dist.minCoeff();
    case HausdorffVariant::Maximal:
        return std::max(dist.rowwise().minCoeff().maxCoeff(),
                        dist.colwise().minCoeff().maxCoeff());
    case HausdorffVariant::Average: {
        // accumulate each bag's point-to-set sum separately with plain loops;
        // the summation order is then independent of the argument order, so
        // bag_distance(a, b) == bag_distance(b, a) bit-for-bit
        double from_a = 0.0;
        for (Index i = 0; i < dist.rows(); ++i)
            from_a += dist.row(i).minCoeff();
        double from_b = 0.0;
        for (Index j = 0; j < dist.cols(); ++j)
            from_b += dist.col(j).minCoeff();
        return (from_a + from_b) / static_cast<double>(xa.rows() + xb.rows());
    }
    }
    return 0.0;
}

Eigen::MatrixXd pairwise_distances(const BagDistanceKind& kind, const std::vector<Bag>& bags,
                                   const std::optional<AttributeRanges>& ranges)
{
    const Index m = static_cast<Index>(bags.size());
    Eigen::MatrixXd values = Eigen::MatrixXd::Zero(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = i + 1; j < m; ++j) {
            const double d = bag_distance(kind, bags[static_cast<std::size_t>(i)],
                                          bags[static_cast<std::size_t>(j)], ranges);
            values(i, j) = d;
            values(j, i) = d;
        }
    return values;
}

} // namespace miml
