#include "miml/transform.hpp"

#include <map>

namespace miml {

BagAggregation aggregation_from_key(const std::string& key)
{
    auto pos = key.rfind('.');
    const std::string name = pos == std::string::npos ? key : key.substr(pos + 1);
    if (name == "Arithmetic")
        return BagAggregation::Arithmetic;
    if (name == "Geometric")
        return BagAggregation::Geometric;
    if (name == "MinMax" || name == "Min-Max")
        return BagAggregation::MinMax;
    throw Error(ErrorKind::BadParameter, "unknown transformation '" + key + "'");
}

Eigen::VectorXd aggregate_bag(const Bag& bag, BagAggregation method)
{
    const Index d = bag.dimension();
    switch (method) {
    case BagAggregation::Arithmetic:
        return bag.instances.colwise().mean();
    case BagAggregation::Geometric:
        return (bag.instances.colwise().minCoeff() + bag.instances.colwise().maxCoeff()) / 2.0;
    case BagAggregation::MinMax: {
        Eigen::VectorXd out(2 * d);
        out.head(d) = bag.instances.colwise().minCoeff();
        out.tail(d) = bag.instances.colwise().maxCoeff();
        return out;
    }
    }
    return Eigen::VectorXd();
}

MLDataset to_ml(const MIMLDataset& ds, BagAggregation method)
{
    const Index m = ds.num_bags();
    const Index d = ds.dimension();
    const Index width = method == BagAggregation::MinMax ? 2 * d : d;

    MLDataset out;
    out.features.resize(m, width);
    for (Index i = 0; i < m; ++i)
        out.features.row(i) = aggregate_bag(ds.bags[static_cast<std::size_t>(i)], method);
    out.labels = ds.labels;
    return out;
}

std::vector<MIDataset> to_mi_br(const MIMLDataset& ds)
{
    const Index m = ds.num_bags();
    const Index q = ds.num_labels();
    std::vector<MIDataset> out(static_cast<std::size_t>(q));
    for (Index l = 0; l < q; ++l) {
        auto& mi = out[static_cast<std::size_t>(l)];
        mi.bags = &ds.bags;
        mi.targets.resize(static_cast<std::size_t>(m));
        for (Index i = 0; i < m; ++i)
            mi.targets[static_cast<std::size_t>(i)] = ds.labels.values(i, l);
    }
    return out;
}

const Eigen::VectorXi& LabelsetDictionary::decode(int id) const
{
    if (id < 0 || id >= num_classes())
        throw Error(ErrorKind::IndexOutOfRange, "labelset id " + std::to_string(id));
    return classes[static_cast<std::size_t>(id)];
}

std::pair<MIDataset, LabelsetDictionary> to_mi_lp(const MIMLDataset& ds)
{
    MIDataset mi;
    mi.bags = &ds.bags;
    LabelsetDictionary dict;
    std::map<std::vector<int>, int> ids; // labelset -> id, first-occurrence order

    const Index m = ds.num_bags();
    const Index q = ds.num_labels();
    mi.targets.resize(static_cast<std::size_t>(m));
    for (Index i = 0; i < m; ++i) {
        std::vector<int> key(static_cast<std::size_t>(q));
        for (Index l = 0; l < q; ++l)
            key[static_cast<std::size_t>(l)] = ds.labels.values(i, l);
        auto [it, inserted] = ids.emplace(key, dict.num_classes());
        if (inserted)
            dict.classes.push_back(ds.labels.values.row(i).transpose());
        mi.targets[static_cast<std::size_t>(i)] = it->second;
    }
    return {std::move(mi), std::move(dict)};
}

} // namespace miml
