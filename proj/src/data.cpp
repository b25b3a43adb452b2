#include "miml/data.hpp"

#include <unordered_set>

namespace miml {

void validate(const MIMLDataset& ds)
{
    if (ds.schema.names.empty())
        throw Error(ErrorKind::SchemaError, "dataset needs at least one attribute");
    std::unordered_set<std::string> attr_names;
    for (const auto& n : ds.schema.names) {
        if (n.empty())
            throw Error(ErrorKind::SchemaError, "empty attribute name");
        if (!attr_names.insert(n).second)
            throw Error(ErrorKind::SchemaError, "duplicate attribute name '" + n + "'");
    }

    if (ds.labels.num_labels() < 2)
        throw Error(ErrorKind::SchemaError, "dataset needs at least two labels");
    std::unordered_set<std::string> label_names;
    for (const auto& n : ds.labels.label_names)
        if (!label_names.insert(n).second)
            throw Error(ErrorKind::SchemaError, "duplicate label name '" + n + "'");
    if (ds.labels.values.cols() != ds.labels.num_labels())
        throw Error(ErrorKind::SchemaError, "label matrix width does not match label names");

    if (ds.bags.empty())
        throw Error(ErrorKind::SchemaError, "dataset has no bags");
    if (ds.labels.values.rows() != ds.num_bags())
        throw Error(ErrorKind::SchemaError, "label matrix rows do not match bag count");

    const Index d = ds.dimension();
    std::unordered_set<std::string> bag_ids;
    for (const auto& bag : ds.bags) {
        if (bag.id.empty())
            throw Error(ErrorKind::SchemaError, "empty bag id");
        if (!bag_ids.insert(bag.id).second)
            throw Error(ErrorKind::SchemaError, "duplicate bag id '" + bag.id + "'");
        if (bag.size() < 1)
            throw Error(ErrorKind::SchemaError, "bag '" + bag.id + "' is empty");
        if (bag.dimension() != d)
            throw Error(ErrorKind::SchemaError,
                        "bag '" + bag.id + "' has dimension " + std::to_string(bag.dimension())
                            + ", expected " + std::to_string(d));
        if (!bag.instances.allFinite())
            throw Error(ErrorKind::SchemaError, "bag '" + bag.id + "' has a non-finite value");
    }

    for (Index i = 0; i < ds.labels.values.rows(); ++i)
        for (Index l = 0; l < ds.labels.values.cols(); ++l) {
            const int v = ds.labels.values(i, l);
            if (v != 0 && v != 1)
                throw Error(ErrorKind::SchemaError,
                            "label value " + std::to_string(v) + " is not binary");
        }
}

MIMLDataset select_bags(const MIMLDataset& ds, const std::vector<Index>& indices)
{
    const Index m = ds.num_bags();
    for (Index idx : indices)
        if (idx < 0 || idx >= m)
            throw Error(ErrorKind::IndexOutOfRange,
                        "bag index " + std::to_string(idx) + " out of range [0, "
                            + std::to_string(m) + ")");

    MIMLDataset out;
    out.relation_name = ds.relation_name;
    out.schema = ds.schema;
    out.bags.reserve(indices.size());
    out.labels.label_names = ds.labels.label_names;
    out.labels.values.resize(static_cast<Index>(indices.size()), ds.num_labels());

    std::unordered_set<std::string> used;
    for (std::size_t pos = 0; pos < indices.size(); ++pos) {
        Bag bag = ds.bags[static_cast<std::size_t>(indices[pos])];
        if (!used.insert(bag.id).second) {
            int suffix = 1;
            std::string candidate;
            do
                candidate = bag.id + "_" + std::to_string(suffix++);
            while (!used.insert(candidate).second);
            bag.id = candidate;
        }
        out.bags.push_back(std::move(bag));
        out.labels.values.row(static_cast<Index>(pos)) = ds.labels.values.row(indices[pos]);
    }
    return out;
}

} // namespace miml
