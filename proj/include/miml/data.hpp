#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "miml/errors.hpp"

namespace miml {

using Index = Eigen::Index;

// Per-instance feature layout shared by every bag of a dataset.
// v1 features are numeric only.
struct AttributeSchema {
    std::vector<std::string> names;

    Index dimension() const { return static_cast<Index>(names.size()); }
    bool operator==(const AttributeSchema&) const = default;
};

// A pattern: a non-empty set of fixed-dimension instances plus an identifier.
struct Bag {
    std::string id;
    Eigen::MatrixXd instances; // n_i x d

    Index size() const { return instances.rows(); }
    Index dimension() const { return instances.cols(); }

    bool operator==(const Bag& other) const
    {
        return id == other.id && instances.rows() == other.instances.rows()
            && instances.cols() == other.instances.cols() && instances == other.instances;
    }
};

// Binary label assignments for m bags over q named labels.
struct LabelMatrix {
    Eigen::MatrixXi values; // m x q, entries in {0,1}
    std::vector<std::string> label_names;

    Index num_labels() const { return static_cast<Index>(label_names.size()); }

    bool operator==(const LabelMatrix& other) const
    {
        return label_names == other.label_names && values.rows() == other.values.rows()
            && values.cols() == other.values.cols() && values == other.values;
    }
};

struct MIMLDataset {
    std::string relation_name;
    AttributeSchema schema;
    std::vector<Bag> bags;
    LabelMatrix labels;

    Index num_bags() const { return static_cast<Index>(bags.size()); }
    Index num_labels() const { return labels.num_labels(); }
    Index dimension() const { return schema.dimension(); }

    bool operator==(const MIMLDataset&) const = default;
};

// Checks every structural invariant; throws SchemaError on the first violation.
void validate(const MIMLDataset& ds);

// Builds a new dataset from the given bag indices, in order. Repeats are
// allowed (sampling with replacement); repeated ids are disambiguated with a
// numeric suffix so bag ids stay unique.
MIMLDataset select_bags(const MIMLDataset& ds, const std::vector<Index>& indices);

} // namespace miml
