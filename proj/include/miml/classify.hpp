#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "miml/data.hpp"
#include "miml/distance.hpp"
#include "miml/prediction.hpp"

namespace miml {

// Algorithm choice plus its configuration parameters, as read from a config
// file. `base` carries the nested <baseClassifier> element for ensembles and
// wrappers.
struct MIMLClassifierSpec {
    std::string key;
    std::map<std::string, std::string> params;
    std::shared_ptr<MIMLClassifierSpec> base;
};

// A trained model. Immutable after train(); predict is safe to call
// concurrently.
class MIMLClassifier {
public:
    virtual ~MIMLClassifier() = default;

    virtual Prediction predict(const Bag& bag) const = 0;

    Index dimension() const { return dimension_; }
    Index num_labels() const { return num_labels_; }

protected:
    void check_query(const Bag& bag) const;

    Index dimension_ = 0;
    Index num_labels_ = 0;
};

using TrainedModel = std::unique_ptr<MIMLClassifier>;

// Resolves the spec's registry key and trains the algorithm on ds.
// Keys are dotted paths (e.g. "classifiers.lazy.MIMLkNN"); "miml" path
// components are ignored, so the long class-path form
// "miml.classifiers.miml.lazy.MIMLkNN" resolves to the same algorithm.
// Throws UnknownAlgorithm for an unresolvable key and BadParameter for an
// unknown, missing, or out-of-range parameter.
TrainedModel train(const MIMLClassifierSpec& spec, const MIMLDataset& ds);

// Canonical form of a registry key (with "miml" components dropped).
std::string canonical_algorithm_key(const std::string& key);

std::vector<std::string> registered_algorithms();

std::vector<Prediction> predict_all(const MIMLClassifier& model, const MIMLDataset& ds);

} // namespace miml
