#pragma once

#include <Eigen/Core>

namespace miml {

// Per-label bipartition plus real-valued confidences (higher = more positive).
struct Prediction {
    Eigen::VectorXi bipartition; // q, entries in {0,1}
    Eigen::VectorXd confidences; // q
};

} // namespace miml
