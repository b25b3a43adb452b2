#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "miml/classify.hpp"
#include "miml/partition.hpp"

namespace miml {

// The <evaluator> branch of a configuration file.
struct EvaluatorConfig {
    enum class Kind { CV, Holdout };
    Kind kind = Kind::CV;
    std::uint64_t seed = 1;
    Index num_folds = 5;
    double train_fraction = 0.8;
    PartitionStrategy strategy = PartitionStrategy::Iterative;
    bool parallel = false;

    // single-file data (CV, or holdout split by train_fraction)
    std::string arff_path;
    std::string xml_path;
    // pre-split data (holdout only)
    std::string train_arff_path;
    std::string test_arff_path;
};

// The <report> branch.
struct ReportConfig {
    std::string file_name;
    std::vector<std::string> measures; // empty = all measures
    bool per_label = false;
    bool overwrite = false;
};

struct ExperimentConfig {
    MIMLClassifierSpec classifier;
    EvaluatorConfig evaluator;
    ReportConfig report;
};

// Parses a <configuration> document with exactly one <classifier>, one
// <evaluator>, and one <report> branch. Unknown elements are errors, not
// silently ignored. Relative data and report paths resolve against the
// config file's directory.
ExperimentConfig parse_config(const std::string& path);

// Full experiment: parse config, load data, evaluate, write the report.
// Returns the report path.
std::string run_experiment(const ExperimentConfig& config);

// CLI entry: runs the config at `path` and maps errors to exit codes
// (0 success, 2 config error, 3 data error, 4 runtime error). Diagnostics go
// to the stream arguments.
int run_experiment_cli(const std::string& path, std::ostream& out, std::ostream& err);

} // namespace miml
