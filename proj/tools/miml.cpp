#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "miml/arff.hpp"
#include "miml/experiment.hpp"
#include "miml/partition.hpp"
#include "miml/stats.hpp"

namespace {

int exit_code_for(const miml::Error& e)
{
    switch (e.kind()) {
    case miml::ErrorKind::FileNotFound:
    case miml::ErrorKind::SyntaxError:
    case miml::ErrorKind::SchemaError:
        return 3;
    case miml::ErrorKind::BadParameter:
    case miml::ErrorKind::UnknownAlgorithm:
    case miml::ErrorKind::UnknownMeasure:
    case miml::ErrorKind::MissingBranch:
    case miml::ErrorKind::DuplicateBranch:
        return 2;
    default:
        return 4;
    }
}

int run_stats(const std::string& arff, const std::string& xml)
{
    miml::MIMLDataset ds = miml::parse_dataset(arff, xml);
    std::cout << miml::format_stats(miml::compute_stats(ds), ds.labels.label_names);
    return 0;
}

int run_partition(const std::string& arff, const std::string& xml, const std::string& strategy,
                  long k, long seed, const std::string& out_dir)
{
    miml::MIMLDataset ds = miml::parse_dataset(arff, xml);
    miml::FoldAssignment fa =
        miml::partition(ds, miml::strategy_from_name(strategy), static_cast<miml::Index>(k),
                        static_cast<std::uint64_t>(seed));

    std::filesystem::create_directories(out_dir);
    const std::string stem = std::filesystem::path(arff).stem().string();
    for (miml::Index fold = 0; fold < fa.k; ++fold) {
        auto [train, test] = miml::materialize_folds(ds, fa, fold);
        const std::string base =
            (std::filesystem::path(out_dir) / (stem + "_fold" + std::to_string(fold))).string();
        miml::write_dataset(train, base + "_train.arff", base + "_train.xml");
        miml::write_dataset(test, base + "_test.arff", base + "_test.xml");
        std::cout << base << "_{train,test}.arff\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MIML learning toolkit"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Run an experiment from a configuration file");
    std::string config_path;
    run_cmd->add_option("-c,--config", config_path, "configuration file")->required();

    auto* stats_cmd = app.add_subcommand("stats", "Print dataset statistics");
    std::string stats_arff, stats_xml;
    stats_cmd->add_option("arff", stats_arff, "MIML ARFF file")->required();
    stats_cmd->add_option("xml", stats_xml, "label sidecar XML file")->required();

    auto* part_cmd = app.add_subcommand("partition", "Write per-fold train/test file pairs");
    std::string part_arff, part_xml, part_strategy = "Iterative", part_out = ".";
    long part_k = 5, part_seed = 1;
    part_cmd->add_option("arff", part_arff, "MIML ARFF file")->required();
    part_cmd->add_option("xml", part_xml, "label sidecar XML file")->required();
    part_cmd->add_option("--strategy", part_strategy, "Random, Powerset, or Iterative");
    part_cmd->add_option("--k", part_k, "number of folds");
    part_cmd->add_option("--seed", part_seed, "RNG seed");
    part_cmd->add_option("--out", part_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed())
            return miml::run_experiment_cli(config_path, std::cout, std::cerr);
        if (stats_cmd->parsed())
            return run_stats(stats_arff, stats_xml);
        return run_partition(part_arff, part_xml, part_strategy, part_k, part_seed, part_out);
    } catch (const miml::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
