#include "miml/experiment.hpp"

#include <charconv>
#include <filesystem>
#include <iostream>

#include "miml/arff.hpp"
#include "miml/eval.hpp"
#include "miml/report.hpp"
#include "miml/xml.hpp"

namespace miml {

namespace {

namespace fs = std::filesystem;

long to_int(const std::string& raw, const std::string& element)
{
    long value = 0;
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || ptr != raw.data() + raw.size())
        throw Error(ErrorKind::SyntaxError,
                    "<" + element + "> value '" + raw + "' is not an integer");
    return value;
}

bool to_bool(const std::string& raw, const std::string& element)
{
    if (raw == "true" || raw == "1")
        return true;
    if (raw == "false" || raw == "0")
        return false;
    throw Error(ErrorKind::SyntaxError,
                "<" + element + "> value '" + raw + "' is not a boolean");
}

std::string resolve(const fs::path& base_dir, const std::string& path)
{
    fs::path p(path);
    return p.is_absolute() ? p.string() : (base_dir / p).lexically_normal().string();
}

MIMLClassifierSpec parse_classifier(const xml::Element& element)
{
    MIMLClassifierSpec spec;
    spec.key = element.attribute("name");
    if (spec.key.empty())
        throw Error(ErrorKind::SyntaxError, "<classifier> needs a name attribute");

    for (const auto& child : element.children) {
        if (child.name == "metric") {
            const std::string metric = child.attribute("name");
            if (metric.empty())
                throw Error(ErrorKind::SyntaxError, "<metric> needs a name attribute");
            spec.params["metric"] = metric;
        } else if (child.name == "baseClassifier") {
            if (spec.base)
                throw Error(ErrorKind::SyntaxError, "more than one <baseClassifier>");
            spec.base = std::make_shared<MIMLClassifierSpec>(parse_classifier(child));
        } else {
            if (!child.children.empty() || !child.attributes.empty())
                throw Error(ErrorKind::SyntaxError,
                            "parameter <" + child.name + "> must be a scalar element");
            spec.params[child.name] = child.text;
        }
    }
    return spec;
}

EvaluatorConfig parse_evaluator(const xml::Element& element, const fs::path& base_dir)
{
    EvaluatorConfig config;
    const std::string key = canonical_algorithm_key(element.attribute("name"));
    if (key == "evaluation.EvaluatorCV")
        config.kind = EvaluatorConfig::Kind::CV;
    else if (key == "evaluation.EvaluatorHoldout")
        config.kind = EvaluatorConfig::Kind::Holdout;
    else
        throw Error(ErrorKind::BadParameter,
                    "unknown evaluator '" + element.attribute("name") + "'");

    bool has_data = false;
    for (const auto& child : element.children) {
        if (child.name == "seed") {
            config.seed = static_cast<std::uint64_t>(to_int(child.text, "seed"));
        } else if (child.name == "numFolds") {
            config.num_folds = static_cast<Index>(to_int(child.text, "numFolds"));
        } else if (child.name == "percentageTrain") {
            config.train_fraction = static_cast<double>(to_int(child.text, "percentageTrain"))
                / 100.0;
        } else if (child.name == "strategy") {
            config.strategy = strategy_from_name(child.text);
        } else if (child.name == "parallel") {
            config.parallel = to_bool(child.text, "parallel");
        } else if (child.name == "data") {
            has_data = true;
            for (const auto& entry : child.children) {
                if (entry.name == "file")
                    config.arff_path = resolve(base_dir, entry.text);
                else if (entry.name == "trainFile")
                    config.train_arff_path = resolve(base_dir, entry.text);
                else if (entry.name == "testFile")
                    config.test_arff_path = resolve(base_dir, entry.text);
                else if (entry.name == "xmlFile")
                    config.xml_path = resolve(base_dir, entry.text);
                else
                    throw Error(ErrorKind::SyntaxError,
                                "unknown element <" + entry.name + "> in <data>");
            }
        } else {
            throw Error(ErrorKind::SyntaxError,
                        "unknown element <" + child.name + "> in <evaluator>");
        }
    }

    if (!has_data || config.xml_path.empty())
        throw Error(ErrorKind::SyntaxError, "<evaluator> needs a <data> element with <xmlFile>");
    const bool split_files = !config.train_arff_path.empty() || !config.test_arff_path.empty();
    if (split_files
        && (config.train_arff_path.empty() || config.test_arff_path.empty()
            || !config.arff_path.empty()))
        throw Error(ErrorKind::SyntaxError,
                    "<data> needs either <file> or both <trainFile> and <testFile>");
    if (split_files && config.kind == EvaluatorConfig::Kind::CV)
        throw Error(ErrorKind::SyntaxError, "cross-validation takes a single <file>");
    if (!split_files && config.arff_path.empty())
        throw Error(ErrorKind::SyntaxError, "<data> needs a <file> element");
    return config;
}

ReportConfig parse_report(const xml::Element& element, const fs::path& base_dir)
{
    const std::string key = canonical_algorithm_key(element.attribute("name"));
    if (key != "report.BaseMIMLReport")
        throw Error(ErrorKind::BadParameter,
                    "unknown report '" + element.attribute("name") + "'");

    ReportConfig config;
    for (const auto& child : element.children) {
        if (child.name == "fileName") {
            config.file_name = resolve(base_dir, child.text);
        } else if (child.name == "overwrite") {
            config.overwrite = to_bool(child.text, "overwrite");
        } else if (child.name == "measures") {
            config.per_label = to_bool(child.attribute("perLabel", "false"), "perLabel");
            for (const auto& entry : child.children) {
                if (entry.name != "measure")
                    throw Error(ErrorKind::SyntaxError,
                                "unknown element <" + entry.name + "> in <measures>");
                config.measures.push_back(entry.text);
            }
        } else {
            throw Error(ErrorKind::SyntaxError,
                        "unknown element <" + child.name + "> in <report>");
        }
    }
    if (config.file_name.empty())
        throw Error(ErrorKind::SyntaxError, "<report> needs a <fileName> element");
    return config;
}

} // namespace

ExperimentConfig parse_config(const std::string& path)
{
    const xml::Element root = xml::parse_file(path);
    if (root.name != "configuration")
        throw Error(ErrorKind::SyntaxError,
                    "root element is <" + root.name + ">, expected <configuration>");
    const fs::path base_dir = fs::path(path).parent_path();

    ExperimentConfig config;
    bool has_classifier = false, has_evaluator = false, has_report = false;
    for (const auto& child : root.children) {
        if (child.name == "classifier") {
            if (has_classifier)
                throw Error(ErrorKind::DuplicateBranch, "<classifier>");
            config.classifier = parse_classifier(child);
            has_classifier = true;
        } else if (child.name == "evaluator") {
            if (has_evaluator)
                throw Error(ErrorKind::DuplicateBranch, "<evaluator>");
            config.evaluator = parse_evaluator(child, base_dir);
            has_evaluator = true;
        } else if (child.name == "report") {
            if (has_report)
                throw Error(ErrorKind::DuplicateBranch, "<report>");
            config.report = parse_report(child, base_dir);
            has_report = true;
        } else {
            throw Error(ErrorKind::SyntaxError,
                        "unknown element <" + child.name + "> in <configuration>");
        }
    }
    if (!has_classifier)
        throw Error(ErrorKind::MissingBranch, "<classifier>");
    if (!has_evaluator)
        throw Error(ErrorKind::MissingBranch, "<evaluator>");
    if (!has_report)
        throw Error(ErrorKind::MissingBranch, "<report>");
    return config;
}

std::string run_experiment(const ExperimentConfig& config)
{
    const EvaluatorConfig& ev = config.evaluator;

    EvaluationResult result;
    std::string dataset_name;
    if (ev.kind == EvaluatorConfig::Kind::CV) {
        MIMLDataset ds = parse_dataset(ev.arff_path, ev.xml_path);
        dataset_name = ds.relation_name;
        result = evaluate_cv(config.classifier, ds, ev.num_folds, ev.seed, ev.strategy,
                             config.report.measures, config.report.per_label, ev.parallel);
    } else if (!ev.train_arff_path.empty()) {
        MIMLDataset train_ds = parse_dataset(ev.train_arff_path, ev.xml_path);
        MIMLDataset test_ds = parse_dataset(ev.test_arff_path, ev.xml_path);
        dataset_name = train_ds.relation_name;
        result = evaluate_holdout(config.classifier, train_ds, test_ds, config.report.measures,
                                  config.report.per_label);
    } else {
        MIMLDataset ds = parse_dataset(ev.arff_path, ev.xml_path);
        dataset_name = ds.relation_name;
        auto [train_idx, test_idx] =
            split_holdout(ds, ev.strategy, ev.train_fraction, ev.seed);
        result = evaluate_holdout(config.classifier, select_bags(ds, train_idx),
                                  select_bags(ds, test_idx), config.report.measures,
                                  config.report.per_label);
    }

    write_report(result, config.report.file_name, dataset_name,
                 canonical_algorithm_key(config.classifier.key), config.report.per_label,
                 config.report.overwrite);
    return config.report.file_name;
}

int run_experiment_cli(const std::string& path, std::ostream& out, std::ostream& err)
{
    ExperimentConfig config;
    try {
        config = parse_config(path);
    } catch (const Error& e) {
        err << "config error: " << e.what() << "\n";
        return e.kind() == ErrorKind::FileNotFound ? 3 : 2;
    }

    try {
        out << run_experiment(config) << "\n";
        return 0;
    } catch (const Error& e) {
        switch (e.kind()) {
        case ErrorKind::FileNotFound:
        case ErrorKind::SyntaxError:
        case ErrorKind::SchemaError:
            err << "data error: " << e.what() << "\n";
            return 3;
        case ErrorKind::UnknownAlgorithm:
        case ErrorKind::UnknownMeasure:
        case ErrorKind::BadParameter:
            err << "config error: " << e.what() << "\n";
            return 2;
        default:
            err << "error: " << e.what() << "\n";
            return 4;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace miml
