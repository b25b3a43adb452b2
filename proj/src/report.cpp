#include "miml/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace miml {

namespace {

std::string csv_field(const std::string& value)
{
    if (value.find_first_of(",\"\n") == std::string::npos)
        return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string number(double value)
{
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << value;
    return out.str();
}

void append_row(std::ostringstream& out, const EvaluationResult& result,
                const MeasureValues& values, const std::string& dataset_name,
                const std::string& algorithm_key, const std::string& fold_id, bool per_label)
{
    out << csv_field(dataset_name) << "," << csv_field(algorithm_key) << ","
        << csv_field(fold_id);
    for (const auto& name : result.measures) {
        out << "," << number(values.scalars.at(name));
        if (per_label && is_macro_measure(name)) {
            const Eigen::VectorXd& labels = values.per_label.at(name);
            for (Index l = 0; l < labels.size(); ++l)
                out << "," << number(labels(l));
        }
    }
    out << "\n";
}

} // namespace

std::string format_report(const EvaluationResult& result, const std::string& dataset_name,
                          const std::string& algorithm_key, bool per_label)
{
    std::ostringstream out;
    out << "dataset,algorithm,fold";
    for (const auto& name : result.measures) {
        out << "," << csv_field(name);
        if (per_label && is_macro_measure(name))
            for (const auto& label : result.label_names)
                out << "," << csv_field(name + "[" + label + "]");
    }
    out << "\n";

    if (result.folds.empty()) {
        append_row(out, result, result.summary, dataset_name, algorithm_key, "holdout",
                   per_label);
    } else {
        for (std::size_t fold = 0; fold < result.folds.size(); ++fold)
            append_row(out, result, result.folds[fold], dataset_name, algorithm_key,
                       std::to_string(fold), per_label);
        append_row(out, result, result.summary, dataset_name, algorithm_key, "mean", per_label);
        append_row(out, result, result.dispersion, dataset_name, algorithm_key, "std",
                   per_label);
    }
    return out.str();
}

void write_report(const EvaluationResult& result, const std::string& path,
                  const std::string& dataset_name, const std::string& algorithm_key,
                  bool per_label, bool overwrite)
{
    if (!overwrite && std::filesystem::exists(path))
        throw Error(ErrorKind::IoError,
                    "report file '" + path + "' already exists (pass the overwrite flag)");
    if (const auto dir = std::filesystem::path(path).parent_path(); !dir.empty())
        std::filesystem::create_directories(dir);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path);
    out << format_report(result, dataset_name, algorithm_key, per_label);
    if (!out)
        throw Error(ErrorKind::IoError, "failed writing " + path);
}

} // namespace miml
