#pragma once

#include <stdexcept>
#include <string>

namespace miml {

// Error taxonomy shared by all modules. Each kind maps to a CLI exit class.
enum class ErrorKind {
    FileNotFound,
    SyntaxError,
    SchemaError,
    IoError,
    IndexOutOfRange,
    DimensionMismatch,
    MissingRanges,
    InvalidK,
    InvalidFraction,
    UnknownAlgorithm,
    BadParameter,
    UnknownMeasure,
    LengthMismatch,
    MissingBranch,
    DuplicateBranch,
};

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::FileNotFound: return "FileNotFound";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MissingRanges: return "MissingRanges";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::InvalidFraction: return "InvalidFraction";
    case ErrorKind::UnknownAlgorithm: return "UnknownAlgorithm";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::UnknownMeasure: return "UnknownMeasure";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::MissingBranch: return "MissingBranch";
    case ErrorKind::DuplicateBranch: return "DuplicateBranch";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace miml
