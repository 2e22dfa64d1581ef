#ifndef XPPKIT_ERRORS_HPP
#define XPPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace xpp {

enum class ErrorKind {
    // model
    MalformedDeclaration,
    DuplicateName,
    EmptyModel,
    // tables
    ColumnCountMismatch,
    NonNumericCell,
    EmptyFile,
    BadFilename,
    BadRow,
    // autorepo
    SectionMissing,
    PointRecordMalformed,
    SolutionLengthMismatch,
    DimensionMismatch,
    UnknownTypePair,
    DuplicateLabel,
    // expr
    SyntaxError,
    UnknownFunction,
    ArityError,
    UnboundIdentifier,
    // analysis
    NoOrbits,
    GridLengthMismatch,
    UnknownName,
    // export
    TwoParameterDiagram,
    UnknownAxisName,
    InvalidAxisCombo,
    AxisNotInPair,
    UnsupportedTarget,
    // misc
    IoError,
};

const char* error_kind_name(ErrorKind k);

/// All library failures throw this one type; `kind` discriminates, `line`
/// (1-based, 0 = not applicable) locates the offending input.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, long line = 0)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message
                             + (line > 0 ? " (line " + std::to_string(line) + ")" : "")),
          kind_(kind), line_(line) {}

    ErrorKind kind() const { return kind_; }
    long line() const { return line_; }

private:
    ErrorKind kind_;
    long line_;
};

/// Non-fatal diagnostics. Functions taking a `Warnings*` append to it when
/// non-null and stay silent otherwise.
using Warnings = std::vector<std::string>;

inline void warn(Warnings* w, std::string msg) {
    if (w) w->push_back(std::move(msg));
}

} // namespace xpp

#endif
