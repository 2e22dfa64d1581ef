#include "xppkit/errors.hpp"

namespace xpp {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedDeclaration: return "MalformedDeclaration";
        case ErrorKind::DuplicateName: return "DuplicateName";
        case ErrorKind::EmptyModel: return "EmptyModel";
        case ErrorKind::ColumnCountMismatch: return "ColumnCountMismatch";
        case ErrorKind::NonNumericCell: return "NonNumericCell";
        case ErrorKind::EmptyFile: return "EmptyFile";
        case ErrorKind::BadFilename: return "BadFilename";
        case ErrorKind::BadRow: return "BadRow";
        case ErrorKind::SectionMissing: return "SectionMissing";
        case ErrorKind::PointRecordMalformed: return "PointRecordMalformed";
        case ErrorKind::SolutionLengthMismatch: return "SolutionLengthMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::UnknownTypePair: return "UnknownTypePair";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownFunction: return "UnknownFunction";
        case ErrorKind::ArityError: return "ArityError";
        case ErrorKind::UnboundIdentifier: return "UnboundIdentifier";
        case ErrorKind::NoOrbits: return "NoOrbits";
        case ErrorKind::GridLengthMismatch: return "GridLengthMismatch";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::TwoParameterDiagram: return "TwoParameterDiagram";
        case ErrorKind::UnknownAxisName: return "UnknownAxisName";
        case ErrorKind::InvalidAxisCombo: return "InvalidAxisCombo";
        case ErrorKind::AxisNotInPair: return "AxisNotInPair";
        case ErrorKind::UnsupportedTarget: return "UnsupportedTarget";
        case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

} // namespace xpp
