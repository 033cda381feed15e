#include "eulerloc/error.hpp"

namespace eulerloc {

std::string_view name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DiamondViolation: return "DiamondViolation";
    case ErrorKind::SignInconsistency: return "SignInconsistency";
    case ErrorKind::DimensionZero: return "DimensionZero";
    case ErrorKind::DimensionTop: return "DimensionTop";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::EmptyTiling: return "EmptyTiling";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::InclusionMissing: return "InclusionMissing";
    case ErrorKind::InclusionAmbiguous: return "InclusionAmbiguous";
    case ErrorKind::ChainMapViolation: return "ChainMapViolation";
    case ErrorKind::NonOrientableTransport: return "NonOrientableTransport";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotClosedFinal: return "NotClosedFinal";
    case ErrorKind::CancellationViolation: return "CancellationViolation";
    case ErrorKind::FormulaUnsupported: return "FormulaUnsupported";
    case ErrorKind::NotCycle: return "NotCycle";
    case ErrorKind::InvalidFiber: return "InvalidFiber";
    case ErrorKind::NotFiberEdge: return "NotFiberEdge";
    case ErrorKind::DigestMismatch: return "DigestMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(name(kind)) + ": " + detail), kind_(kind), detail_(detail)
{
}

}  // namespace eulerloc
