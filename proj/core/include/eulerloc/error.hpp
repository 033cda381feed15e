#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerloc {

enum class ErrorKind {
    InvalidInput,
    DiamondViolation,
    SignInconsistency,
    DimensionZero,
    DimensionTop,
    BadDimension,
    NotPseudomanifold,
    NotOrientable,
    NotClosed,
    NotExact,
    EmptyTiling,
    LemmaViolation,
    InclusionMissing,
    InclusionAmbiguous,
    ChainMapViolation,
    NonOrientableTransport,
    Inconsistent,
    NotClosedFinal,
    CancellationViolation,
    FormulaUnsupported,
    NotCycle,
    InvalidFiber,
    NotFiberEdge,
    DigestMismatch,
};

/// Stable identifier, e.g. "NotExact". Used verbatim in CLI diagnostics.
std::string_view name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace eulerloc
