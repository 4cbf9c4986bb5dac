#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsent {

enum class ErrorCode {
    NonSquare,
    NotHermitian,
    DimensionMismatch,
    NotTracePreserving,
    InvalidOrder,
    NotPositive,
    DomainError,
    InvalidSpectrum,
    SingularNormalizer,
    UnknownName,
    ParamOutOfRange,
    BoundViolation,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code is stable
/// and meant for programmatic dispatch; what() carries a human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace qsent
