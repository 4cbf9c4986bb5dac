#include "qsent/error.hpp"

namespace qsent {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::SingularNormalizer: return "SingularNormalizer";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace qsent
