#include "gdifs/error.hpp"

namespace gdifs {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::OutDegreeTooSmall: return "OutDegreeTooSmall";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::ReflectionNotSupported: return "ReflectionNotSupported";
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::CsscViolated: return "CsscViolated";
    case ErrorCode::NotCanonicalFamily: return "NotCanonicalFamily";
    case ErrorCode::NotAtEigenvalueOne: return "NotAtEigenvalueOne";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::NotCertified: return "NotCertified";
    case ErrorCode::DimensionAtOne: return "DimensionAtOne";
    case ErrorCode::IntervalOutsideHull: return "IntervalOutsideHull";
    case ErrorCode::ZeroLengthInterval: return "ZeroLengthInterval";
    case ErrorCode::NotOneVertex: return "NotOneVertex";
    case ErrorCode::BdMismatch: return "BdMismatch";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::ContainsOne: return "ContainsOne";
    case ErrorCode::GeneratorNotContracting: return "GeneratorNotContracting";
    case ErrorCode::FactorTooLarge: return "FactorTooLarge";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::LevelTooDeep: return "LevelTooDeep";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace gdifs
