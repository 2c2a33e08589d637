#pragma once

#include <stdexcept>
#include <string>

namespace gdifs {

enum class ErrorCode {
  InvalidInput,
  InvalidArgument,
  NotStronglyConnected,
  OutDegreeTooSmall,
  RatioOutOfRange,
  ReflectionNotSupported,
  DuplicateEdgeId,
  SumNotOne,
  NonPositiveParameter,
  CsscViolated,
  NotCanonicalFamily,
  NotAtEigenvalueOne,
  BracketFailure,
  NotCertified,
  DimensionAtOne,
  IntervalOutsideHull,
  ZeroLengthInterval,
  NotOneVertex,
  BdMismatch,
  NonPositive,
  ContainsOne,
  GeneratorNotContracting,
  FactorTooLarge,
  NotApplicable,
  LevelTooDeep,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Errors that describe bad input or an unmet precondition. Everything else
/// surfacing from the library is a bug and is reported as Internal.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace gdifs
