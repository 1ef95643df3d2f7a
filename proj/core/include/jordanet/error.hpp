#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordanet {

enum class ErrorCode {
  ParseError,
  DimensionMismatch,
  NotSymmetric,
  DependentBasis,
  NotRegular,
  SingularU,
  UNotInSpace,
  NotJordan,
  IdealCheckFailed,
  NilpotencyCheckFailed,
  NotOrthogonalIdempotents,
  ClosureDidNotConverge,
  SingularP,
  NotGenericRank,
  NotHomogeneous,
  ConventionMismatch,
  UnsupportedDim,
  UnknownId,
  Unrecognized,
};

// Stable upper-case identifier, e.g. "NOT_REGULAR".
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jordanet
