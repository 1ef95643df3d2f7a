#include "jordanet/error.hpp"

namespace jordanet {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::DependentBasis: return "DEPENDENT_BASIS";
    case ErrorCode::NotRegular: return "NOT_REGULAR";
    case ErrorCode::SingularU: return "SINGULAR_U";
    case ErrorCode::UNotInSpace: return "U_NOT_IN_SPACE";
    case ErrorCode::NotJordan: return "NOT_JORDAN";
    case ErrorCode::IdealCheckFailed: return "IDEAL_CHECK_FAILED";
    case ErrorCode::NilpotencyCheckFailed: return "NILPOTENCY_CHECK_FAILED";
    case ErrorCode::NotOrthogonalIdempotents: return "NOT_ORTHOGONAL_IDEMPOTENTS";
    case ErrorCode::ClosureDidNotConverge: return "CLOSURE_DID_NOT_CONVERGE";
    case ErrorCode::SingularP: return "SINGULAR_P";
    case ErrorCode::NotGenericRank: return "NOT_GENERIC_RANK";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::ConventionMismatch: return "CONVENTION_MISMATCH";
    case ErrorCode::UnsupportedDim: return "UNSUPPORTED_DIM";
    case ErrorCode::UnknownId: return "UNKNOWN_ID";
    case ErrorCode::Unrecognized: return "UNRECOGNIZED";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace jordanet
