#include "sl2bar/error.hpp"

namespace sl2bar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kBoundExceeded: return "BoundExceeded";
    case ErrorCode::kNotADivisor: return "NotADivisor";
    case ErrorCode::kLevelOverflow: return "LevelOverflow";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kNotAnInvolution: return "NotAnInvolution";
    case ErrorCode::kSearchFailed: return "SearchFailed";
    case ErrorCode::kNoPrimitiveCubeRoot: return "NoPrimitiveCubeRoot";
    case ErrorCode::kStepFailed: return "StepFailed";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorCode::kInvalidConwayTable: return "InvalidConwayTable";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace sl2bar
