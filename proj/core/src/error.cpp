#include "geocheck/error.hpp"

namespace geocheck {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kDegenerateInput: return "degenerate-input";
    case ErrorKind::kSingularSystem: return "singular-system";
    case ErrorKind::kUnsupportedOrder: return "unsupported-order";
    case ErrorKind::kUndefinedConditional: return "undefined-conditional";
    case ErrorKind::kIllPosedNetwork: return "ill-posed-network";
    case ErrorKind::kInvalidWalk: return "invalid-walk";
    case ErrorKind::kStepTooLarge: return "step-too-large";
    case ErrorKind::kManeuverInfeasible: return "maneuver-infeasible";
    case ErrorKind::kSolverFailure: return "solver-failure";
    case ErrorKind::kAssumptionViolation: return "assumption-violation";
    case ErrorKind::kNoTightLoop: return "no-tight-loop";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kInvalidSchedule: return "invalid-schedule";
    case ErrorKind::kNoTangent: return "no-tangent";
    case ErrorKind::kGrazing: return "grazing";
    case ErrorKind::kInvalidLine: return "invalid-line";
    case ErrorKind::kNoUniqueConic: return "no-unique-conic";
    case ErrorKind::kTrackingFailure: return "tracking-failure";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace geocheck
