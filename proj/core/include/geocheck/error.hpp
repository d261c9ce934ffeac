#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geocheck {

/// Failure categories shared by every module. The CLI maps all of them to
/// exit code 2 (invalid input) except where noted by the caller.
enum class ErrorKind {
  kInvalidArgument,
  kDegenerateInput,
  kSingularSystem,
  kUnsupportedOrder,
  kUndefinedConditional,
  kIllPosedNetwork,
  kInvalidWalk,
  kStepTooLarge,
  kManeuverInfeasible,
  kSolverFailure,
  kAssumptionViolation,
  kNoTightLoop,
  kPrecondition,
  kInvalidSchedule,
  kNoTangent,
  kGrazing,
  kInvalidLine,
  kNoUniqueConic,
  kTrackingFailure,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the exact solver; carries the rank of the coefficient matrix.
class SingularSystemError : public Error {
 public:
  SingularSystemError(std::size_t rank, std::size_t size)
      : Error(ErrorKind::kSingularSystem,
              "singular system: rank " + std::to_string(rank) + " < " +
                  std::to_string(size)),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

}  // namespace geocheck
