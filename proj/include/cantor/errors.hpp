#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

// Contract violations raised by library operations. Genuine uncertainty is
// never an error: operations that may fail to decide return a Verdict.
enum class ErrorKind {
  DepthTooSmall,
  HorizonExceeded,
  LevelExceeded,
  NotExhausted,
  NotDisjoint,
  SameCoordinate,
  WitnessMissing,
  HypothesisNotProved,
  PartialApproximation,
  InsufficientPrecision,
  HorizonTooShort,
  DominationViolated,
  ValidationMissing,
  CertificationFailure,
  InvalidArgument,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DepthTooSmall: return "depth-too-small";
    case ErrorKind::HorizonExceeded: return "horizon-exceeded";
    case ErrorKind::LevelExceeded: return "level-exceeded";
    case ErrorKind::NotExhausted: return "not-exhausted";
    case ErrorKind::NotDisjoint: return "not-disjoint";
    case ErrorKind::SameCoordinate: return "same-coordinate";
    case ErrorKind::WitnessMissing: return "witness-missing";
    case ErrorKind::HypothesisNotProved: return "hypothesis-not-proved";
    case ErrorKind::PartialApproximation: return "partial-approximation";
    case ErrorKind::InsufficientPrecision: return "insufficient-precision";
    case ErrorKind::HorizonTooShort: return "horizon-too-short";
    case ErrorKind::DominationViolated: return "domination-violated";
    case ErrorKind::ValidationMissing: return "validation-missing";
    case ErrorKind::CertificationFailure: return "certification-failure";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown-error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace cantor
