#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tririgid {

/// Failure categories surfaced by the library. The CLI maps these onto exit
/// codes: input-shaped errors become 2, invariant breaches become 3.
enum class ErrorKind {
  // input / contract violations
  NotSimple,
  InvalidRotation,
  NonTriangularFace,
  EulerViolation,
  Not3Connected,
  UnknownFace,
  NotAnEdge,
  EdgeOnSeparatingTriangle,
  NotFourConnected,
  AdjacentPair,
  PreconditionViolated,
  InvalidSplit,
  GeneralPositionViolated,
  NotEquilibrium,
  InvalidField,
  ParseError,
  // invariant breaches: a theorem guaranteed success and it did not happen
  NoneContractible,
  NotFound,
  MaxAttemptsExceeded,
  WitnessFailed,
  CoincidentRankDeficient,
  CertificationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for kinds that indicate a bug or a false theorem rather than bad input.
bool is_invariant_breach(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tririgid
