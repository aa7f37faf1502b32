#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittstab {

enum class ErrorCode {
  InvalidInput,
  SpecMismatch,
  NonUnit,
  NotNilpotent,
  DegenerateForm,
  OddRank,
  NoUnitPivot,
  UnsupportedRing,
  OracleInconclusive,
  NotClosed,
  IllFormed,
  NotCatalogued,
  NonUnitAssignment,
  NotALift,
  NotUnitaryMod,
  NotCongruent,
};

std::string_view to_string(ErrorCode code);

/// Recoverable input or precondition failure. Carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An algebraic identity that must hold by construction did not. Always a bug.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void ensure_identity(bool holds, const std::string& what) {
  if (!holds) throw IdentityViolation(what);
}

}  // namespace wittstab
