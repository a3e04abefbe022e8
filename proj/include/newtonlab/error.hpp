#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace newtonlab {

enum class ErrorCode {
  // polygon
  SlopeOutOfRange,
  NotSymmetric,
  DomainError,
  DomainMismatch,
  EmptyPolygon,
  Overflow,
  // strata
  GenusTooSmall,
  EmptyInput,
  // covers
  InvalidCover,
  IrreduciblePoleUnsupported,
  NotReduced,
  NegativeGenus,
  BaseNotOrdinary,
  HeightMismatch,
  // families
  Inadmissible,
  ConductorDivisibleByP,
  NonIntegralA,
  ReducedConductorInvalid,
  SlopeSetMismatch,
  // zeta
  DegreeTooLarge,
  FieldGuard,
  RoundTripFailure,
  CounterexampleFound,
  // parsing / cli
  ParseError,
  UsageError,
};

std::string_view to_string(ErrorCode code);

// True for codes that indicate a bug or a falsified theorem rather than bad
// input. The CLI maps these to exit status 2.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace newtonlab
