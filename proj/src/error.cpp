#include "newtonlab/error.hpp"

namespace newtonlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SlopeOutOfRange: return "SlopeOutOfRange";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::EmptyPolygon: return "EmptyPolygon";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::IrreduciblePoleUnsupported: return "IrreduciblePoleUnsupported";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::BaseNotOrdinary: return "BaseNotOrdinary";
    case ErrorCode::HeightMismatch: return "HeightMismatch";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::ConductorDivisibleByP: return "ConductorDivisibleByP";
    case ErrorCode::NonIntegralA: return "NonIntegralA";
    case ErrorCode::ReducedConductorInvalid: return "ReducedConductorInvalid";
    case ErrorCode::SlopeSetMismatch: return "SlopeSetMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::FieldGuard: return "FieldGuard";
    case ErrorCode::RoundTripFailure: return "RoundTripFailure";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::HeightMismatch:
    case ErrorCode::NonIntegralA:
    case ErrorCode::RoundTripFailure:
    case ErrorCode::CounterexampleFound:
    case ErrorCode::Overflow:
      return true;
    default:
      return false;
  }
}

}  // namespace newtonlab
