#include "dtn/time_bound.hpp"

#include "dtn/error.hpp"

namespace dtn {

std::string TimeBound::to_string() const {
  if (infinite_) return "inf";
  return (strict_ ? ">" : "") + std::to_string(value_);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::InitialInvariantViolated: return "InitialInvariantViolated";
    case ErrorCode::ReservedClockReset: return "ReservedClockReset";
    case ErrorCode::AlreadyAugmented: return "AlreadyAugmented";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownClock: return "UnknownClock";
    case ErrorCode::UnknownLocation: return "UnknownLocation";
    case ErrorCode::UnsupportedRelation: return "UnsupportedRelation";
    case ErrorCode::UnboundedHorizon: return "UnboundedHorizon";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::MultiClockUnsupported: return "MultiClockUnsupported";
    case ErrorCode::Uncertified: return "Uncertified";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InvalidTrace: return "InvalidTrace";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace dtn
