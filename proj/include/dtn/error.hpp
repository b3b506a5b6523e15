#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dtn {

enum class ErrorCode {
  DanglingReference,
  InitialInvariantViolated,
  ReservedClockReset,
  AlreadyAugmented,
  SyntaxError,
  UnknownClock,
  UnknownLocation,
  UnsupportedRelation,
  UnboundedHorizon,
  Unreachable,
  Infeasible,
  NotFound,
  MultiClockUnsupported,
  Uncertified,
  LimitExceeded,
  InvalidTrace,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base class for every error raised by the library. The code identifies the
/// failure kind; the message names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dtn
