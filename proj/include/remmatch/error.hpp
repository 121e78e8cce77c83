#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace remmatch {

enum class ErrorCode {
  MalformedGraph6,
  Unsupported,
  EdgeAbsent,
  VertexOutOfRange,
  SetsOverlap,
  EmptySubset,
  SubsetIsWholeGraph,
  EmptyGraph,
  SameVertex,
  TooLarge,
  NotBipartiteWithPart,
  NotKConnected,
  Not2Connected,
  NotMinimallyKConnected,
  AuditFailure,
  Disconnected,
  PreconditionViolated,
  UnknownTheorem,
  UnknownConjecture,
  EmptyFamily,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Thrown for every contract violation in the library. The code is stable and
/// machine-readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace remmatch
