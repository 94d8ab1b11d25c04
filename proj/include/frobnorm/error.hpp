#pragma once

#include <stdexcept>
#include <string>

namespace frobnorm {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  InvalidArgument = 3,
  RingMismatch = 4,
  ParseError = 5,
  ConductorNotFound = 6,
  ZeroConductor = 7,
  IterationLimitExceeded = 8,
  ResourceLimit = 9,
  NothingToSplit = 10,
  ExponentOverflow = 11,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frobnorm
