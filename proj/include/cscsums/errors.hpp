// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <stdexcept>
#include <string>

namespace cscsums {

enum class ErrorCode {
  InvalidArgument,
  PrecisionTooLow,
  Range,
  Pole,
  Domain,
  UnknownIdentity,
  Internal,
};

// Single exception type carrying a stable code so the C boundary can map
// failures onto csc_status values without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cscsums
