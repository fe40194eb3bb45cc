// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <map>
#include <string>

namespace cscsums {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "SKIPPED";
  }
}

// Outcome of one verification instance. PASS always means an exactly zero
// residual (or, for numeric trig checks, a residual below the documented
// precision-derived threshold); residual carries a textual rendering of the
// nonzero residual otherwise. Skipped checks are executed and reported but
// not counted as failures (used for instances outside an identity's
// validity range).
struct CheckReport {
  std::string identity;
  std::map<std::string, long> params;
  CheckStatus status = CheckStatus::Pass;
  std::string residual;  // empty when the residual is zero

  bool passed() const { return status == CheckStatus::Pass; }
};

}  // namespace cscsums
