// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cscsums/report.hpp"

namespace cscsums {

// One tag per verified statement; docs/identities.md lists the formula each
// tag checks together with its parameter names and documented ranges.
enum class IdentityId {
  // generating-function identities
  SumShift,
  Reflection,
  OrderDrop,
  OddZero,
  AlphaLower,
  BinomSumZero,
  ProdZeros,
  Dprod,
  Deriv,
  // number identities
  Bidentity,
  StirlingRel,
  TanBernoulli,
  SinhGenB,
  EulerAtZero,
  EulerExplicit,
  // reduction lemmas
  Reduced1,
  Reduced2,
  Reduced3,
  Coeffx,
  Stir,
  XmSquared,
  // Laurent-side lemmas
  Prepprep,
  Middletermprep,
  Firstterm,
  Lastterm,
  Middleterm,
  Oddeven,
  Lastprop,
  BridgeEvenOdd,
};

const char* to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

using Params = std::map<std::string, long>;

// The four check families; passing an id outside a family raises
// ErrorCode::UnknownIdentity, parameters outside the documented ranges raise
// ErrorCode::Range.
CheckReport check_generating_identity(IdentityId id, const Params& params);
CheckReport check_number_identity(IdentityId id, const Params& params);
CheckReport check_reduction_lemma(IdentityId id, const Params& params);
CheckReport check_laurent_lemma(IdentityId id, const Params& params);

// Dispatches to the appropriate family.
CheckReport run_check(IdentityId id, const Params& params);

// Full sweep of one identity over its documented range, scaled by the caps.
// max_m bounds the order-like knobs (m, k, alpha, ...), max_n bounds the
// dyadic level n where one appears.
std::vector<CheckReport> identity_sweep(IdentityId id, int max_m, int max_n);

// Every identity, documented ranges, deterministic order.
std::vector<CheckReport> run_identity_suite(int max_m = 10, int max_n = 8);

}  // namespace cscsums
