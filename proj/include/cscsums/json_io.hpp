// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <json.hpp>

#include "cscsums/polynomial.hpp"
#include "cscsums/report.hpp"
#include "cscsums/sums.hpp"
#include "cscsums/zeta.hpp"

namespace cscsums {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& v);
Json to_json(const Polynomial& p);  // array of "p/q", ascending powers
Json to_json(const CoefficientRow& row);
Json to_json(const TransferMatrix& m);
Json to_json(const CheckReport& r);
Json to_json(const PiMultiple& v);

// {"value": "...decimal...", "precision": bits}
Json to_json(const BigFloat& v);

}  // namespace cscsums
