// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums/json_io.hpp"

#include "cscsums/polynomial.hpp"

namespace cscsums {

Json to_json(const Rational& v) { return v.to_string(); }

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).to_string());
  return arr;
}

Json to_json(const CoefficientRow& row) {
  Json entries = Json::array();
  for (const auto& e : row.entries) entries.push_back(e.to_string());
  return Json{{"n", row.n},
              {"power", row.power},
              {"basis", to_string(row.basis)},
              {"entries", entries}};
}

Json to_json(const TransferMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(e.to_string());
    rows.push_back(entries);
  }
  return Json{{"n", m.n}, {"power", m.power}, {"basis", "ODD_SINE"}, {"rows", rows}};
}

Json to_json(const CheckReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return Json{{"identity", r.identity},
              {"params", params},
              {"status", to_string(r.status)},
              {"residual", r.residual.empty() ? Json(nullptr) : Json(r.residual)}};
}

Json to_json(const PiMultiple& v) {
  return Json{{"coeff", v.coeff.to_string()}, {"pi_pow", v.pi_power}};
}

Json to_json(const BigFloat& v) {
  return Json{{"value", v.to_decimal()}, {"precision", v.precision()}};
}

}  // namespace cscsums
