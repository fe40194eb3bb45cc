// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "cscsums/identities.hpp"
#include "cscsums/json_io.hpp"
#include "cscsums/sums.hpp"
#include "cscsums/zeta.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

csc_status status_of(cscsums::ErrorCode code) {
  using cscsums::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CSC_ERROR_INVALID_ARGUMENT;
    case ErrorCode::PrecisionTooLow: return CSC_ERROR_PRECISION_TOO_LOW;
    case ErrorCode::Range: return CSC_ERROR_RANGE;
    case ErrorCode::Pole: return CSC_ERROR_POLE;
    case ErrorCode::Domain: return CSC_ERROR_DOMAIN;
    case ErrorCode::UnknownIdentity: return CSC_ERROR_UNKNOWN_IDENTITY;
    default: return CSC_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct csc_session {
  std::string last_error;
};

extern "C" {

const char* csc_version(void) { return kVersion; }

csc_session* csc_session_new(void) { return new csc_session(); }

void csc_session_free(csc_session* session) { delete session; }

const char* csc_session_last_error(const csc_session* session) {
  return session ? session->last_error.c_str() : "";
}

void csc_string_free(char* text) { std::free(text); }

}  // extern "C"

namespace {

// Runs fn, converting its JSON result to an owned C string and exceptions to
// status codes.
template <typename Fn>
csc_status guarded(csc_session* session, char** out, Fn&& fn) {
  if (session == nullptr || out == nullptr) return CSC_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    session->last_error.clear();
    *out = dup_string(fn());
    return CSC_OK;
  } catch (const cscsums::Error& e) {
    session->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    session->last_error = e.what();
    return CSC_ERROR_INTERNAL;
  }
}

std::string csv_escape(const std::string& field) { return field; }  // fields never contain commas

}  // namespace

extern "C" {

csc_status csc_direct_sum(csc_session* session, int s, int n, long precision_bits, char** out) {
  return guarded(session, out, [&] {
    cscsums::BigFloat v = cscsums::direct_sum({s, n}, precision_bits);
    return cscsums::to_json(v).dump();
  });
}

csc_status csc_sum_summary(csc_session* session, int s, int n, long precision_bits, char** out) {
  return guarded(session, out, [&] {
    using cscsums::Json;
    Json doc{{"s", s}, {"n", n}};
    cscsums::BigFloat v = cscsums::direct_sum({s, n}, precision_bits);
    doc["numeric"] = cscsums::to_json(v);
    if (s % 2 == 0) {
      doc["exact"] = cscsums::even_sum_exact(s / 2, n).to_string();
      Json dyadic = Json::array();
      auto coeffs = cscsums::even_sum_dyadic(s / 2);
      for (int j = 1; j <= s / 2; ++j)
        dyadic.push_back(Json{{"exponent", 2 * j * (n - 1)}, {"coeff", coeffs[j - 1].to_string()}});
      doc["dyadic_form"] = dyadic;
    } else {
      doc["row"] = cscsums::to_json(cscsums::odd_coeff_row((s - 1) / 2, n));
    }
    return doc.dump();
  });
}

csc_status csc_even_sum_exact(csc_session* session, int k, int n, char** out) {
  return guarded(session, out, [&] {
    return cscsums::Json{{"k", k}, {"n", n}, {"value", cscsums::even_sum_exact(k, n).to_string()}}
        .dump();
  });
}

csc_status csc_odd_coeff_row(csc_session* session, int m, int n, char** out) {
  return guarded(session, out,
                 [&] { return cscsums::to_json(cscsums::odd_coeff_row(m, n)).dump(); });
}

csc_status csc_matrix_first_row(csc_session* session, int m, int n, char** out) {
  return guarded(session, out,
                 [&] { return cscsums::to_json(cscsums::matrix_first_row(m, n)).dump(); });
}

csc_status csc_matrix_full(csc_session* session, int m, int n, char** out) {
  return guarded(session, out, [&] { return cscsums::to_json(cscsums::matrix_full(m, n)).dump(); });
}

csc_status csc_even_row(csc_session* session, int m, int n, char** out) {
  return guarded(session, out, [&] { return cscsums::to_json(cscsums::even_row(m, n)).dump(); });
}

csc_status csc_zeta_even_exact(csc_session* session, int k, char** out) {
  return guarded(session, out, [&] {
    cscsums::PiMultiple v = cscsums::zeta_even_exact(k);
    cscsums::Json doc = cscsums::to_json(v);
    doc["numeric"] = cscsums::to_json(cscsums::pi_multiple_value(v, 256));
    return doc.dump();
  });
}

csc_status csc_zeta_reference(csc_session* session, const char* s_decimal, long precision_bits,
                              char** out) {
  return guarded(session, out, [&] {
    if (s_decimal == nullptr)
      cscsums::fail(cscsums::ErrorCode::InvalidArgument, "s must be provided");
    return cscsums::to_json(cscsums::zeta_reference(std::string(s_decimal), precision_bits))
        .dump();
  });
}

csc_status csc_z_approx(csc_session* session, int m, int n, long precision_bits, char** out) {
  return guarded(session, out, [&] {
    cscsums::Json doc{{"m", m}, {"n", n}};
    doc["value"] = cscsums::to_json(cscsums::Z_approx(m, n, precision_bits));
    if (m % 2 == 0) {
      doc["exact"] = cscsums::to_json(cscsums::z_even_exact(m / 2, n));
      doc["error_term"] = cscsums::to_json(cscsums::R_error(m / 2, n));
    }
    return doc.dump();
  });
}

csc_status csc_r_error(csc_session* session, int k, int n, char** out) {
  return guarded(session, out, [&] { return cscsums::to_json(cscsums::R_error(k, n)).dump(); });
}

csc_status csc_zeta_odd_integral(csc_session* session, int j, const char* abs_tol,
                                 const char* method, long precision_bits, char** out) {
  return guarded(session, out, [&] {
    cscsums::QuadratureConfig cfg;
    if (precision_bits > 0) cfg.precision = precision_bits;
    if (abs_tol != nullptr) cfg.abs_tolerance = abs_tol;
    if (method != nullptr) {
      std::string m(method);
      if (m == "gauss")
        cfg.method = cscsums::QuadratureMethod::GaussLegendrePanels;
      else if (m != "simpson")
        cscsums::fail(cscsums::ErrorCode::InvalidArgument, "method must be simpson or gauss");
    }
    cscsums::BigFloat v = cscsums::zeta_odd_integral(j, cfg);
    return cscsums::Json{{"j", j},
                         {"s", 2 * j + 1},
                         {"value", cscsums::to_json(v)},
                         {"method", cfg.method == cscsums::QuadratureMethod::AdaptiveSimpson
                                        ? "simpson"
                                        : "gauss"}}
        .dump();
  });
}

csc_status csc_zeta_odd_limit_table(csc_session* session, int m, int n_lo, int n_hi,
                                    long precision_bits, char** out) {
  return guarded(session, out, [&] {
    auto rows = cscsums::zeta_odd_limit_table(m, n_lo, n_hi, precision_bits);
    cscsums::Json arr = cscsums::Json::array();
    for (const auto& r : rows)
      arr.push_back(cscsums::Json{{"n", r.n},
                                  {"value", r.value.to_decimal()},
                                  {"error", r.error.to_decimal()}});
    return cscsums::Json{{"m", m}, {"s", 2 * m + 1}, {"rows", arr}}.dump();
  });
}

csc_status csc_check(csc_session* session, const char* identity, const char* params_json,
                     long precision_bits, char** out) {
  return guarded(session, out, [&] {
    using cscsums::Json;
    if (identity == nullptr)
      cscsums::fail(cscsums::ErrorCode::InvalidArgument, "identity name must be provided");
    std::map<std::string, long> params;
    if (params_json != nullptr && params_json[0] != '\0') {
      Json p = Json::parse(params_json, nullptr, false);
      if (p.is_discarded() || !p.is_object())
        cscsums::fail(cscsums::ErrorCode::InvalidArgument, "params must be a JSON object");
      for (auto& [key, value] : p.items()) {
        if (!value.is_number_integer())
          cscsums::fail(cscsums::ErrorCode::InvalidArgument,
                        "parameter '" + key + "' must be an integer");
        params[key] = value.get<long>();
      }
    }
    std::string name(identity);
    if (auto id = cscsums::identity_from_string(name)) {
      return cscsums::to_json(cscsums::run_check(*id, params)).dump();
    }
    // trig lemma names
    for (auto lemma :
         {cscsums::TrigLemma::Quotient, cscsums::TrigLemma::QuotientCorollary,
          cscsums::TrigLemma::Product, cscsums::TrigLemma::ProductCorollary,
          cscsums::TrigLemma::ColumnSums, cscsums::TrigLemma::Commute}) {
      if (name == cscsums::to_string(lemma)) {
        auto it = params.find("n");
        if (it == params.end())
          cscsums::fail(cscsums::ErrorCode::InvalidArgument, "trig checks need parameter 'n'");
        int n = static_cast<int>(it->second);
        params.erase(it);
        return cscsums::to_json(
                   cscsums::check_trig_lemma(lemma, n, params,
                                             precision_bits > 0 ? precision_bits : 256))
            .dump();
      }
    }
    cscsums::fail(cscsums::ErrorCode::UnknownIdentity, "unknown identity '" + name + "'");
  });
}

csc_status csc_verify_suite(csc_session* session, const char* suite, int max_m, int max_n,
                            long precision_bits, int* fail_count, char** out) {
  csc_status rc = guarded(session, out, [&] {
    using cscsums::Json;
    std::string which = suite == nullptr ? "all" : suite;
    if (which != "all" && which != "identities" && which != "trig")
      cscsums::fail(cscsums::ErrorCode::InvalidArgument,
                    "suite must be all, identities or trig");
    std::vector<cscsums::CheckReport> reports;
    if (which != "trig") {
      auto part = cscsums::run_identity_suite(max_m, max_n);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    if (which != "identities") {
      auto part = cscsums::run_trig_suite(std::min(max_m, 4), max_n,
                                          precision_bits > 0 ? precision_bits : 256);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    int fails = 0, passes = 0, skips = 0;
    Json arr = Json::array();
    for (const auto& r : reports) {
      arr.push_back(cscsums::to_json(r));
      switch (r.status) {
        case cscsums::CheckStatus::Pass: ++passes; break;
        case cscsums::CheckStatus::Fail: ++fails; break;
        default: ++skips; break;
      }
    }
    if (fail_count != nullptr) *fail_count = fails;
    return Json{{"suite", which},
                {"counts", Json{{"pass", passes}, {"fail", fails}, {"skipped", skips}}},
                {"checks", arr}}
        .dump();
  });
  return rc;
}

csc_status csc_emit_table(csc_session* session, const char* kind, int k, int m, int n_lo,
                          int n_hi, long precision_bits, const char* format, char** out) {
  return guarded(session, out, [&] {
    using cscsums::Json;
    std::string which = kind == nullptr ? "" : kind;
    std::string fmt = format == nullptr ? "json" : format;
    if (fmt != "json" && fmt != "csv")
      cscsums::fail(cscsums::ErrorCode::InvalidArgument, "format must be json or csv");
    if (n_lo > n_hi || n_lo < 2)
      cscsums::fail(cscsums::ErrorCode::InvalidArgument, "need 2 <= n_lo <= n_hi");
    const long prec = precision_bits > 0 ? precision_bits : 256;
    std::string csv;
    Json rows = Json::array();
    if (which == "even_sums") {
      // closed form: no upper bound on n
      csv = "k,n,value\n";
      for (int n = n_lo; n <= n_hi; ++n) {
        cscsums::Rational v = cscsums::even_sum_exact(k, n);
        rows.push_back(Json{{"k", k}, {"n", n}, {"value", v.to_string()}});
        csv += std::to_string(k) + "," + std::to_string(n) + "," + csv_escape(v.to_string()) +
               "\n";
      }
    } else if (which == "odd_rows") {
      if (n_hi > 14)
        cscsums::fail(cscsums::ErrorCode::Range, "odd_rows tables are bounded at n <= 14");
      csv = "m,n,entries\n";
      for (int n = n_lo; n <= n_hi; ++n) {
        auto row = cscsums::odd_coeff_row(m, n);
        std::string joined;
        Json entries = Json::array();
        for (const auto& e : row.entries) {
          if (!joined.empty()) joined += " ";
          joined += e.to_string();
          entries.push_back(e.to_string());
        }
        rows.push_back(Json{{"m", m}, {"n", n}, {"entries", entries}});
        csv += std::to_string(m) + "," + std::to_string(n) + "," + joined + "\n";
      }
    } else if (which == "z_convergence") {
      if (n_hi > 14)
        cscsums::fail(cscsums::ErrorCode::Range,
                      "z_convergence uses direct summation, bounded at n <= 14");
      if (n_lo < 3) cscsums::fail(cscsums::ErrorCode::InvalidArgument, "need n_lo >= 3");
      auto table = cscsums::zeta_odd_limit_table(m, n_lo, n_hi, prec);
      cscsums::BigFloat ref =
          cscsums::zeta_reference(cscsums::BigFloat::from(2 * m + 1, prec + 32), prec);
      csv = "m,n,value,reference,error\n";
      for (const auto& r : table) {
        rows.push_back(Json{{"m", m},
                            {"n", r.n},
                            {"value", r.value.to_decimal()},
                            {"reference", ref.to_decimal()},
                            {"error", r.error.to_decimal()}});
        csv += std::to_string(m) + "," + std::to_string(r.n) + "," + r.value.to_decimal() + "," +
               ref.to_decimal() + "," + r.error.to_decimal() + "\n";
      }
    } else {
      cscsums::fail(cscsums::ErrorCode::InvalidArgument,
                    "kind must be even_sums, odd_rows or z_convergence");
    }
    if (fmt == "csv") return csv;
    return Json{{"kind", which}, {"rows", rows}}.dump();
  });
}

}  // extern "C"
