// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
//
// Command-line front end. Talks to the library exclusively through the C
// interface in cscsums.h; all exact computation lives behind that boundary.
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cscsums.h"

namespace {

using Json = nlohmann::ordered_json;

struct SessionDeleter {
  void operator()(csc_session* s) const { csc_session_free(s); }
};
using Session = std::unique_ptr<csc_session, SessionDeleter>;

struct StringDeleter {
  void operator()(char* s) const { csc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string format = "text";  // text | json | csv
  std::string out_file;
  long precision = 256;
};

int fail_with(const csc_session* session, csc_status status) {
  std::cerr << "error (" << static_cast<int>(status)
            << "): " << csc_session_last_error(session) << "\n";
  return 1;
}

void write_payload(const Options& opt, const std::string& payload) {
  if (opt.out_file.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(opt.out_file, std::ios::binary);
    f << payload;
  }
}

Json envelope(const Options& opt, const std::string& command, Json result) {
  return Json{{"tool", "cscsums"},
              {"version", csc_version()},
              {"command", command},
              {"precision", opt.precision},
              {"result", std::move(result)}};
}

void emit_json(const Options& opt, const std::string& command, const char* payload) {
  write_payload(opt, envelope(opt, command, Json::parse(payload)).dump(2));
}

std::string join_entries(const Json& entries) {
  std::string s = "(";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ", ";
    s += entries[i].get<std::string>();
  }
  return s + ")";
}

// ---- verbs ---------------------------------------------------------------

int run_sum(csc_session* s, const Options& opt, int sexp, int n) {
  OwnedString raw;
  char* p = nullptr;
  csc_status rc = csc_sum_summary(s, sexp, n, opt.precision, &p);
  raw.reset(p);
  if (rc != CSC_OK) return fail_with(s, rc);
  if (opt.format == "json") {
    emit_json(opt, "sum", raw.get());
    return 0;
  }
  Json doc = Json::parse(raw.get());
  std::string text = "S(" + std::to_string(sexp) + "," + std::to_string(n) +
                     ") = " + doc["numeric"]["value"].get<std::string>() + "\n";
  if (doc.contains("exact"))
    text += "exact value: " + doc["exact"].get<std::string>() + "\n";
  if (doc.contains("row"))
    text += "csc coefficient row: " + join_entries(doc["row"]["entries"]) + "\n";
  write_payload(opt, text);
  return 0;
}

int run_row(csc_session* s, const Options& opt, int m, int n, bool half_basis) {
  OwnedString raw;
  char* p = nullptr;
  csc_status rc = half_basis ? csc_even_row(s, m, n, &p) : csc_odd_coeff_row(s, m, n, &p);
  raw.reset(p);
  if (rc != CSC_OK) return fail_with(s, rc);
  if (opt.format == "json") {
    emit_json(opt, "row", raw.get());
    return 0;
  }
  Json doc = Json::parse(raw.get());
  write_payload(opt, "power " + std::to_string(doc["power"].get<int>()) + " over " +
                         doc["basis"].get<std::string>() + ": " +
                         join_entries(doc["entries"]) + "\n");
  return 0;
}

int run_matrix(csc_session* s, const Options& opt, int m, int n) {
  OwnedString raw;
  char* p = nullptr;
  csc_status rc = csc_matrix_full(s, m, n, &p);
  raw.reset(p);
  if (rc != CSC_OK) return fail_with(s, rc);
  if (opt.format == "json") {
    emit_json(opt, "matrix", raw.get());
    return 0;
  }
  Json doc = Json::parse(raw.get());
  std::string text;
  for (const auto& row : doc["rows"]) text += join_entries(row) + "\n";
  write_payload(opt, text);
  return 0;
}

int run_verify(csc_session* s, const Options& opt, const std::string& suite, int max_m,
               int max_n) {
  OwnedString raw;
  char* p = nullptr;
  int fails = 0;
  csc_status rc = csc_verify_suite(s, suite.c_str(), max_m, max_n, opt.precision, &fails, &p);
  raw.reset(p);
  if (rc != CSC_OK) return fail_with(s, rc);
  if (opt.format == "json") {
    emit_json(opt, "verify", raw.get());
  } else {
    Json doc = Json::parse(raw.get());
    std::string text;
    for (const auto& check : doc["checks"]) {
      std::string line = check["status"].get<std::string>() + " " +
                         check["identity"].get<std::string>() + " {";
      bool first = true;
      for (const auto& [key, value] : check["params"].items()) {
        if (!first) line += ", ";
        first = false;
        line += key + "=" + std::to_string(value.get<long>());
      }
      line += "}";
      if (!check["residual"].is_null())
        line += " residual " + check["residual"].get<std::string>();
      text += line + "\n";
    }
    const auto& counts = doc["counts"];
    text += "pass " + std::to_string(counts["pass"].get<int>()) + ", fail " +
            std::to_string(counts["fail"].get<int>()) + ", skipped " +
            std::to_string(counts["skipped"].get<int>()) + "\n";
    write_payload(opt, text);
  }
  return fails > 0 ? 1 : 0;
}

int run_zeta(csc_session* s, const Options& opt, int odd, int even, const std::string& ref,
             int zm, int rk, int n, int limit_m, int n_lo, int n_hi, const std::string& tol,
             const std::string& method) {
  OwnedString raw;
  char* p = nullptr;
  csc_status rc = CSC_OK;
  std::string what;
  if (odd > 0) {
    if (odd % 2 == 0 || odd < 3) {
      std::cerr << "error: --odd takes an odd integer >= 3\n";
      return 2;
    }
    rc = csc_zeta_odd_integral(s, (odd - 1) / 2, tol.empty() ? nullptr : tol.c_str(),
                               method.empty() ? nullptr : method.c_str(), opt.precision, &p);
    what = "zeta(" + std::to_string(odd) + ")";
  } else if (even > 0) {
    rc = csc_zeta_even_exact(s, even, &p);
    what = "zeta(" + std::to_string(2 * even) + ")";
  } else if (!ref.empty()) {
    rc = csc_zeta_reference(s, ref.c_str(), opt.precision, &p);
    what = "zeta(" + ref + ")";
  } else if (zm > 0) {
    rc = csc_z_approx(s, zm, n, opt.precision, &p);
    what = "Z(" + std::to_string(zm) + "," + std::to_string(n) + ")";
  } else if (rk > 0) {
    rc = csc_r_error(s, rk, n, &p);
    what = "R(" + std::to_string(2 * rk) + "," + std::to_string(n) + ")";
  } else if (limit_m > 0) {
    rc = csc_zeta_odd_limit_table(s, limit_m, n_lo, n_hi, opt.precision, &p);
    what = "limit table";
  } else {
    std::cerr << "error: one of --odd/--even/--ref/--zapprox/--rerror/--limit-table required\n";
    return 2;
  }
  OwnedString owned(p);
  if (rc != CSC_OK) return fail_with(s, rc);
  if (opt.format == "json") {
    emit_json(opt, "zeta", owned.get());
    return 0;
  }
  Json doc = Json::parse(owned.get());
  std::string text;
  if (doc.contains("rows")) {
    for (const auto& row : doc["rows"])
      text += "n=" + std::to_string(row["n"].get<int>()) + " value " +
              row["value"].get<std::string>() + " error " + row["error"].get<std::string>() +
              "\n";
  } else if (doc.contains("coeff")) {
    text = what + " = " + doc["coeff"].get<std::string>() + " * pi^" +
           std::to_string(doc["pi_pow"].get<int>());
    if (doc.contains("numeric")) text += " = " + doc["numeric"]["value"].get<std::string>();
    text += "\n";
  } else if (doc.contains("value") && doc["value"].is_object()) {
    text = what + " = " + doc["value"]["value"].get<std::string>() + "\n";
    if (doc.contains("exact"))
      text += "exact: " + doc["exact"]["coeff"].get<std::string>() + " * pi^" +
              std::to_string(doc["exact"]["pi_pow"].get<int>()) + "\n";
    if (doc.contains("error_term"))
      text += "error term: " + doc["error_term"]["coeff"].get<std::string>() + " * pi^" +
              std::to_string(doc["error_term"]["pi_pow"].get<int>()) + "\n";
  } else {
    text = what + " = " + doc["value"].get<std::string>() + "\n";
  }
  write_payload(opt, text);
  return 0;
}

int run_table(csc_session* s, const Options& opt, const std::string& kind, int k, int m,
              int n_lo, int n_hi) {
  OwnedString raw;
  char* p = nullptr;
  std::string fmt = opt.format == "text" ? "csv" : opt.format;
  csc_status rc = csc_emit_table(s, kind.c_str(), k, m, n_lo, n_hi, opt.precision, fmt.c_str(),
                                 &p);
  raw.reset(p);
  if (rc != CSC_OK) return fail_with(s, rc);
  if (fmt == "csv") {
    write_payload(opt, raw.get());
  } else {
    emit_json(opt, "table", raw.get());
  }
  return 0;
}

int run_check_verb(csc_session* s, const Options& opt, const std::string& identity,
                   const std::string& params) {
  OwnedString raw;
  char* p = nullptr;
  csc_status rc = csc_check(s, identity.c_str(), params.c_str(), opt.precision, &p);
  raw.reset(p);
  if (rc != CSC_OK) return fail_with(s, rc);
  if (opt.format == "json") {
    emit_json(opt, "check", raw.get());
    Json doc = Json::parse(raw.get());
    return doc["status"].get<std::string>() == "FAIL" ? 1 : 0;
  }
  Json doc = Json::parse(raw.get());
  std::string text = doc["status"].get<std::string>() + " " +
                     doc["identity"].get<std::string>();
  if (!doc["residual"].is_null()) text += " residual " + doc["residual"].get<std::string>();
  write_payload(opt, text + "\n");
  return doc["status"].get<std::string>() == "FAIL" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cosecant power sums, transfer matrices and zeta approximations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_file, "write the payload to a file instead of stdout");
  app.add_option("--precision", opt.precision, "working precision in bits")
      ->capture_default_str();

  int s_exp = 3, n = 4, m = 1, k = 1;
  auto* sum_cmd = app.add_subcommand("sum", "S(s,n) numerically plus its exact form");
  sum_cmd->fallthrough();
  sum_cmd->add_option("--s", s_exp, "exponent")->required();
  sum_cmd->add_option("--n", n, "dyadic level")->required();

  bool half_basis = false;
  auto* row_cmd = app.add_subcommand("row", "exact expansion row");
  row_cmd->fallthrough();
  row_cmd->add_option("--m", m, "power index (power 2m+1, or 2m+2 with --even-power)")
      ->required();
  row_cmd->add_option("--n", n, "dyadic level")->required();
  row_cmd->add_flag("--even-power", half_basis, "half-sine row for power 2m+2");

  auto* matrix_cmd = app.add_subcommand("matrix", "full transfer matrix for power 2m+1");
  matrix_cmd->fallthrough();
  matrix_cmd->add_option("--m", m, "power index")->required();
  matrix_cmd->add_option("--n", n, "dyadic level")->required();

  std::string suite = "all";
  int max_m = 10, max_n = 8;
  auto* verify_cmd = app.add_subcommand("verify", "run verification sweeps");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--suite", suite, "all | identities | trig")->capture_default_str();
  verify_cmd->add_option("--max-m", max_m, "order cap")->capture_default_str();
  verify_cmd->add_option("--max-n", max_n, "level cap")->capture_default_str();

  std::string identity, params = "{}";
  auto* check_cmd = app.add_subcommand("check", "run one verification instance");
  check_cmd->fallthrough();
  check_cmd->add_option("identity", identity, "identity tag, e.g. REFLECTION")->required();
  check_cmd->add_option("--params", params, "JSON object of integer parameters")
      ->capture_default_str();

  int odd = 0, even = 0, zm = 0, rk = 0, limit_m = 0, n_lo = 4, n_hi = 10;
  std::string ref, tol, method;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta values and approximations");
  zeta_cmd->fallthrough();
  zeta_cmd->add_option("--odd", odd, "zeta(s) for odd s >= 3 via the integral form");
  zeta_cmd->add_option("--even", even, "exact zeta(2k), give k");
  zeta_cmd->add_option("--ref", ref, "reference zeta(s), decimal s > 1");
  zeta_cmd->add_option("--zapprox", zm, "prelimit Z(m,n), give m");
  zeta_cmd->add_option("--rerror", rk, "exact error term R(2k,n), give k");
  zeta_cmd->add_option("--limit-table", limit_m, "convergence table for zeta(2m+1), give m");
  zeta_cmd->add_option("--n", n, "dyadic level for --zapprox/--rerror")->capture_default_str();
  zeta_cmd->add_option("--n-lo", n_lo, "table range start")->capture_default_str();
  zeta_cmd->add_option("--n-hi", n_hi, "table range end")->capture_default_str();
  zeta_cmd->add_option("--tol", tol, "quadrature absolute tolerance, e.g. 1e-12");
  zeta_cmd->add_option("--method", method, "quadrature method: simpson | gauss");

  std::string kind;
  auto* table_cmd = app.add_subcommand("table", "emit a table (CSV or JSON)");
  table_cmd->fallthrough();
  table_cmd->add_option("--kind", kind, "even_sums | odd_rows | z_convergence")->required();
  table_cmd->add_option("--k", k, "even exponent index for even_sums")->capture_default_str();
  table_cmd->add_option("--m", m, "power index for odd_rows/z_convergence")
      ->capture_default_str();
  table_cmd->add_option("--n-lo", n_lo, "range start")->capture_default_str();
  table_cmd->add_option("--n-hi", n_hi, "range end")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Session session(csc_session_new());
  auto started = std::chrono::steady_clock::now();
  int rc = 0;
  if (sum_cmd->parsed()) rc = run_sum(session.get(), opt, s_exp, n);
  else if (row_cmd->parsed()) rc = run_row(session.get(), opt, m, n, half_basis);
  else if (matrix_cmd->parsed()) rc = run_matrix(session.get(), opt, m, n);
  else if (verify_cmd->parsed()) rc = run_verify(session.get(), opt, suite, max_m, max_n);
  else if (check_cmd->parsed()) rc = run_check_verb(session.get(), opt, identity, params);
  else if (zeta_cmd->parsed())
    rc = run_zeta(session.get(), opt, odd, even, ref, zm, rk, n, limit_m, n_lo, n_hi, tol,
                  method);
  else if (table_cmd->parsed()) rc = run_table(session.get(), opt, kind, k, m, n_lo, n_hi);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "# elapsed " << elapsed << " ms\n";
  return rc;
}
