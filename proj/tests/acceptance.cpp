// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
//
// Acceptance gate: every criterion below runs at its pinned tolerance and
// prints one PASS/FAIL line. The binary exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cscsums/bernoulli_poly.hpp"
#include "cscsums/identities.hpp"
#include "cscsums/sums.hpp"
#include "cscsums/zeta.hpp"

using namespace cscsums;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool golden_even_sums(std::string& detail) {
  auto start = Clock::now();
  const std::vector<std::vector<Rational>> golden = {
      {Rational(1, 2)},
      {Rational(1, 3), Rational(1, 6)},
      {Rational(4, 15), Rational(1, 6), Rational(1, 15)},
      {Rational(8, 35), Rational(7, 45), Rational(4, 45), Rational(17, 630)}};
  for (int k = 1; k <= 4; ++k) {
    if (even_sum_dyadic(k) != golden[k - 1]) {
      detail = "dyadic coefficients differ at k=" + std::to_string(k);
      return false;
    }
    for (int n = 2; n <= 10; ++n) {
      Rational expected;
      for (int j = 1; j <= k; ++j) expected += golden[k - 1][j - 1] * pow2(2L * j * (n - 1));
      if (even_sum_exact(k, n) != expected) {
        detail = "closed form differs at k=" + std::to_string(k) + " n=" + std::to_string(n);
        return false;
      }
    }
  }
  double elapsed = ms_since(start);
  if (elapsed >= 1000.0) {
    detail = "took " + std::to_string(elapsed) + " ms (budget 1000)";
    return false;
  }
  return true;
}

bool oracle_agreement(std::string& detail) {
  auto start = Clock::now();
  const long prec = 256;
  const long wp = prec + 32;
  BigFloat pi = BigFloat::pi(wp);
  for (int s = 2; s <= 13; ++s)
    for (int n = 2; n <= 10; ++n) {
      BigFloat oracle = direct_sum({s, n}, prec);
      BigFloat closed(wp);
      if (s % 2 == 0) {
        closed = BigFloat::from(even_sum_exact(s / 2, n), wp);
      } else {
        CoefficientRow row = odd_coeff_row((s - 1) / 2, n);
        for (long j = 1; j <= row_size(n); ++j) {
          BigFloat angle = (pi * BigFloat::from(2 * j - 1, wp)).div_2exp(n);
          closed += BigFloat::from(row.entries[j - 1], wp) / sin(angle);
        }
      }
      if (!rel_close(closed, oracle, -200)) {
        detail = "mismatch at s=" + std::to_string(s) + " n=" + std::to_string(n);
        return false;
      }
    }
  double elapsed = ms_since(start);
  if (elapsed >= 30000.0) {
    detail = "took " + std::to_string(elapsed) + " ms (budget 30000)";
    return false;
  }
  return true;
}

bool displayed_matrices(std::string& detail) {
  const std::vector<std::vector<long>> expected = {
      {2, 5, 7, 8}, {7, 2, -8, 5}, {5, 8, 2, -7}, {-8, 7, -5, 2}};
  TransferMatrix m = matrix_full(1, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (m.rows[r].entries[c] != Rational(expected[r][c])) {
        detail = "matrix entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                 ") = " + m.rows[r].entries[c].to_string();
        return false;
      }
  const std::vector<long> even_expected{8, 15, 20, 11};
  CoefficientRow er = even_row(1, 4);
  for (int c = 0; c < 4; ++c)
    if (er.entries[c] != Rational(even_expected[c])) {
      detail = "even row entry " + std::to_string(c + 1) + " = " + er.entries[c].to_string();
      return false;
    }
  return true;
}

bool zeta_decomposition(std::string& detail) {
  for (int k = 1; k <= 6; ++k)
    for (int n = 2; n <= 10; ++n)
      if (!(z_even_exact(k, n) == zeta_even_exact(k) + R_error(k, n))) {
        detail = "decomposition fails at k=" + std::to_string(k) + " n=" + std::to_string(n);
        return false;
      }
  for (int n = 2; n <= 10; ++n)
    if (z_even_exact(1, n).coeff != Rational(1, 6)) {
      detail = "Z(2,n) coefficient differs at n=" + std::to_string(n);
      return false;
    }
  return true;
}

bool zeta_coefficient_table(std::string& detail) {
  const std::vector<std::vector<Rational>> table = {
      {Rational(3)},
      {Rational(2), Rational(15)},
      {Rational(8, 5), Rational(15), Rational(63)},
      {Rational(48, 35), Rational(14), Rational(84), Rational(255)},
      {Rational(128, 105), Rational(820, 63), Rational(91), Rational(425), Rational(1023)},
      {Rational(256, 231), Rational(3832, 315), Rational(278, 3), Rational(527), Rational(2046),
       Rational(4095)}};
  for (int k = 1; k <= 6; ++k)
    for (int j = 1; j <= k; ++j)
      if (zeta_basis_coeff(k, j) != table[k - 1][j - 1]) {
        detail = "coefficient differs at k=" + std::to_string(k) + " j=" + std::to_string(j) +
                 ": " + zeta_basis_coeff(k, j).to_string();
        return false;
      }
  return true;
}

bool integral_representation(std::string& detail) {
  for (int j = 1; j <= 3; ++j) {
    auto start = Clock::now();
    BigFloat value = zeta_odd_integral(j);  // default config
    BigFloat ref = zeta_reference(BigFloat::from(2 * j + 1, 320), 256);
    double elapsed = ms_since(start);
    if (!(abs(value - ref) <= BigFloat::parse("1e-10", 320))) {
      detail = "j=" + std::to_string(j) + " differs from the reference by " +
               abs(value - ref).to_decimal(5);
      return false;
    }
    if (elapsed >= 10000.0) {
      detail = "j=" + std::to_string(j) + " took " + std::to_string(elapsed) +
               " ms (budget 10000)";
      return false;
    }
  }
  return true;
}

bool identity_suite_clean(std::string& detail) {
  auto start = Clock::now();
  auto reports = run_identity_suite(10, 8);
  auto trig = run_trig_suite(4, 8, 256);
  reports.insert(reports.end(), trig.begin(), trig.end());
  int fails = 0, skipped = 0;
  bool alpha_lower_normalized = true, euler_explicit_both = true;
  std::map<std::string, int> passes;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::Fail) {
      ++fails;
      if (detail.empty()) detail = "first failure: " + r.identity + " " + r.residual;
    } else if (r.status == CheckStatus::Skipped) {
      ++skipped;
      if (r.identity != "MIDDLETERM" || r.params.at("m") != 1) {
        detail = "unexpected skip: " + r.identity;
        return false;
      }
    } else {
      ++passes[r.identity];
    }
    if (r.identity == "ALPHA_LOWER")
      alpha_lower_normalized =
          alpha_lower_normalized && r.params.at("holds_normalized") == 1;
    if (r.identity == "EULER_EXPLICIT")
      euler_explicit_both = euler_explicit_both && r.params.at("holds_direct") == 1 &&
                            r.params.at("holds_truncated") == 1;
  }
  if (fails > 0) return false;
  for (int i = 0; i <= static_cast<int>(IdentityId::BridgeEvenOdd); ++i)
    if (passes[to_string(static_cast<IdentityId>(i))] == 0) {
      detail = std::string("no passing instance for ") + to_string(static_cast<IdentityId>(i));
      return false;
    }
  double elapsed = ms_since(start);
  if (elapsed >= 120000.0) {
    detail = "took " + std::to_string(elapsed) + " ms (budget 120000)";
    return false;
  }
  std::printf("      ALPHA_LOWER holds with the (n-k)!/n! normalization: %s\n",
              alpha_lower_normalized ? "yes" : "no");
  std::printf("      EULER_EXPLICIT holds in both inner-limit readings: %s\n",
              euler_explicit_both ? "yes" : "no");
  std::printf("      skipped (degenerate lowered instances at m=1): %d\n", skipped);
  return alpha_lower_normalized && euler_explicit_both;
}

bool convergence_property(std::string& detail) {
  auto rows = zeta_odd_limit_table(1, 4, 12, 256);
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (!(abs(rows[i + 1].error) < abs(rows[i].error))) {
      detail = "error not strictly decreasing at n=" + std::to_string(rows[i + 1].n);
      return false;
    }
  // successive ratios within 15% of 1/4 from n = 8 on
  BigFloat lo = BigFloat::parse("0.2125", 256), hi = BigFloat::parse("0.2875", 256);
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].n < 8) continue;
    BigFloat ratio = abs(rows[i + 1].error) / abs(rows[i].error);
    if (!(lo <= ratio && ratio <= hi)) {
      detail = "ratio at n=" + std::to_string(rows[i].n) + " is " + ratio.to_decimal(6);
      return false;
    }
  }
  return true;
}

bool closed_form_speed(std::string& detail) {
  auto start = Clock::now();
  Rational v = even_sum_exact(3, 1000);
  double elapsed = ms_since(start);
  Rational expected = (Rational(2) * pow2(6 * 999) + Rational(5) * pow2(4 * 999) +
                       Rational(8) * pow2(2 * 999)) /
                      Rational(30);
  if (v != expected) {
    detail = "closed form differs from the golden display";
    return false;
  }
  if (elapsed >= 100.0) {
    detail = "took " + std::to_string(elapsed) + " ms (budget 100)";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden even closed forms S(2..8,n), exact in 2^n for n=2..10, under 1 s",
       golden_even_sums},
      {"closed forms match direct summation to 2^-200 for s=2..13, n=2..10, under 30 s",
       oracle_agreement},
      {"displayed 4x4 transfer matrix and even row (8,15,20,11) reproduced exactly",
       displayed_matrices},
      {"Z(2k,n) = zeta(2k) + R(2k,n) exactly for k<=6, n<=10; Z(2,n) coefficient 1/6",
       zeta_decomposition},
      {"zeta-basis coefficient table (3, 15, 63, 255, 84, ...) exact for k<=6",
       zeta_coefficient_table},
      {"integral representation matches the reference to 1e-10 for zeta(3),zeta(5),zeta(7)",
       integral_representation},
      {"identity suite passes over documented ranges; suspected variants reported",
       identity_suite_clean},
      {"prelimit errors for zeta(3) strictly decrease, ratios near 1/4 from n=8",
       convergence_property},
      {"S(6,1000) by closed form in under 100 ms", closed_form_speed},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = ms_since(start);
    std::printf("[%zu/%zu] %s: %s (%.0f ms)%s%s\n", i + 1, criteria.size(),
                ok ? "PASS" : "FAIL", criteria[i].name, elapsed, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
