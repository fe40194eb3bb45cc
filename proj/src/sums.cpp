// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums/sums.hpp"

#include "cscsums/bernoulli_poly.hpp"
#include "cscsums/combinatorics.hpp"

namespace cscsums {

namespace {

// Angle (a pi / 2^n) at working precision.
BigFloat dyadic_angle(long a, int n, long wp) {
  BigFloat pi = BigFloat::pi(wp);
  return (pi * BigFloat::from(a, wp)).div_2exp(n);
}

BigFloat csc_pow(long a, int n, int s, long wp) {
  BigFloat sn = sin(dyadic_angle(a, n, wp));
  return pow_int(sn, -s);
}

void check_level(int n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "level n must be >= 2");
  if (n > 20) fail(ErrorCode::Range, "level n above direct-evaluation bound 20");
}

bool rel_pass(const BigFloat& lhs, const BigFloat& rhs, long precision) {
  return rel_close(lhs, rhs, 16 - precision);
}

CheckReport trig_report(TrigLemma id, int n, std::map<std::string, long> params, bool pass,
                        const std::string& residual) {
  CheckReport r;
  r.identity = to_string(id);
  r.params = std::move(params);
  r.params["n"] = n;
  r.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
  if (!pass) r.residual = residual;
  return r;
}

}  // namespace

const char* to_string(RowBasis basis) {
  return basis == RowBasis::OddSine ? "ODD_SINE" : "HALF_SINE";
}

const char* to_string(TrigLemma id) {
  switch (id) {
    case TrigLemma::Quotient: return "QUOTIENT";
    case TrigLemma::QuotientCorollary: return "QUOTIENT_COR";
    case TrigLemma::Product: return "PRODUCT";
    case TrigLemma::ProductCorollary: return "PRODUCT_COR";
    case TrigLemma::ColumnSums: return "COLUMN_SUMS";
    default: return "COMMUTE";
  }
}

long row_size(int n) {
  check_level(n);
  return 1L << (n - 2);
}

BigFloat direct_sum(const SumQuery& q, long precision_bits) {
  if (q.s < 1) fail(ErrorCode::InvalidArgument, "exponent s must be >= 1");
  if (precision_bits < 64)
    fail(ErrorCode::PrecisionTooLow, "direct_sum requires precision >= 64 bits");
  const long size = row_size(q.n);
  const long wp = precision_bits + 32;
  BigFloat acc(wp);
  for (long j = 1; j <= size; ++j) acc += csc_pow(2 * j - 1, q.n, q.s, wp);
  return acc.rounded_to(precision_bits);
}

Rational even_sum_exact(int k, int n) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "even exponent index k must be >= 1");
  if (n < 2) fail(ErrorCode::InvalidArgument, "level n must be >= 2");
  auto dyadic = even_sum_dyadic(k);
  Rational total;
  for (int j = 1; j <= k; ++j) total += dyadic[j - 1] * pow2(2L * j * (n - 1));
  Rational alt = even_sum_exact_alt(k, n);
  if (total != alt)
    fail(ErrorCode::Internal, "even closed-form routes disagree at k=" + std::to_string(k) +
                                  " n=" + std::to_string(n));
  return total;
}

Rational even_sum_exact_alt(int k, int n) {
  Rational acc;
  for (int j = 1; j <= k; ++j) {
    Rational term = pow2(2L * j * n) * (pow2(2 * j) - Rational(1)) / pow2(2 * j) *
                    binomial(2 * k, 2 * j) * gen_bernoulli_at(2 * (k - j), 2 * k, Rational(k)) *
                    bernoulli_number(2 * j);
    acc += term;
  }
  acc = acc * pow2(2 * k - 1) / Rational(factorial(2 * k));
  return k % 2 == 1 ? acc : -acc;
}

std::vector<Rational> even_sum_dyadic(int k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "even exponent index k must be >= 1");
  std::vector<Rational> out;
  for (int j = 1; j <= k; ++j) {
    Rational c = pow2(2 * k - 1) * (pow2(2 * j) - Rational(1)) *
                 gen_bernoulli_at(2 * (k - j), 2 * k, Rational(k)) * bernoulli_number(2 * j) /
                 Rational(factorial(2 * (k - j)) * factorial(2 * j));
    out.push_back(k % 2 == 1 ? c : -c);
  }
  return out;
}

Rational zeta_basis_coeff(int k, int j) {
  if (k < 1 || j < 1 || j > k) fail(ErrorCode::InvalidArgument, "need 1 <= j <= k");
  Rational c = pow2(2 * k - 2 * j) * (pow2(2 * j) - Rational(1)) *
               gen_bernoulli_at(2 * (k - j), 2 * k, Rational(k)) /
               Rational(factorial(2 * (k - j)));
  return (j + k) % 2 == 0 ? c : -c;
}

CoefficientRow odd_coeff_row(int m, int n) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "m must be >= 0");
  const long size = row_size(n);
  CoefficientRow row{n, 2 * m + 1, RowBasis::OddSine, {}};
  row.entries.reserve(size);
  if (m == 0) {
    row.entries.assign(size, Rational(1));
    return row;
  }
  const Rational scale = pow2(2L * m * n) / Rational(factorial(2 * m));
  for (long j = 1; j <= size; ++j) {
    const Rational xj = Rational(j) * pow2(-(n - 1));
    Rational acc;
    for (long k = 0; k <= m - 1; ++k)
      acc += pow2(-static_cast<long>(n - 1) * (2 * k + 1)) * binomial(2 * m - 1, 2 * k) *
             gen_bernoulli_at(2 * k, 2 * m, Rational(m)) *
             (pow2(n - 1) * euler_poly_at(2 * m - 2 * k, xj) -
              Rational(m) * euler_poly_at(2 * m - 2 * k - 1, xj));
    acc = acc * scale;
    row.entries.push_back(m % 2 == 0 ? acc : -acc);
  }
  return row;
}

CoefficientRow odd_coeff_row_alt(int m, int n) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "m must be >= 0");
  const long size = row_size(n);
  CoefficientRow row{n, 2 * m + 1, RowBasis::OddSine, {}};
  if (m == 0) {
    row.entries.assign(size, Rational(1));
    return row;
  }
  const Rational inv_fact(Integer(1), factorial(2 * m));
  for (long j = 1; j <= size; ++j) {
    Rational acc = pow2(2 * m) * Rational(j - m) *
                   gen_bernoulli_at(2 * m - 1, 2 * m, Rational(m + j));
    Rational inner;
    for (long k = 0; k <= m - 1; ++k)
      inner += euler_poly_at(2 * m - 2 * k - 1, Rational(0)) *
               pow2(-static_cast<long>(n - 1) * (2 * k + 1)) *
               (binomial(2 * m - 1, 2 * k + 1) *
                    gen_bernoulli_at(2 * k + 1, 2 * m, Rational(m + j)) +
                Rational(j - m) * binomial(2 * m - 1, 2 * k) *
                    gen_bernoulli_at(2 * k, 2 * m, Rational(m + j)));
    acc += pow2(2L * m * n) * inner;
    acc = acc * inv_fact;
    row.entries.push_back(m % 2 == 0 ? acc : -acc);
  }
  return row;
}

CoefficientRow matrix_first_row(int m, int n, bool unscaled) {
  if (m < 0) fail(ErrorCode::InvalidArgument, "m must be >= 0");
  const long size = row_size(n);
  std::vector<Rational> a(size, Rational(1));
  for (int step = 0; step < m; ++step) {
    std::vector<Rational> next(size);
    // prefix[k] = sum_{i<=k} (2i-1) a_i, suffix[k] = sum_{i>k} a_i
    Rational prefix, suffix;
    for (long i = 0; i < size; ++i) suffix += a[i];
    for (long k = 0; k < size; ++k) {
      prefix += Rational(2 * k + 1) * a[k];
      suffix -= a[k];
      next[k] = prefix + Rational(2 * k + 1) * suffix;
      if (!unscaled) next[k] = next[k] / Rational(2);
    }
    a = std::move(next);
  }
  return CoefficientRow{n, 2 * m + 1, RowBasis::OddSine, std::move(a)};
}

TransferMatrix matrix_full(int m, int n) {
  CoefficientRow first = matrix_first_row(m, n);
  const long size = row_size(n);
  const long period = 1L << (n + 1);
  TransferMatrix out{n, 2 * m + 1, {}};
  out.rows.reserve(size);
  for (long j = 1; j <= size; ++j) {
    CoefficientRow row{n, 2 * m + 1, RowBasis::OddSine,
                       std::vector<Rational>(size, Rational(0))};
    const long u = 2 * j - 1;
    for (long k = 1; k <= size; ++k) {
      long a = (u * (2 * k - 1)) % period;
      int sign = 1;
      if (a > (1L << n)) {
        sign = -sign;
        a -= 1L << n;
      }
      if (a > (1L << (n - 1))) a = (1L << n) - a;
      long pos = (a + 1) / 2;  // 1-based
      Rational v = first.entries[k - 1];
      row.entries[pos - 1] += sign > 0 ? v : -v;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

CoefficientRow even_row(int m, int n) {
  CoefficientRow odd = matrix_first_row(m, n);
  const long size = row_size(n);
  CoefficientRow row{n, 2 * m + 2, RowBasis::HalfSine, {}};
  row.entries.reserve(size);
  Rational total;
  for (const auto& v : odd.entries) total += v;
  Rational suffix;  // sum_{i > size-k} of odd entries
  for (long k = 1; k < size; ++k) {
    suffix += odd.entries[size - k];
    row.entries.push_back(suffix);
  }
  row.entries.push_back(total / Rational(2));
  return row;
}

std::vector<std::vector<Rational>> even_matrix(int m, int n) {
  CoefficientRow first = even_row(m, n);
  const long size = row_size(n);
  const long period = 1L << (n + 1);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(size);
  for (long j = 1; j <= size; ++j) {
    std::vector<Rational> row(size, Rational(0));
    const long u = 2 * j - 1;
    const int row_sign = j % 2 == 1 ? 1 : -1;  // (-1)^{j-1}
    for (long k = 1; k <= size; ++k) {
      long a = (u * 2 * k) % period;
      int sign = row_sign;
      if (a > (1L << n)) {
        sign = -sign;
        a -= 1L << n;
      }
      if (a > (1L << (n - 1))) a = (1L << n) - a;
      long pos = a / 2;  // 1-based over the half-sine basis
      Rational v = first.entries[k - 1];
      row[pos - 1] += sign > 0 ? v : -v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CheckReport check_trig_lemma(TrigLemma id, int n, const std::map<std::string, long>& params,
                             long precision_bits) {
  check_level(n);
  if (n > 12) fail(ErrorCode::Range, "trig checks are bounded at n <= 12");
  if (precision_bits < 128 && id != TrigLemma::ColumnSums)
    fail(ErrorCode::PrecisionTooLow, "trig checks require precision >= 128 bits");
  const long size = row_size(n);
  const long wp = precision_bits + 32;
  auto get_param = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end())
      fail(ErrorCode::InvalidArgument, std::string("missing parameter '") + name + "'");
    return it->second;
  };
  auto sin_at = [&](long a) { return sin(dyadic_angle(a, n, wp)); };

  switch (id) {
    case TrigLemma::Quotient: {
      long j = get_param("j");
      if (j < 1 || j > size) fail(ErrorCode::Range, "j out of range");
      BigFloat lhs = sin_at(2 * j - 1) / pow_int(sin_at(1), 2);
      BigFloat rhs(wp);
      for (long i = 1; i <= (1L << (n - 1)); ++i)
        rhs += BigFloat::from(i, wp) * sin_at(2 * j - ((1L << n) - 2 * i + 1));
      for (long i = 1; i <= (1L << (n - 1)) - 1; ++i)
        rhs += BigFloat::from(i, wp) * sin_at(2 * j + ((1L << n) - 2 * i - 1));
      return trig_report(id, n, {{"j", j}}, rel_pass(lhs, rhs, precision_bits),
                         (lhs - rhs).to_decimal(8));
    }
    case TrigLemma::Product: {
      long j = get_param("j");
      if (j < 1 || j > size) fail(ErrorCode::Range, "j out of range");
      BigFloat lhs = sin_at(2 * j - 1) * pow_int(sin_at(1), 2);
      BigFloat rhs = (-sin_at(2 * j - 3) + sin_at(2 * j - 1) + sin_at(2 * j - 1) -
                      sin_at(2 * j + 1))
                         .div_2exp(2);
      // absolute comparison: both sides are O(2^{-2n}) small
      BigFloat tol = BigFloat::two_pow(16 - precision_bits, wp);
      bool pass = abs(lhs - rhs) <= tol;
      return trig_report(id, n, {{"j", j}}, pass, (lhs - rhs).to_decimal(8));
    }
    case TrigLemma::QuotientCorollary:
    case TrigLemma::ProductCorollary: {
      long vec = get_param("vector");
      std::vector<Rational> a(size);
      for (long i = 0; i < size; ++i) a[i] = vec == 0 ? Rational(1) : Rational(i + 1);
      BigFloat lhs(wp), rhs(wp);
      if (id == TrigLemma::QuotientCorollary) {
        for (long j = 1; j <= size; ++j)
          lhs += BigFloat::from(a[j - 1], wp) * sin_at(2 * j - 1);
        lhs = lhs / pow_int(sin_at(1), 2);
        for (long j = 1; j <= size; ++j) {
          Rational c;
          for (long i = 1; i <= j; ++i) c += Rational(2 * (2 * i - 1)) * a[i - 1];
          for (long i = j + 1; i <= size; ++i) c += Rational(2 * (2 * j - 1)) * a[i - 1];
          rhs += BigFloat::from(c, wp) * sin_at(2 * j - 1);
        }
      } else {
        for (long j = 1; j <= size; ++j)
          lhs += BigFloat::from(a[j - 1], wp) * sin_at(2 * j - 1);
        lhs = lhs * pow_int(sin_at(1), 2);
        // boundary extension a_0 = -a_1, a_{size+1} = a_{size}
        auto at = [&](long i) {
          if (i == 0) return -a[0];
          if (i == size + 1) return a[size - 1];
          return a[i - 1];
        };
        for (long j = 1; j <= size; ++j) {
          Rational c = -at(j - 1) + Rational(2) * at(j) - at(j + 1);
          rhs += BigFloat::from(c, wp) * sin_at(2 * j - 1);
        }
        rhs = rhs.div_2exp(2);
      }
      return trig_report(id, n, {{"vector", vec}}, rel_pass(lhs, rhs, precision_bits),
                         (lhs - rhs).to_decimal(8));
    }
    case TrigLemma::ColumnSums: {
      long m = get_param("m");
      if (m < 0 || m > 8) fail(ErrorCode::Range, "m out of range");
      auto mat = even_matrix(static_cast<int>(m), n);
      Rational residual;
      for (long col = 0; col < size - 1; ++col) {
        Rational s;
        for (long r = 0; r < size; ++r) s += mat[r][col];
        residual += s.abs();
      }
      Rational last;
      for (long r = 0; r < size; ++r) last += mat[r][size - 1];
      residual += (last - Rational(size) * mat[0][size - 1]).abs();
      return trig_report(id, n, {{"m", m}}, residual.is_zero(), residual.to_string());
    }
    case TrigLemma::Commute: {
      long m = get_param("m");
      if (m < 0 || m > 8) fail(ErrorCode::Range, "m out of range");
      BigFloat lhs = direct_sum({static_cast<int>(2 * m + 1), n}, wp);
      CoefficientRow row = matrix_first_row(static_cast<int>(m), n);
      BigFloat rhs(wp);
      for (long j = 1; j <= size; ++j)
        rhs += BigFloat::from(row.entries[j - 1], wp) / sin_at(2 * j - 1);
      rhs = rhs * BigFloat::two_pow(2 * m, wp);
      return trig_report(id, n, {{"m", m}}, rel_pass(lhs, rhs, precision_bits),
                         (lhs - rhs).to_decimal(8));
    }
  }
  fail(ErrorCode::Internal, "unreachable trig lemma");
}

std::vector<CheckReport> run_trig_suite(int max_m, int max_n, long precision_bits) {
  std::vector<CheckReport> out;
  const int n_hi = std::min(max_n, 12);
  for (int n = 2; n <= n_hi; ++n) {
    const long size = row_size(n);
    std::vector<long> js;
    if (n <= 6) {
      for (long j = 1; j <= size; ++j) js.push_back(j);
    } else {
      js = {1, 2, size - 1, size};
    }
    for (long j : js) {
      out.push_back(check_trig_lemma(TrigLemma::Quotient, n, {{"j", j}}, precision_bits));
      out.push_back(check_trig_lemma(TrigLemma::Product, n, {{"j", j}}, precision_bits));
    }
    for (long vec : {0L, 1L}) {
      out.push_back(
          check_trig_lemma(TrigLemma::QuotientCorollary, n, {{"vector", vec}}, precision_bits));
      out.push_back(
          check_trig_lemma(TrigLemma::ProductCorollary, n, {{"vector", vec}}, precision_bits));
    }
    for (long m = 0; m <= std::min(max_m, 4); ++m) {
      if (n <= 6)
        out.push_back(check_trig_lemma(TrigLemma::ColumnSums, n, {{"m", m}}, precision_bits));
      out.push_back(check_trig_lemma(TrigLemma::Commute, n, {{"m", m}}, precision_bits));
    }
  }
  return out;
}

}  // namespace cscsums
