// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums/combinatorics.hpp"

#include "cscsums/bernoulli_poly.hpp"

namespace cscsums {

namespace {

Integer binomial_int(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// B(m) by the double sum, 0^0 = 1.
Rational bernoulli_double_sum(unsigned m) {
  Rational total;
  for (unsigned k = 0; k <= m; ++k) {
    Rational inner;
    for (unsigned j = 0; j <= k; ++j) {
      Integer jp;
      if (j == 0)
        jp = (m == 0) ? 1 : 0;
      else
        mpz_ui_pow_ui(jp.get_mpz_t(), j, m);
      Rational term(binomial_int(k, j) * jp);
      inner += (j % 2 == 0) ? term : -term;
    }
    total += inner / Rational(k + 1);
  }
  return total;
}

}  // namespace

void CombinatorialTable::ensure(unsigned n) const {
  if (n < values_.size()) return;
  for (unsigned i = values_.size(); i <= n; ++i) {
    std::vector<Rational> row;
    switch (kind_) {
      case TableKind::Binomial:
        row.resize(i + 1);
        for (unsigned k = 0; k <= i; ++k) row[k] = Rational(binomial_int(i, k));
        break;
      case TableKind::StirlingFirstSigned:
        // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
        row.assign(i + 1, Rational(0));
        if (i == 0) {
          row[0] = 1;
        } else {
          const auto& prev = values_[i - 1];
          for (unsigned k = 1; k <= i; ++k) {
            Rational v = prev[k - 1];
            if (k < i) v -= Rational(static_cast<long>(i - 1)) * prev[k];
            row[k] = v;
          }
        }
        break;
      case TableKind::StirlingSecond:
        // S(n,k) = k S(n-1,k) + S(n-1,k-1)
        row.assign(i + 1, Rational(0));
        if (i == 0) {
          row[0] = 1;
        } else {
          const auto& prev = values_[i - 1];
          for (unsigned k = 1; k <= i; ++k) {
            Rational v = prev[k - 1];
            if (k < i) v += Rational(static_cast<long>(k)) * prev[k];
            row[k] = v;
          }
        }
        break;
      case TableKind::Bernoulli: {
        Rational direct = bernoulli_double_sum(i);
        // Independent route: sum_{j<n+1} C(n+1,j) B(j) = 0 for n+1 >= 2.
        Rational recur;
        if (i == 0) {
          recur = 1;
        } else {
          Rational acc;
          for (unsigned j = 0; j < i; ++j)
            acc += Rational(binomial_int(i + 1, j)) * values_[j][0];
          recur = -acc / Rational(binomial_int(i + 1, i));
        }
        if (direct != recur)
          fail(ErrorCode::Internal, "Bernoulli double sum and recurrence disagree at m=" +
                                        std::to_string(i));
        row.push_back(direct);
        break;
      }
      case TableKind::EulerNumber: {
        Rational e = (i % 2 == 1)
                         ? Rational(0)
                         : pow2(static_cast<long>(i)) * euler_poly_at(i, Rational(1, 2));
        row.push_back(e);
        break;
      }
    }
    values_.push_back(std::move(row));
  }
}

Rational CombinatorialTable::at(unsigned n, unsigned k) const {
  std::lock_guard<std::mutex> lock(mu_);
  ensure(n);
  switch (kind_) {
    case TableKind::Bernoulli:
    case TableKind::EulerNumber:
      return values_[n][0];
    default:
      return k < values_[n].size() ? values_[n][k] : Rational(0);
  }
}

unsigned CombinatorialTable::max_index() const {
  std::lock_guard<std::mutex> lock(mu_);
  return values_.empty() ? 0 : static_cast<unsigned>(values_.size() - 1);
}

namespace {
CombinatorialTable& table(TableKind kind) {
  static CombinatorialTable binom(TableKind::Binomial);
  static CombinatorialTable s1(TableKind::StirlingFirstSigned);
  static CombinatorialTable s2(TableKind::StirlingSecond);
  static CombinatorialTable bern(TableKind::Bernoulli);
  static CombinatorialTable euler(TableKind::EulerNumber);
  switch (kind) {
    case TableKind::Binomial: return binom;
    case TableKind::StirlingFirstSigned: return s1;
    case TableKind::StirlingSecond: return s2;
    case TableKind::Bernoulli: return bern;
    default: return euler;
  }
}
}  // namespace

Rational binomial(long n, long k) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "binomial requires n >= 0");
  if (k < 0 || k > n) return Rational(0);
  return table(TableKind::Binomial).at(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

Rational stirling_first_signed(unsigned n, unsigned k) {
  return table(TableKind::StirlingFirstSigned).at(n, k);
}

Rational stirling_second(unsigned n, unsigned k) {
  return table(TableKind::StirlingSecond).at(n, k);
}

Rational bernoulli_number(unsigned m) { return table(TableKind::Bernoulli).at(m); }

Rational euler_number(unsigned k) { return table(TableKind::EulerNumber).at(k); }

}  // namespace cscsums
