// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <optional>
#include <vector>

#include "cscsums/rational.hpp"

namespace cscsums {

// Power series in t truncated after t^N, exact Rational coefficients.
// All arithmetic is exact through the common order; operations on series of
// different orders truncate to the shorter one.
class TruncatedSeries {
 public:
  TruncatedSeries() : c_(1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
  }
  static TruncatedSeries zero(unsigned order) {
    return TruncatedSeries(std::vector<Rational>(order + 1));
  }
  static TruncatedSeries one(unsigned order) {
    auto s = zero(order);
    s.c_[0] = 1;
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const Rational& coeff(unsigned i) const { return c_[i]; }
  Rational& coeff(unsigned i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncatedSeries truncated(unsigned order) const {
    std::vector<Rational> c(c_.begin(), c_.begin() + std::min<size_t>(order + 1, c_.size()));
    c.resize(order + 1);
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[i] = a.c_[i] + b.c_[i];
    return TruncatedSeries(std::move(c));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (unsigned i = 0; i <= n; ++i) c[i] = a.c_[i] - b.c_[i];
    return TruncatedSeries(std::move(c));
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    unsigned n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (unsigned i = 0; i <= n; ++i)
      for (unsigned j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    return TruncatedSeries(std::move(c));
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

  TruncatedSeries pow(unsigned e) const;

  // Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;

  // this / b through the common order; b must be a unit.
  TruncatedSeries divided_by(const TruncatedSeries& b) const {
    unsigned n = std::min(order(), b.order());
    return truncated(n) * b.truncated(n).inverse();
  }

 private:
  std::vector<Rational> c_;
};

enum class KernelKind {
  BernoulliKernel,  // t/(e^t - 1)
  EulerKernel,      // 2/(e^t + 1)
  Exp,              // e^{xt} for a fixed Rational x
};

// Generating-function kernels through t^order. Exp requires the x argument.
TruncatedSeries series_kernel(KernelKind kind, unsigned order,
                              const std::optional<Rational>& x = std::nullopt);

// Auxiliary exact series used by the verification suite.
TruncatedSeries sin_series(unsigned order);
TruncatedSeries cos_series(unsigned order);
TruncatedSeries tan_series(unsigned order);         // sin/cos by series division
TruncatedSeries t_over_sinh_series(unsigned order);  // t/sinh(t)

}  // namespace cscsums
