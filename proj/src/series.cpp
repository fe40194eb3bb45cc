// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums/series.hpp"

namespace cscsums {

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries result = one(order());
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_[0].is_zero())
    fail(ErrorCode::InvalidArgument, "series inverse requires a unit constant term");
  std::vector<Rational> b(c_.size());
  b[0] = Rational(1) / c_[0];
  for (size_t n = 1; n < c_.size(); ++n) {
    Rational acc;
    for (size_t i = 1; i <= n; ++i) acc += c_[i] * b[n - i];
    b[n] = -b[0] * acc;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries series_kernel(KernelKind kind, unsigned order,
                              const std::optional<Rational>& x) {
  std::vector<Rational> c(order + 1);
  switch (kind) {
    case KernelKind::BernoulliKernel: {
      // invert (e^t - 1)/t = sum t^i/(i+1)!
      for (unsigned i = 0; i <= order; ++i) c[i] = Rational(Integer(1), factorial(i + 1));
      return TruncatedSeries(std::move(c)).inverse();
    }
    case KernelKind::EulerKernel: {
      // invert (e^t + 1)/2
      c[0] = 1;
      for (unsigned i = 1; i <= order; ++i) c[i] = Rational(Integer(1), 2 * factorial(i));
      return TruncatedSeries(std::move(c)).inverse();
    }
    case KernelKind::Exp: {
      if (!x) fail(ErrorCode::InvalidArgument, "Exp kernel requires the x argument");
      Rational p(1);
      for (unsigned i = 0; i <= order; ++i) {
        c[i] = p / Rational(factorial(i));
        p *= *x;
      }
      return TruncatedSeries(std::move(c));
    }
  }
  fail(ErrorCode::Internal, "unreachable kernel kind");
}

TruncatedSeries sin_series(unsigned order) {
  std::vector<Rational> c(order + 1);
  for (unsigned i = 1; i <= order; i += 2) {
    c[i] = Rational(Integer(1), factorial(i));
    if (((i - 1) / 2) % 2 == 1) c[i] = -c[i];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries cos_series(unsigned order) {
  std::vector<Rational> c(order + 1);
  for (unsigned i = 0; i <= order; i += 2) {
    c[i] = Rational(Integer(1), factorial(i));
    if ((i / 2) % 2 == 1) c[i] = -c[i];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries tan_series(unsigned order) {
  return sin_series(order).divided_by(cos_series(order));
}

TruncatedSeries t_over_sinh_series(unsigned order) {
  // invert sinh(t)/t = sum t^{2i}/(2i+1)!
  std::vector<Rational> c(order + 1);
  for (unsigned i = 0; i <= order; i += 2) c[i] = Rational(Integer(1), factorial(i + 1));
  return TruncatedSeries(std::move(c)).inverse();
}

}  // namespace cscsums
