// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include "cscsums/polynomial.hpp"

namespace cscsums {

// x^shift * p(x) with p(0) != 0 unless the whole value is zero. Supports the
// negative powers of x that arise in the verification suite; comparisons
// align shifts so equality never needs negative-power arithmetic.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Polynomial p, long shift) : p_(std::move(p)), shift_(shift) {
    normalize();
  }
  static LaurentPolynomial from(const Polynomial& p) { return LaurentPolynomial(p, 0); }
  // coeff * x^power for any integer power.
  static LaurentPolynomial monomial(long power, const Rational& coeff) {
    return LaurentPolynomial(Polynomial::constant(coeff), power);
  }

  bool is_zero() const { return p_.is_zero(); }
  long min_power() const { return shift_; }
  long max_power() const { return shift_ + p_.degree(); }
  const Polynomial& mantissa() const { return p_; }
  long shift() const { return shift_; }

  // Coefficient of x^power.
  Rational coeff(long power) const {
    long i = power - shift_;
    if (is_zero() || i < 0 || i > p_.degree()) return Rational(0);
    return p_.coeff(static_cast<unsigned>(i));
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long s = std::min(a.shift_, b.shift_);
    return LaurentPolynomial(a.raised(a.shift_ - s) + b.raised(b.shift_ - s), s);
  }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a + (b * Rational(-1));
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return LaurentPolynomial(a.p_ * b.p_, a.shift_ + b.shift_);
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const Rational& s) {
    return LaurentPolynomial(a.p_ * s, a.shift_);
  }
  // Multiply by x^k (k may be negative).
  LaurentPolynomial shifted(long k) const { return LaurentPolynomial(p_, shift_ + k); }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.shift_ == b.shift_ && a.p_ == b.p_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    if (shift_ == 0) return p_.to_string();
    return "x^(" + std::to_string(shift_) + ") * (" + p_.to_string() + ")";
  }

 private:
  Polynomial raised(long k) const {  // p * x^k, k >= 0
    return p_ * Polynomial::monomial(static_cast<unsigned>(k));
  }
  void normalize() {
    if (p_.is_zero()) {
      shift_ = 0;
      return;
    }
    unsigned low = 0;
    while (p_.coeff(low).is_zero()) ++low;
    if (low > 0) {
      std::vector<Rational> c(p_.coeffs().begin() + low, p_.coeffs().end());
      p_ = Polynomial(std::move(c));
      shift_ += low;
    }
  }
  Polynomial p_;
  long shift_ = 0;
};

}  // namespace cscsums
