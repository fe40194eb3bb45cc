// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "cscsums/errors.hpp"

namespace cscsums {

using Integer = mpz_class;

// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1. Backed by GMP; this wrapper pins the canonical-form invariant
// and the "p/q" text format (sign on the numerator only).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}  // NOLINT
  Rational(Integer num, Integer den) {
    if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  // Parses "p/q" or "p".
  static Rational parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      fail(ErrorCode::InvalidArgument, "unparseable rational: '" + text + "'");
    if (q.get_den() == 0)
      fail(ErrorCode::InvalidArgument, "zero denominator: '" + text + "'");
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::InvalidArgument, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  // Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) fail(ErrorCode::InvalidArgument, "0 raised to a negative power");
      return Rational(0);
    }
    mpq_class base = e < 0 ? mpq_class(1) / v_ : v_;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), mpq_numref(base.get_mpq_t()), n);
    mpz_pow_ui(den.get_mpz_t(), mpq_denref(base.get_mpq_t()), n);
    return Rational(std::move(num), std::move(den));
  }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

// 2^e as an exact rational, e may be negative.
inline Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace cscsums
