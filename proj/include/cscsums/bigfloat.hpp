// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "cscsums/rational.hpp"

namespace cscsums {

// Binary floating value at caller-chosen precision, RAII over MPFR.
// Every operation rounds to nearest at the precision of its result, which is
// the maximum of the operand precisions. sin/cos/csc are correctly rounded
// by the backend, so a k-operation composition stays within 2^{3-precision}
// relative error for the compositions used here.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 256) {
    mpfr_init2(v_, check_prec(precision_bits));
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat pi(long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static BigFloat from(const Rational& q, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }
  static BigFloat from(long n, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }
  // Parses a decimal string such as "1e-12" or "3.25".
  static BigFloat parse(const std::string& text, long precision_bits) {
    BigFloat r(precision_bits);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
      fail(ErrorCode::InvalidArgument, "unparseable number: '" + text + "'");
    return r;
  }
  // 2^e, exact.
  static BigFloat two_pow(long e, long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  long precision() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend BigFloat sin(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sin(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow_int(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  // a^b for real b.
  friend BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  // a / 2^e, exact.
  BigFloat div_2exp(long e) const {
    BigFloat r(precision());
    mpfr_div_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }
  BigFloat rounded_to(long precision_bits) const {
    BigFloat r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  // Decimal string "d.dddd...e±x"; digit count defaults to the full decimal
  // resolution of the precision. Deterministic for a given value/precision.
  std::string to_decimal(size_t digits = 0) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  static long check_prec(long bits) {
    if (bits < 2) fail(ErrorCode::InvalidArgument, "precision below 2 bits");
    return bits;
  }
  mpfr_t v_;
};

// |a - b| <= |b| * 2^{tol_exp}; b must be nonzero unless a is zero too.
bool rel_close(const BigFloat& a, const BigFloat& b, long tol_exp);

}  // namespace cscsums
