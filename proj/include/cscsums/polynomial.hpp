// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <string>
#include <vector>

#include "cscsums/rational.hpp"

namespace cscsums {

// Dense univariate polynomial over Rational, coefficients ascending in x.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  static Polynomial monomial(unsigned power, const Rational& coeff = Rational(1)) {
    std::vector<Rational> c(power + 1);
    c[power] = coeff;
    return Polynomial(std::move(c));
  }
  // x itself.
  static Polynomial variable() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(d));
  }

  // p(a*x + b), exact.
  Polynomial compose_linear(const Rational& a, const Rational& b) const {
    Polynomial result, arg({b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      result = result * arg + Polynomial::constant(*it);
    return result;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    for (auto& v : a.c_) v *= s;
    a.trim();
    return a;
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division; divisor must be nonzero. Returns {quotient, remainder}.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

  // Readable rendering, highest power first: "x^2 - 3x + 2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& v = c_[i];
      if (v.is_zero()) continue;
      bool first = out.empty();
      if (!first) out += v.sign() < 0 ? " - " : " + ";
      else if (v.sign() < 0) out += "-";
      Rational a = v.abs();
      bool unit = a == Rational(1);
      if (!unit || i == 0) out += a.to_string();
      if (i > 0) {
        if (!unit) out += "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot;
  const int dd = divisor.degree();
  const Rational lead = divisor.c_.back();
  if (static_cast<int>(rem.size()) - 1 >= dd) quot.assign(rem.size() - dd, Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] / lead;
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

}  // namespace cscsums
