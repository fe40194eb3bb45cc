// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <string>
#include <vector>

#include "cscsums/bigfloat.hpp"
#include "cscsums/rational.hpp"

namespace cscsums {

// coefficient * pi^{pi_power}, the exact currency for even zeta values.
struct PiMultiple {
  Rational coeff;
  unsigned pi_power = 0;

  friend bool operator==(const PiMultiple& a, const PiMultiple& b) {
    return a.pi_power == b.pi_power && a.coeff == b.coeff;
  }
  // Addition only between equal pi powers.
  friend PiMultiple operator+(const PiMultiple& a, const PiMultiple& b) {
    if (a.pi_power != b.pi_power)
      fail(ErrorCode::InvalidArgument, "pi-power mismatch in addition");
    return {a.coeff + b.coeff, a.pi_power};
  }
  friend PiMultiple operator*(const PiMultiple& a, const PiMultiple& b) {
    return {a.coeff * b.coeff, a.pi_power + b.pi_power};
  }
};

// Numeric value of coeff * pi^power at the requested precision.
BigFloat pi_multiple_value(const PiMultiple& v, long precision_bits);

// zeta(2k) = r_k pi^{2k} with r_k = (-1)^{k+1} 2^{2k-1} B(2k) / (2k)!.
PiMultiple zeta_even_exact(int k);

// zeta(s) for real s > 1 by Dirichlet series with Euler-Maclaurin tail
// correction; relative error <= 2^{8-precision}. s = 1 raises Pole,
// s < 1 raises Domain.
BigFloat zeta_reference(const BigFloat& s, long precision_bits);
BigFloat zeta_reference(const std::string& s_decimal, long precision_bits);

// Z(m,n) = (2^m pi^m/(2^m-1)) sum_i (2^n sin((2i-1)pi/2^n))^{-m}; converges
// to zeta(m) as n grows. m >= 2.
BigFloat Z_approx(int m, int n, long precision_bits);

// Exact Z(2k,n) as a pi-multiple (built from the even closed form).
PiMultiple z_even_exact(int k, int n);

// Exact error term with Z(2k,n) = zeta(2k) + R(2k,n); R(2,n) = 0.
PiMultiple R_error(int k, int n);

enum class QuadratureMethod { AdaptiveSimpson, GaussLegendrePanels };

struct QuadratureConfig {
  QuadratureMethod method = QuadratureMethod::AdaptiveSimpson;
  std::string abs_tolerance = "1e-20";  // decimal; must be >= 2^{16-precision}
  int max_depth = 60;                   // adaptive bisection depth limit
  int panels = 16;                      // Gauss-Legendre panel count
  long precision = 320;                 // working precision in bits
};

// zeta(2j+1) through the integral of E_{2j}(x) csc(pi x) over [0, 1/2]; the
// integrand is extended to x = 0 by its limit 2j E_{2j-1}(0) / pi. j >= 1.
BigFloat zeta_odd_integral(int j, const QuadratureConfig& cfg = {});

struct ZetaLimitRow {
  int n;
  BigFloat value;  // prelimit (pi^{2m+1}/(2^{2m+1}-1)) 2^{-(2m+1)(n-1)} S(2m+1,n)
  BigFloat error;  // signed, against zeta_reference(2m+1)
};

// Convergence table for zeta(2m+1) over n in [n_lo, n_hi] (3 <= n, n_hi <= 14).
std::vector<ZetaLimitRow> zeta_odd_limit_table(int m, int n_lo, int n_hi, long precision_bits);

}  // namespace cscsums
