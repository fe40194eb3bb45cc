// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums/zeta.hpp"

#include <cmath>

#include "cscsums/bernoulli_poly.hpp"
#include "cscsums/combinatorics.hpp"
#include "cscsums/sums.hpp"

namespace cscsums {

namespace {

Rational zeta_even_coeff(int k) {
  Rational r = pow2(2 * k - 1) * bernoulli_number(2 * k) / Rational(factorial(2 * k));
  return k % 2 == 1 ? r : -r;
}

// Evaluates E_{2j}(x)/sin(pi x) with the removable singularity at x = 0
// patched by its limit.
class OddIntegrand {
 public:
  OddIntegrand(int j, long wp) : wp_(wp), pi_(BigFloat::pi(wp)) {
    Polynomial e = euler_poly(2 * j);
    for (const auto& c : e.coeffs()) coeffs_.push_back(BigFloat::from(c, wp));
    limit_ = BigFloat::from(Rational(2 * j) * euler_poly_at(2 * j - 1, Rational(0)), wp) / pi_;
  }

  BigFloat operator()(const BigFloat& x) const {
    if (x.is_zero()) return limit_;
    BigFloat acc(wp_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc / sin(pi_ * x);
  }

  const BigFloat& pi() const { return pi_; }

 private:
  long wp_;
  BigFloat pi_;
  std::vector<BigFloat> coeffs_;
  BigFloat limit_;
};

BigFloat simpson_slice(const BigFloat& a, const BigFloat& fa,
                       const BigFloat& b, const BigFloat& fb, const BigFloat& fm) {
  return (b - a) * (fa + BigFloat::from(4, fa.precision()) * fm + fb) /
         BigFloat::from(6, fa.precision());
}

BigFloat adaptive_simpson(const OddIntegrand& f, const BigFloat& a, const BigFloat& fa,
                          const BigFloat& b, const BigFloat& fb, const BigFloat& fm,
                          const BigFloat& whole, const BigFloat& tol, int depth) {
  BigFloat m = (a + b).div_2exp(1);
  BigFloat lm = (a + m).div_2exp(1), rm = (m + b).div_2exp(1);
  BigFloat flm = f(lm), frm = f(rm);
  BigFloat left = simpson_slice(a, fa, m, fm, flm);
  BigFloat right = simpson_slice(m, fm, b, fb, frm);
  BigFloat delta = left + right - whole;
  BigFloat fifteen = BigFloat::from(15, a.precision());
  if (depth <= 0 || abs(delta) <= fifteen * tol)
    return left + right + delta / fifteen;
  BigFloat half_tol = tol.div_2exp(1);
  return adaptive_simpson(f, a, fa, m, fm, flm, left, half_tol, depth - 1) +
         adaptive_simpson(f, m, fm, b, fb, frm, right, half_tol, depth - 1);
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration at working
// precision, seeded from the Chebyshev estimate.
void gauss_legendre(int degree, long wp, std::vector<BigFloat>& nodes,
                    std::vector<BigFloat>& weights) {
  nodes.clear();
  weights.clear();
  const BigFloat one = BigFloat::from(1, wp);
  for (int i = 1; i <= degree; ++i) {
    double seed = std::cos(3.14159265358979323846 * (i - 0.25) / (degree + 0.5));
    BigFloat x = BigFloat::parse(std::to_string(seed), wp);
    BigFloat dp(wp);
    for (int it = 0; it < 64; ++it) {
      // Legendre recurrence for P_d(x) and P_{d-1}(x)
      BigFloat p0 = one, p1 = x;
      for (int d = 2; d <= degree; ++d) {
        BigFloat p2 = (BigFloat::from(2 * d - 1, wp) * x * p1 -
                       BigFloat::from(d - 1, wp) * p0) /
                      BigFloat::from(d, wp);
        p0 = p1;
        p1 = p2;
      }
      dp = BigFloat::from(degree, wp) * (x * p1 - p0) / (x * x - one);
      BigFloat step = p1 / dp;
      x = x - step;
      if (abs(step) <= abs(x) * BigFloat::two_pow(8 - wp, wp)) break;
    }
    // one more recurrence pass for the converged x to refresh dp
    BigFloat p0 = one, p1 = x;
    for (int d = 2; d <= degree; ++d) {
      BigFloat p2 = (BigFloat::from(2 * d - 1, wp) * x * p1 - BigFloat::from(d - 1, wp) * p0) /
                    BigFloat::from(d, wp);
      p0 = p1;
      p1 = p2;
    }
    dp = BigFloat::from(degree, wp) * (x * p1 - p0) / (x * x - one);
    nodes.push_back(x);
    weights.push_back(BigFloat::from(2, wp) / ((one - x * x) * dp * dp));
  }
}

}  // namespace

BigFloat pi_multiple_value(const PiMultiple& v, long precision_bits) {
  const long wp = precision_bits + 16;
  BigFloat p = pow_int(BigFloat::pi(wp), v.pi_power);
  return (BigFloat::from(v.coeff, wp) * p).rounded_to(precision_bits);
}

PiMultiple zeta_even_exact(int k) {
  if (k < 1) fail(ErrorCode::Domain, "zeta_even_exact requires k >= 1 (zeta(0) out of scope)");
  return {zeta_even_coeff(k), static_cast<unsigned>(2 * k)};
}

BigFloat zeta_reference(const BigFloat& s, long precision_bits) {
  const long wp = precision_bits + 64;
  BigFloat one = BigFloat::from(1, wp);
  if (s == one) fail(ErrorCode::Pole, "zeta has a pole at s = 1");
  if (s < one) fail(ErrorCode::Domain, "zeta_reference requires s > 1");
  const long N = std::max<long>(16, precision_bits / 3);
  BigFloat sw = s.rounded_to(wp);
  BigFloat acc(wp);
  for (long k = 1; k < N; ++k)
    acc += pow(BigFloat::from(k, wp), -sw);
  BigFloat Nf = BigFloat::from(N, wp);
  BigFloat Npow = pow(Nf, -sw);  // N^{-s}
  acc += Npow.div_2exp(1);
  acc += Npow * Nf / (sw - one);
  // Euler-Maclaurin tail: sum_i B(2i)/(2i)! * s(s+1)...(s+2i-2) * N^{-s-2i+1}
  BigFloat rising = sw;               // s ... (s+2i-2), grows by two factors per step
  BigFloat npow = Npow / Nf;          // N^{-s-2i+1}
  BigFloat eps = BigFloat::two_pow(-wp, wp);
  BigFloat prev_mag(wp);
  for (long i = 1; i <= 4096; ++i) {
    BigFloat coeff = BigFloat::from(
        bernoulli_number(2 * i) / Rational(factorial(2 * i)), wp);
    BigFloat term = coeff * rising * npow;
    BigFloat mag = abs(term);
    if (i > 1 && prev_mag > BigFloat::from(0, wp) && mag >= prev_mag) break;  // asymptotic turn
    acc += term;
    if (mag <= abs(acc) * eps) break;
    prev_mag = mag;
    rising = rising * (sw + BigFloat::from(2 * i - 1, wp)) * (sw + BigFloat::from(2 * i, wp));
    npow = npow / (Nf * Nf);
  }
  return acc.rounded_to(precision_bits);
}

BigFloat zeta_reference(const std::string& s_decimal, long precision_bits) {
  return zeta_reference(BigFloat::parse(s_decimal, precision_bits + 64), precision_bits);
}

BigFloat Z_approx(int m, int n, long precision_bits) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "Z_approx requires m >= 2");
  const long wp = precision_bits + 32;
  BigFloat s = direct_sum({m, n}, wp);
  BigFloat pim = pow_int(BigFloat::pi(wp), m);
  BigFloat denom = BigFloat::two_pow(m, wp) - BigFloat::from(1, wp);
  // (2^m/(2^m-1)) pi^m 2^{-mn} S(m,n)
  return (pim * s / denom).div_2exp(static_cast<long>(m) * n - m).rounded_to(precision_bits);
}

PiMultiple z_even_exact(int k, int n) {
  Rational c = pow2(2 * k) / (pow2(2 * k) - Rational(1)) * even_sum_exact(k, n) *
               pow2(-2L * k * n);
  return {c, static_cast<unsigned>(2 * k)};
}

PiMultiple R_error(int k, int n) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "R_error requires k >= 1");
  if (n < 2) fail(ErrorCode::InvalidArgument, "R_error requires n >= 2");
  Rational acc;
  for (int j = 1; j <= k - 1; ++j) {
    Rational t = pow2(2L * j * (n - 2) + 2 * k) * (pow2(2 * j) - Rational(1)) *
                 gen_bernoulli_at(2 * (k - j), 2 * k, Rational(k)) /
                 Rational(factorial(2 * (k - j))) * zeta_even_coeff(j);
    acc += (j + k) % 2 == 0 ? t : -t;
  }
  acc = acc * pow2(2 * k) / (pow2(2 * k) - Rational(1)) * pow2(-2L * k * n);
  return {acc, static_cast<unsigned>(2 * k)};
}

BigFloat zeta_odd_integral(int j, const QuadratureConfig& cfg) {
  if (j < 1)
    fail(ErrorCode::Pole, "j = 0 corresponds to the divergent zeta(1)");
  const long wp = cfg.precision;
  BigFloat tol = BigFloat::parse(cfg.abs_tolerance, wp);
  if (tol < BigFloat::two_pow(16 - wp, wp))
    fail(ErrorCode::InvalidArgument, "abs_tolerance below 2^(16-precision)");
  OddIntegrand f(j, wp);
  BigFloat a(wp), b = BigFloat::from(Rational(1, 2), wp);
  BigFloat integral(wp);
  if (cfg.method == QuadratureMethod::AdaptiveSimpson) {
    BigFloat fa = f(a), fb = f(b), fm = f((a + b).div_2exp(1));
    BigFloat whole = simpson_slice(a, fa, b, fb, fm);
    integral = adaptive_simpson(f, a, fa, b, fb, fm, whole, tol, cfg.max_depth);
  } else {
    std::vector<BigFloat> nodes, weights;
    gauss_legendre(24, wp, nodes, weights);
    BigFloat width = (b - a) / BigFloat::from(cfg.panels, wp);
    for (int p = 0; p < cfg.panels; ++p) {
      BigFloat lo = a + width * BigFloat::from(p, wp);
      BigFloat mid = lo + width.div_2exp(1);
      BigFloat half = width.div_2exp(1);
      for (size_t i = 0; i < nodes.size(); ++i)
        integral += weights[i] * f(mid + half * nodes[i]) * half;
    }
  }
  // prefactor (-1)^j 2^{2j} pi^{2j+1} / ((2j)! (2^{2j+1}-1))
  BigFloat num = pow_int(f.pi(), 2 * j + 1);
  BigFloat den = BigFloat::from(Rational(factorial(2 * j)) * (pow2(2 * j + 1) - Rational(1)), wp);
  BigFloat result = integral * num / den;
  result = j % 2 == 0 ? result : -result;
  return result.div_2exp(-2 * j);
}

std::vector<ZetaLimitRow> zeta_odd_limit_table(int m, int n_lo, int n_hi, long precision_bits) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "m must be >= 1");
  if (n_lo < 3 || n_hi > 14 || n_lo > n_hi)
    fail(ErrorCode::Range, "n range must sit inside [3, 14]");
  const int s = 2 * m + 1;
  const long wp = precision_bits + 32;
  BigFloat ref = zeta_reference(BigFloat::from(s, wp), wp);
  BigFloat pis = pow_int(BigFloat::pi(wp), s);
  BigFloat denom = BigFloat::two_pow(s, wp) - BigFloat::from(1, wp);
  std::vector<ZetaLimitRow> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    BigFloat sum = direct_sum({s, n}, wp);
    BigFloat value = (pis * sum / denom).div_2exp(static_cast<long>(s) * (n - 1));
    rows.push_back({n, value.rounded_to(precision_bits),
                    (value - ref).rounded_to(precision_bits)});
  }
  return rows;
}

}  // namespace cscsums
