// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums/bernoulli_poly.hpp"

#include <mutex>
#include <vector>

#include "cscsums/combinatorics.hpp"
#include "cscsums/series.hpp"

namespace cscsums {

namespace {

std::mutex g_mu;
std::vector<Polynomial> g_euler;                       // E_n by index
std::vector<std::vector<Rational>> g_bern_kernel_pow;  // [alpha] -> coeffs of (t/(e^t-1))^alpha

// (t/(e^t-1))^alpha through t^order, cached and grown on demand.
const std::vector<Rational>& bernoulli_kernel_pow(unsigned alpha, unsigned order) {
  if (alpha >= g_bern_kernel_pow.size()) g_bern_kernel_pow.resize(alpha + 1);
  auto& entry = g_bern_kernel_pow[alpha];
  if (entry.size() > order) return entry;
  TruncatedSeries s = series_kernel(KernelKind::BernoulliKernel, order).pow(alpha);
  entry = s.coeffs();
  return entry;
}

// n! * sum_j K[n-j] x^j / j!  -- the coefficient of t^n/n! in K(t) e^{xt}.
Polynomial assemble(const std::vector<Rational>& kernel, unsigned n) {
  std::vector<Rational> c(n + 1);
  const Integer nf = factorial(n);
  for (unsigned j = 0; j <= n; ++j)
    c[j] = Rational(nf, factorial(j)) * kernel[n - j];
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial euler_poly(unsigned n) {
  std::lock_guard<std::mutex> lock(g_mu);
  if (n < g_euler.size()) return g_euler[n];
  TruncatedSeries kernel = series_kernel(KernelKind::EulerKernel, n);
  for (unsigned i = g_euler.size(); i <= n; ++i)
    g_euler.push_back(assemble(kernel.coeffs(), i));
  return g_euler[n];
}

Polynomial gen_bernoulli_poly(unsigned n, unsigned alpha) {
  std::lock_guard<std::mutex> lock(g_mu);
  return assemble(bernoulli_kernel_pow(alpha, n), n);
}

Polynomial gen_bernoulli_explicit(unsigned n, unsigned alpha) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    // k = 0 avoids binomial(alpha - 1, 0), which is 1 even at alpha = 0.
    Rational outer = k == 0 ? Rational(1) : binomial(static_cast<long>(alpha + k) - 1, k);
    if (k % 2 == 1) outer = -outer;
    if (outer.is_zero()) continue;
    for (unsigned l = 0; l + k <= n; ++l) {
      Rational s2 = stirling_second(l + 2 * k, k);
      if (s2.is_zero()) continue;
      Rational term = outer * binomial(n, l + k) * binomial(alpha + k + l, l) *
                      Rational(factorial(l + k) * factorial(k), factorial(l + 2 * k)) * s2;
      c[n - k - l] += term;
    }
  }
  return Polynomial(std::move(c));
}

Rational euler_poly_at(unsigned n, const Rational& x) { return euler_poly(n).eval(x); }

Rational gen_bernoulli_at(unsigned n, unsigned alpha, const Rational& x) {
  return gen_bernoulli_poly(n, alpha).eval(x);
}

}  // namespace cscsums
