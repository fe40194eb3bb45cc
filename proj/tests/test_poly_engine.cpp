// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>

#include "cscsums/bernoulli_poly.hpp"
#include "cscsums/combinatorics.hpp"
#include "cscsums/laurent.hpp"
#include "cscsums/series.hpp"

using namespace cscsums;

namespace {

// Small deterministic generator for exact randomized checks.
struct Lcg {
  unsigned long state = 0x2545F4914F6CDD1DUL;
  long next(long lo, long hi) {
    state = state * 6364136223846793005UL + 1442695040888963407UL;
    return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
  }
  Rational rational() {
    long d = next(1, 6);
    return Rational(next(-9, 9), d);
  }
  TruncatedSeries series(unsigned order) {
    std::vector<Rational> c(order + 1);
    for (auto& v : c) v = rational();
    return TruncatedSeries(std::move(c));
  }
};

}  // namespace

TEST_CASE("polynomial basics") {
  Polynomial p({Rational(2), Rational(-3), Rational(1)});  // x^2 - 3x + 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(1)) == Rational(0));
  CHECK(p.eval(Rational(5)) == Rational(12));
  CHECK(p.to_string() == "x^2 - 3*x + 2");
  CHECK(Polynomial().eval(Rational(7, 3)) == Rational(0));
  CHECK((p - p).is_zero());
  Polynomial composed = p.compose_linear(Rational(-1), Rational(3));  // p(3 - x)
  CHECK(composed.eval(Rational(1)) == p.eval(Rational(2)));
  auto [q, r] = (p * p).divrem(p);
  CHECK(q == p);
  CHECK(r.is_zero());
  CHECK(Polynomial::constant(Rational(5)).derivative().is_zero());
}

TEST_CASE("series kernels") {
  TruncatedSeries b = series_kernel(KernelKind::BernoulliKernel, 4);
  CHECK(b.coeff(0) == Rational(1));
  CHECK(b.coeff(1) == Rational(-1, 2));
  CHECK(b.coeff(2) == Rational(1, 12));
  CHECK(b.coeff(3) == Rational(0));
  CHECK(b.coeff(4) == Rational(-1, 720));
  TruncatedSeries e = series_kernel(KernelKind::Exp, 2, Rational(1));
  CHECK(e.coeff(0) == Rational(1));
  CHECK(e.coeff(1) == Rational(1));
  CHECK(e.coeff(2) == Rational(1, 2));
  TruncatedSeries eu = series_kernel(KernelKind::EulerKernel, 0);
  CHECK(eu.coeff(0) == Rational(1));
  CHECK_THROWS_AS(series_kernel(KernelKind::Exp, 3), Error);
}

TEST_CASE("series arithmetic is exact and well-behaved") {
  Lcg gen;
  for (int trial = 0; trial < 8; ++trial) {
    TruncatedSeries a = gen.series(9), b = gen.series(9), c = gen.series(9);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  TruncatedSeries unit = gen.series(8);
  unit.coeff(0) = Rational(3, 2);
  CHECK(unit * unit.inverse() == TruncatedSeries::one(8));
  CHECK_THROWS_AS(TruncatedSeries::zero(4).inverse(), Error);
}

TEST_CASE("euler polynomials by the generating kernel") {
  CHECK(euler_poly(0) == Polynomial::constant(Rational(1)));
  CHECK(euler_poly(1) == Polynomial({Rational(-1, 2), Rational(1)}));
  CHECK(euler_poly(2) == Polynomial({Rational(0), Rational(-1), Rational(1)}));
  CHECK(poly_eval(euler_poly(2), Rational(1, 2)) == Rational(-1, 4));
  CHECK(poly_derivative(euler_poly(2)) == Polynomial({Rational(-1), Rational(2)}));
  for (unsigned k = 1; k <= 8; ++k) CHECK(euler_poly_at(2 * k, Rational(0)) == Rational(0));
}

TEST_CASE("generalized Bernoulli polynomials, both constructions") {
  CHECK(gen_bernoulli_poly(0, 5) == Polynomial::constant(Rational(1)));
  CHECK(gen_bernoulli_poly(2, 3) == Polynomial({Rational(2), Rational(-3), Rational(1)}));
  CHECK(gen_bernoulli_poly(1, 4) == Polynomial({Rational(-2), Rational(1)}));
  CHECK(poly_eval(gen_bernoulli_poly(2, 3), Rational(1)) == Rational(0));
  CHECK(gen_bernoulli_explicit(0, 7) == Polynomial::constant(Rational(1)));
  CHECK(gen_bernoulli_explicit(2, 3) == Polynomial({Rational(2), Rational(-3), Rational(1)}));
  CHECK(gen_bernoulli_explicit(3, 2) == gen_bernoulli_poly(3, 2));
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned a = 0; a <= 10; ++a)
      CHECK(gen_bernoulli_explicit(n, a) == gen_bernoulli_poly(n, a));
  // derivative lowering
  CHECK(poly_derivative(gen_bernoulli_poly(3, 4)) == Rational(3) * gen_bernoulli_poly(2, 4));
  // order-one case matches the classical Bernoulli numbers at 0
  for (unsigned n = 0; n <= 12; ++n) {
    Rational b0 = poly_eval(gen_bernoulli_poly(n, 1), Rational(0));
    CHECK(b0 == bernoulli_number(n));
  }
}

TEST_CASE("shift, reflection and odd-zero properties") {
  const std::vector<Rational> shifts{Rational(-2), Rational(-1), Rational(1, 2), Rational(1),
                                     Rational(3)};
  for (unsigned k = 0; k <= 8; ++k)
    for (const auto& y : shifts) {
      for (unsigned a = 0; a <= 6; ++a) {
        Polynomial lhs = gen_bernoulli_poly(k, a).compose_linear(Rational(1), y);
        Polynomial rhs;
        for (unsigned i = 0; i <= k; ++i)
          rhs += binomial(k, i) * y.pow(k - i) * gen_bernoulli_poly(i, a);
        CHECK(lhs == rhs);
      }
      Polynomial lhs = euler_poly(k).compose_linear(Rational(1), y);
      Polynomial rhs;
      for (unsigned i = 0; i <= k; ++i) rhs += binomial(k, i) * y.pow(k - i) * euler_poly(i);
      CHECK(lhs == rhs);
    }
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned a = 0; a <= 8; ++a) {
      Polynomial b = gen_bernoulli_poly(n, a);
      Polynomial reflected = b.compose_linear(Rational(-1), Rational(a));
      CHECK(reflected == (n % 2 == 0 ? b : -b));
      // reflecting twice restores the original
      CHECK(reflected.compose_linear(Rational(-1), Rational(a)) == b);
    }
  for (unsigned i = 1; i <= 5; ++i)
    for (unsigned m = 1; m <= 10; ++m)
      CHECK(gen_bernoulli_at(2 * i + 1, m, Rational(m, 2)) == Rational(0));
}

TEST_CASE("concurrent table growth and polynomial construction") {
  // caches grow under contention and agree with serial results
  std::vector<Polynomial> serial;
  for (unsigned n = 0; n <= 20; ++n) serial.push_back(gen_bernoulli_poly(n, n % 7));
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      for (unsigned n = 0; n <= 20; ++n) {
        if (gen_bernoulli_poly(n, n % 7) != serial[n]) ok = false;
        if (euler_poly_at(n + t % 3, Rational(1, 2)) !=
            euler_poly(n + t % 3).eval(Rational(1, 2)))
          ok = false;
        if (bernoulli_number(2 * n) != bernoulli_number(2 * n)) ok = false;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(ok.load());
}

TEST_CASE("laurent polynomials") {
  LaurentPolynomial a(Polynomial({Rational(1), Rational(2)}), -3);  // x^-3 (1 + 2x)
  CHECK(a.min_power() == -3);
  CHECK(a.max_power() == -2);
  CHECK(a.coeff(-2) == Rational(2));
  CHECK(a.coeff(0) == Rational(0));
  LaurentPolynomial b = LaurentPolynomial::monomial(-2, Rational(-2));
  CHECK((a + b).coeff(-2) == Rational(0));
  CHECK((a + b).min_power() == -3);
  CHECK((a - a).is_zero());
  CHECK(a.shifted(3).min_power() == 0);
  // canonicalization strips leading zero coefficients into the shift
  LaurentPolynomial c(Polynomial({Rational(0), Rational(0), Rational(5)}), -1);
  CHECK(c.min_power() == 1);
  CHECK(c.coeff(1) == Rational(5));
}
