// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include "cscsums/polynomial.hpp"

namespace cscsums {

// Euler polynomial E_n(x): coefficient of t^n/n! in (2/(e^t+1)) e^{xt},
// built by exact series arithmetic.
Polynomial euler_poly(unsigned n);

// Generalized Bernoulli polynomial B_n^{(alpha)}(x): coefficient of t^n/n!
// in (t/(e^t-1))^alpha e^{xt}. alpha is a nonnegative integer order.
Polynomial gen_bernoulli_poly(unsigned n, unsigned alpha);

// Same polynomial by the explicit Stirling-number double sum; an independent
// construction that must agree with gen_bernoulli_poly coefficient by
// coefficient.
Polynomial gen_bernoulli_explicit(unsigned n, unsigned alpha);

// Exact Horner evaluation.
inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p.eval(x); }

// Formal derivative.
inline Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

// Cached evaluations used heavily by the identity and sum machinery.
Rational euler_poly_at(unsigned n, const Rational& x);
Rational gen_bernoulli_at(unsigned n, unsigned alpha, const Rational& x);

}  // namespace cscsums
