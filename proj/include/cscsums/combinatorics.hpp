// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <mutex>
#include <vector>

#include "cscsums/rational.hpp"

namespace cscsums {

enum class TableKind {
  Binomial,
  StirlingFirstSigned,
  StirlingSecond,
  Bernoulli,
  EulerNumber,
};

// Memoized table of one combinatorial family. Values are written once and
// never change; growth is serialized by an internal mutex so concurrent
// readers of completed rows are safe.
class CombinatorialTable {
 public:
  explicit CombinatorialTable(TableKind kind) : kind_(kind) {}

  // Triangular families (Binomial, Stirling*) index (n, k); the
  // one-dimensional families (Bernoulli, EulerNumber) ignore k.
  Rational at(unsigned n, unsigned k = 0) const;

  TableKind kind() const { return kind_; }
  unsigned max_index() const;

 private:
  void ensure(unsigned n) const;

  TableKind kind_;
  mutable std::mutex mu_;
  mutable std::vector<std::vector<Rational>> values_;
};

// Binomial coefficient; 0 when k < 0 or k > n. Requires n >= 0.
Rational binomial(long n, long k);

// Signed Stirling number of the first kind: coefficient of x^k in the
// falling factorial x(x-1)...(x-n+1).
Rational stirling_first_signed(unsigned n, unsigned k);

// Stirling number of the second kind: partitions of an n-set into k
// nonempty blocks. S(0,0) = 1, S(n,k) = 0 for k > n.
Rational stirling_second(unsigned n, unsigned k);

// Bernoulli number, B(1) = -1/2 convention. Evaluated by the double sum
//   B(m) = sum_{k=0}^m 1/(k+1) sum_{j=0}^k C(k,j) (-1)^j j^m     (0^0 = 1)
// and cross-checked on every table fill against the defining recurrence
// sum_{j<n} C(n,j) B(j) = 0.
Rational bernoulli_number(unsigned m);

// Euler number E(k) = 2^k E_k(1/2); E(odd) = 0. Delegates to euler_poly.
Rational euler_number(unsigned k);

}  // namespace cscsums
