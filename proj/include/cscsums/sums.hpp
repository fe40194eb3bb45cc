// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#pragma once

#include <vector>

#include "cscsums/bigfloat.hpp"
#include "cscsums/rational.hpp"
#include "cscsums/report.hpp"

namespace cscsums {

// S(s,n) = sum_{j=1}^{2^{n-2}} csc^s((2j-1) pi / 2^n).
struct SumQuery {
  int s = 1;  // positive exponent
  int n = 2;  // dyadic level, 2^{n-2} summands
};

enum class RowBasis {
  OddSine,   // sin((2k-1) pi / 2^n)
  HalfSine,  // sin(k pi / 2^{n-1}); the last element is the constant 1
};

const char* to_string(RowBasis basis);

// One expansion row: exact rationals c_k with the semantics fixed by (power,
// basis). For OddSine rows of power 2m+1 the entries are integral after
// multiplying by 2^{2m} (one extra factor of 2 at n = 2).
struct CoefficientRow {
  int n = 2;
  int power = 1;
  RowBasis basis = RowBasis::OddSine;
  std::vector<Rational> entries;
};

// csc^{2m+1} expansion matrix over the odd-sine basis:
//   csc^{2m+1}((2j-1)pi/2^n) = 2^{2m+1} sum_k M(j,k) sin((2k-1)pi/2^n).
// Every row is a signed permutation of the first.
struct TransferMatrix {
  int n = 2;
  int power = 3;
  std::vector<CoefficientRow> rows;
};

// Number of summands 2^{n-2}; valid for 2 <= n <= 20 here.
long row_size(int n);

// High-precision direct summation; the universal numeric oracle.
// precision >= 64 bits required.
BigFloat direct_sum(const SumQuery& q, long precision_bits);

// Exact S(2k,n) by the even closed form; evaluated through two displayed
// routes that must agree.
Rational even_sum_exact(int k, int n);
Rational even_sum_exact_alt(int k, int n);

// S(2k,n) = sum_j dyadic[j] * 2^{2j(n-1)}; returns coefficients j = 1..k.
std::vector<Rational> even_sum_dyadic(int k);

// c with S(2k,n) = sum_j (c_{k,j}/pi^{2j}) zeta(2j) 2^{2j(n-1)}.
Rational zeta_basis_coeff(int k, int j);

// Exact row r with S(2m+1,n) = sum_j r_j csc((2j-1)pi/2^n); m = 0 is the
// all-ones identity expansion.
CoefficientRow odd_coeff_row(int m, int n);
// Same row via the shifted-argument closed form; must agree entrywise.
CoefficientRow odd_coeff_row_alt(int m, int n);

// First transfer-matrix row for power 2m+1 via the halved prefix/suffix
// recursion iterated m times from the all-ones row. The unscaled flag runs
// the recursion without the 1/2 factor, which yields 2^m times the matrix
// entries (kept for documentation).
CoefficientRow matrix_first_row(int m, int n, bool unscaled = false);

// Full matrix from the first row by the dyadic-angle conjugation
// a -> (2j-1)a on odd residues (reduce mod 2^{n+1}, fold at 2^n with a sign
// flip, reflect at 2^{n-1}).
TransferMatrix matrix_full(int m, int n);

// First row for power 2m+2 over the half-sine basis, derived from the odd
// row by suffix sums; entry_k = sum_{i > 2^{n-2}-k} M(1,i), last entry
// = (1/2) sum_i M(1,i).
CoefficientRow even_row(int m, int n);

// Full even-power matrix (conjugation with the extra (-1)^{j-1} twist on
// row j). Columns 1..2^{n-2}-1 sum to zero.
std::vector<std::vector<Rational>> even_matrix(int m, int n);

enum class TrigLemma {
  Quotient,           // sin theta_j / sin^2(pi/2^n) expansion
  QuotientCorollary,  // its weighted-row consequence
  Product,            // sin theta_j * sin^2(pi/2^n) three-term identity
  ProductCorollary,   // its weighted-row consequence (boundary-extended)
  ColumnSums,         // even-matrix columns sum to zero (exact)
  Commute,            // S(2m+1,n) = 2^{2m} sum_j M(1,j) csc theta_j
};

const char* to_string(TrigLemma id);

// Numeric checks pass at relative error 2^{16-precision}; ColumnSums is an
// exact rational check. Parameters: Quotient/Product take j; the corollaries
// take vector (0: all ones, 1: a_i = i); ColumnSums/Commute take m.
CheckReport check_trig_lemma(TrigLemma id, int n, const std::map<std::string, long>& params,
                             long precision_bits);

std::vector<CheckReport> run_trig_suite(int max_m, int max_n, long precision_bits);

}  // namespace cscsums
