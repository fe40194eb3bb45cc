// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cscsums/bernoulli_poly.hpp"
#include "cscsums/combinatorics.hpp"
#include "cscsums/sums.hpp"

using namespace cscsums;

namespace {

std::vector<Rational> entries(const CoefficientRow& row) { return row.entries; }

std::vector<Rational> longs(std::initializer_list<long> vs) {
  std::vector<Rational> out;
  for (long v : vs) out.push_back(Rational(v));
  return out;
}

// Intro-display oracles for the first odd coefficient rows.
Rational s3_coeff(int n, long j) {
  Rational h = pow2(n - 1);
  return Rational(-2 * j * j) + Rational(2 * j) * (h + Rational(1)) - h;
}

Rational s5_coeff(int n, long j) {
  Rational h = pow2(n - 1), c = pow2(3 * n - 3);
  Rational v = Rational(2) * Rational(j).pow(4) -
               Rational(4 * j) * Rational(j).pow(2) * (h + Rational(1)) +
               Rational(2) * Rational(j).pow(2) * (Rational(3) * h - Rational(1)) +
               Rational(2 * j) * (c + h + Rational(2)) - (c + Rational(2) * h);
  return v / Rational(3);
}

Rational s7_coeff(int n, long j) {
  Rational h = pow2(n - 1), c3 = pow2(3 * n - 3), c5 = pow2(5 * n - 5);
  Rational J(j);
  Rational v = Rational(-4) * J.pow(6) + Rational(12) * (h + Rational(1)) * J.pow(5) -
               Rational(10) * (Rational(3) * h - Rational(2)) * J.pow(4) -
               Rational(20) * (c3 + Rational(2) * h + Rational(3)) * J.pow(3) +
               Rational(2) * (Rational(15) * c3 + Rational(45) * h - Rational(8)) * J.pow(2) +
               Rational(4) * (Rational(3) * c5 + Rational(5) * c3 + Rational(4) * h + Rational(12)) * J -
               Rational(3) * (Rational(2) * c5 + Rational(5) * c3 + Rational(8) * h);
  return v / Rational(45);
}

// Expanded E-polynomial displays for higher odd powers: row_j =
// g * sum_l d_l 2^{l(n-1)} E_l(j / 2^{n-1}).
Rational display_row(const Rational& g, const std::vector<std::pair<int, long>>& coeffs, int n,
                     long j) {
  Rational x = Rational(j) * pow2(-(n - 1));
  Rational acc;
  for (auto [l, d] : coeffs)
    acc += Rational(d) * pow2(static_cast<long>(l) * (n - 1)) * euler_poly_at(l, x);
  return g * acc;
}

Rational dot_rows(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool matrices_commute(const TransferMatrix& A, const TransferMatrix& B) {
  const size_t n = A.rows.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational ab, ba;
      for (size_t k = 0; k < n; ++k) {
        ab += A.rows[i].entries[k] * B.rows[k].entries[j];
        ba += B.rows[i].entries[k] * A.rows[k].entries[j];
      }
      if (ab != ba) return false;
    }
  return true;
}

bool is_normal(const TransferMatrix& A) {
  const size_t n = A.rows.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational aat, ata;
      for (size_t k = 0; k < n; ++k) {
        aat += A.rows[i].entries[k] * A.rows[j].entries[k];
        ata += A.rows[k].entries[i] * A.rows[k].entries[j];
      }
      if (aat != ata) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("direct summation oracle") {
  CHECK(rel_close(direct_sum({2, 2}, 256), BigFloat::from(2, 256), -250));
  CHECK(rel_close(direct_sum({2, 3}, 256), BigFloat::from(8, 256), -250));
  // frozen reference value for S(3,4)
  BigFloat expected = BigFloat::parse("143.30792682034944956901033197065716760521595601852", 256);
  CHECK(rel_close(direct_sum({3, 4}, 256), expected, -160));
  CHECK_THROWS_AS(direct_sum({2, 4}, 32), Error);
  CHECK_THROWS_AS(direct_sum({0, 4}, 256), Error);
  CHECK_THROWS_AS(direct_sum({2, 1}, 256), Error);
}

TEST_CASE("even closed form") {
  CHECK(even_sum_exact(1, 3) == Rational(8));
  CHECK(even_sum_exact(2, 3) == Rational(48));
  CHECK(even_sum_exact(2, 2) == Rational(4));
  CHECK(even_sum_exact(3, 3) == Rational(320));
  CHECK(even_sum_exact(2, 4) == Rational(704));
  CHECK(even_sum_exact(4, 3) == Rational(2176));
  // golden closed forms as exact functions of 2^n
  for (int n = 2; n <= 10; ++n) {
    CHECK(even_sum_exact(1, n) == pow2(2 * n - 2) / Rational(2));
    CHECK(even_sum_exact(2, n) == (pow2(4 * n - 4) + Rational(2) * pow2(2 * n - 2)) / Rational(6));
    CHECK(even_sum_exact(3, n) == (Rational(2) * pow2(6 * n - 6) + Rational(5) * pow2(4 * n - 4) +
                                   Rational(8) * pow2(2 * n - 2)) /
                                      Rational(30));
    CHECK(even_sum_exact(4, n) ==
          (Rational(17) * pow2(8 * n - 8) + Rational(56) * pow2(6 * n - 6) +
           Rational(98) * pow2(4 * n - 4) + Rational(144) * pow2(2 * n - 2)) /
              Rational(630));
  }
  // dyadic coefficient vectors
  CHECK(even_sum_dyadic(1) == std::vector<Rational>{Rational(1, 2)});
  CHECK(even_sum_dyadic(2) == std::vector<Rational>{Rational(1, 3), Rational(1, 6)});
  CHECK(even_sum_dyadic(3) ==
        std::vector<Rational>{Rational(4, 15), Rational(1, 6), Rational(1, 15)});
  CHECK(even_sum_dyadic(4) == std::vector<Rational>{Rational(8, 35), Rational(7, 45),
                                                    Rational(4, 45), Rational(17, 630)});
}

TEST_CASE("even closed form against the numeric oracle") {
  for (int k = 1; k <= 6; ++k)
    for (int n = 2; n <= 10; ++n) {
      BigFloat exact = BigFloat::from(even_sum_exact(k, n), 256);
      CHECK(rel_close(direct_sum({2 * k, n}, 256), exact, 40 - 256));
    }
}

TEST_CASE("odd coefficient rows") {
  for (int n = 2; n <= 6; ++n) {
    auto row = odd_coeff_row(0, n);
    for (const auto& e : row.entries) CHECK(e == Rational(1));
  }
  CHECK(entries(odd_coeff_row(1, 4)) == longs({8, 20, 28, 32}));
  CHECK(entries(odd_coeff_row(2, 3)) == longs({24, 56}));
  // intro displays as oracles
  for (int n = 2; n <= 6; ++n) {
    auto r1 = odd_coeff_row(1, n), r2 = odd_coeff_row(2, n), r3 = odd_coeff_row(3, n);
    for (long j = 1; j <= row_size(n); ++j) {
      CHECK(r1.entries[j - 1] == s3_coeff(n, j));
      CHECK(r2.entries[j - 1] == s5_coeff(n, j));
      CHECK(r3.entries[j - 1] == s7_coeff(n, j));
    }
  }
  // expanded displays for powers 9, 11, 13
  const std::vector<std::pair<int, long>> d9{{8, 1}, {7, -4}, {6, -14}, {5, 56},
                                             {4, 49}, {3, -196}, {2, -36}, {1, 144}};
  const std::vector<std::pair<int, long>> d11{{10, -1}, {9, 5},    {8, 30},  {7, -150},
                                              {6, -273}, {5, 1365}, {4, 820}, {3, -4100},
                                              {2, -576}, {1, 2880}};
  const std::vector<std::pair<int, long>> d13{{12, 1},     {11, -6},   {10, -55}, {9, 330},
                                              {8, 1023},   {7, -6138}, {6, -7645}, {5, 45870},
                                              {4, 21076},  {3, -126456}, {2, -14400}, {1, 86400}};
  for (int n = 2; n <= 5; ++n) {
    auto r4 = odd_coeff_row(4, n), r5 = odd_coeff_row(5, n), r6 = odd_coeff_row(6, n);
    for (long j = 1; j <= row_size(n); ++j) {
      CHECK(r4.entries[j - 1] == display_row(Rational(2, 315), d9, n, j));
      CHECK(r5.entries[j - 1] == display_row(Rational(4, 14175), d11, n, j));
      CHECK(r6.entries[j - 1] == display_row(Rational(4, 467775), d13, n, j));
    }
  }
}

TEST_CASE("both closed-form routes produce the same rows") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 2; n <= 6; ++n)
      CHECK(entries(odd_coeff_row(m, n)) == entries(odd_coeff_row_alt(m, n)));
}

TEST_CASE("odd rows against the numeric oracle") {
  const long wp = 288;
  for (int m = 0; m <= 5; ++m)
    for (int n = 2; n <= 8; ++n) {
      auto row = odd_coeff_row(m, n);
      BigFloat acc(wp);
      BigFloat pi = BigFloat::pi(wp);
      for (long j = 1; j <= row_size(n); ++j) {
        BigFloat angle = (pi * BigFloat::from(2 * j - 1, wp)).div_2exp(n);
        acc += BigFloat::from(row.entries[j - 1], wp) / sin(angle);
      }
      CHECK(rel_close(acc, direct_sum({2 * m + 1, n}, wp), 40 - 256));
    }
}

TEST_CASE("transfer matrix first row and scaling") {
  CHECK(entries(matrix_first_row(1, 4)) == longs({2, 5, 7, 8}));
  CHECK(entries(matrix_first_row(0, 5)) == std::vector<Rational>(8, Rational(1)));
  CHECK(entries(matrix_first_row(1, 3)) == longs({1, 2}));
  CHECK(entries(matrix_first_row(1, 2)) == std::vector<Rational>{Rational(1, 2)});
  // unscaled recursion runs 2^m hot
  for (int m = 0; m <= 3; ++m) {
    auto scaled = matrix_first_row(m, 4), raw = matrix_first_row(m, 4, true);
    for (size_t i = 0; i < scaled.entries.size(); ++i)
      CHECK(raw.entries[i] == scaled.entries[i] * pow2(m));
  }
  // row relation: expansion row = 2^{2m} * matrix row
  for (int m = 0; m <= 5; ++m)
    for (int n = 2; n <= 8; ++n) {
      auto coeff = odd_coeff_row(m, n), mat = matrix_first_row(m, n);
      for (size_t i = 0; i < coeff.entries.size(); ++i)
        CHECK(coeff.entries[i] == mat.entries[i] * pow2(2 * m));
    }
}

TEST_CASE("full transfer matrix") {
  TransferMatrix m14 = matrix_full(1, 4);
  CHECK(entries(m14.rows[0]) == longs({2, 5, 7, 8}));
  CHECK(entries(m14.rows[1]) == longs({7, 2, -8, 5}));
  CHECK(entries(m14.rows[2]) == longs({5, 8, 2, -7}));
  CHECK(entries(m14.rows[3]) == longs({-8, 7, -5, 2}));
  TransferMatrix m13 = matrix_full(1, 3);
  CHECK(entries(m13.rows[0]) == longs({1, 2}));
  CHECK(entries(m13.rows[1]) == longs({-2, 1}));
  TransferMatrix m04 = matrix_full(0, 4);
  CHECK(entries(m04.rows[1]) == longs({1, 1, -1, 1}));
  CHECK(entries(m04.rows[2]) == longs({1, 1, 1, -1}));
  CHECK(entries(m04.rows[3]) == longs({-1, 1, -1, 1}));
  CHECK(entries(m14.rows[0]) == entries(matrix_first_row(1, 4)));
}

TEST_CASE("every row expands its own cosecant power numerically") {
  const long wp = 256;
  BigFloat pi = BigFloat::pi(wp);
  for (int m = 0; m <= 2; ++m)
    for (int n = 2; n <= 6; ++n) {
      TransferMatrix mat = matrix_full(m, n);
      for (long j = 1; j <= row_size(n); ++j) {
        BigFloat lhs = pow_int(sin((pi * BigFloat::from(2 * j - 1, wp)).div_2exp(n)),
                               -(2 * m + 1));
        BigFloat rhs(wp);
        for (long k = 1; k <= row_size(n); ++k) {
          BigFloat angle = (pi * BigFloat::from(2 * k - 1, wp)).div_2exp(n);
          rhs += BigFloat::from(mat.rows[j - 1].entries[k - 1], wp) * sin(angle);
        }
        CHECK(rel_close(lhs, rhs * BigFloat::two_pow(2 * m + 1, wp), 40 - wp));
      }
    }
}

TEST_CASE("rows are signed permutations; matrices are normal and commute") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= 3; ++m) {
      TransferMatrix mat = matrix_full(m, n);
      std::vector<Rational> base;
      for (const auto& e : mat.rows[0].entries) base.push_back(e.abs());
      std::sort(base.begin(), base.end());
      for (const auto& row : mat.rows) {
        std::vector<Rational> abs;
        for (const auto& e : row.entries) abs.push_back(e.abs());
        std::sort(abs.begin(), abs.end());
        CHECK(abs == base);
      }
    }
  for (int n = 2; n <= 5; ++n) {
    std::vector<TransferMatrix> mats;
    for (int m = 1; m <= 3; ++m) mats.push_back(matrix_full(m, n));
    for (const auto& a : mats) {
      CHECK(is_normal(a));
      for (const auto& b : mats) CHECK(matrices_commute(a, b));
    }
  }
}

TEST_CASE("even rows") {
  CHECK(entries(even_row(1, 4)) == longs({8, 15, 20, 11}));
  // last-entry consistency with the even closed form
  for (int m = 0; m <= 4; ++m)
    for (int n = 2; n <= 8; ++n) {
      Rational last = even_row(m, n).entries.back();
      CHECK(pow2(n - 2) * pow2(2 * m + 2) * last == even_sum_exact(m + 1, n));
    }
  auto r03 = even_row(0, 3);
  CHECK(r03.entries.back() == Rational(1));
  CHECK(pow2(1) * pow2(2) * r03.entries.back() == Rational(8));
  CHECK(r03.basis == RowBasis::HalfSine);
}

TEST_CASE("even matrix columns") {
  auto mat = even_matrix(1, 4);
  CHECK(mat[0] == longs({8, 15, 20, 11}));
  CHECK(mat[1] == longs({20, -15, -8, 11}));
  CHECK(mat[2] == longs({-20, -15, 8, 11}));
  CHECK(mat[3] == longs({-8, 15, -20, 11}));
  std::vector<Rational> sums(4);
  for (const auto& row : mat)
    for (int c = 0; c < 4; ++c) sums[c] += row[c];
  CHECK(sums == longs({0, 0, 0, 44}));
}

TEST_CASE("trig lemma checks") {
  CHECK(check_trig_lemma(TrigLemma::Product, 4, {{"j", 2}}, 128).passed());
  CHECK(check_trig_lemma(TrigLemma::Quotient, 4, {{"j", 3}}, 256).passed());
  CHECK(check_trig_lemma(TrigLemma::QuotientCorollary, 5, {{"vector", 1}}, 256).passed());
  CHECK(check_trig_lemma(TrigLemma::ProductCorollary, 5, {{"vector", 1}}, 256).passed());
  CHECK(check_trig_lemma(TrigLemma::ColumnSums, 4, {{"m", 1}}, 256).passed());
  CHECK(check_trig_lemma(TrigLemma::Commute, 4, {{"m", 1}}, 256).passed());
  CHECK_THROWS_AS(check_trig_lemma(TrigLemma::Quotient, 13, {{"j", 1}}, 256), Error);
  CHECK_THROWS_AS(check_trig_lemma(TrigLemma::Quotient, 4, {{"j", 9}}, 256), Error);
  CHECK_THROWS_AS(check_trig_lemma(TrigLemma::Commute, 4, {{"m", 1}}, 64), Error);
  auto reports = run_trig_suite(2, 5, 192);
  for (const auto& r : reports) {
    INFO(r.identity);
    CHECK(r.passed());
  }
}

TEST_CASE("level bounds") {
  CHECK(row_size(2) == 1);
  CHECK(row_size(12) == 1024);
  CHECK_THROWS_AS(row_size(1), Error);
  CHECK_THROWS_AS(row_size(21), Error);
}
