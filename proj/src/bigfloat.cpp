// Copyright (c) 2026 The cscsums developers
// Licensed under the Apache License, Version 2.0 (see LICENSE).
#include "cscsums/bigfloat.hpp"

#include <cmath>
#include <cstdlib>

namespace cscsums {

std::string BigFloat::to_decimal(size_t digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  if (digits == 0)
    digits = static_cast<size_t>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign_part;
  if (!mant.empty() && mant[0] == '-') {
    sign_part = "-";
    mant = mant.substr(1);
  }
  // mant is "dddd" with value 0.dddd * 10^exp; render as d.ddd e(exp-1)
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  std::string out = sign_part + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

bool rel_close(const BigFloat& a, const BigFloat& b, long tol_exp) {
  BigFloat diff = abs(a - b);
  if (b.is_zero()) return a.is_zero();
  return diff <= abs(b) * BigFloat::two_pow(tol_exp, std::max(a.precision(), b.precision()));
}

}  // namespace cscsums
