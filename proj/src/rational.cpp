// Copyright 2026 The symfun Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symfun/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symfun {

Rational pow2(int k) {
  mpz_class one = 1;
  mpz_class shifted;
  if (k >= 0) {
    mpz_mul_2exp(shifted.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return Rational(shifted);
  }
  mpz_mul_2exp(shifted.get_mpz_t(), one.get_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  Rational r(one, shifted);
  r.canonicalize();
  return r;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("to_rational: non-finite value");
  return Rational(x);
}

double to_double(const Rational& q) {
  const double truncated = q.get_d();  // rounds toward zero
  if (!std::isfinite(truncated)) return truncated;
  const Rational exact_trunc(truncated);
  const Rational residual = q - exact_trunc;
  if (sgn(residual) == 0) return truncated;
  const double away = std::nextafter(
      truncated, sgn(residual) > 0 ? std::numeric_limits<double>::infinity()
                                   : -std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return truncated;
  const Rational half_gap = (Rational(away) - exact_trunc) / 2;
  const int order = cmp(abs(residual), abs(half_gap));
  if (order < 0) return truncated;
  if (order > 0) return away;
  // tie: pick the even mantissa
  int exp_t = 0;
  const double mant_t = std::frexp(truncated, &exp_t);
  const auto bits = static_cast<long long>(std::ldexp(mant_t, 53));
  return (bits % 2 == 0) ? truncated : away;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace symfun
