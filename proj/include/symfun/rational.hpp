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

#ifndef SYMFUN_RATIONAL_HPP_
#define SYMFUN_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>

namespace symfun {

/// Exact breakpoint arithmetic. Every finite double is exactly representable.
using Rational = mpq_class;

/// 2^k as an exact rational, for any integer k.
Rational pow2(int k);

/// Exact conversion; throws std::domain_error for non-finite input.
Rational to_rational(double x);

/// Round-to-nearest-even conversion (mpq_get_d truncates, this does not).
double to_double(const Rational& q);

/// p/q from integers.
Rational make_rational(long num, long den);

std::string to_string(const Rational& q);

}  // namespace symfun

#endif  // SYMFUN_RATIONAL_HPP_
