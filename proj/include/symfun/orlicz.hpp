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

#ifndef SYMFUN_ORLICZ_HPP_
#define SYMFUN_ORLICZ_HPP_

#include <string>

namespace symfun {

/// Young function N for Orlicz spaces.
///
/// Families:
///   Power(p):                        N(u) = u^p
///   PowerLog(p, a):                  N(u) = u^p ln(e + u)^a
///   PiecewisePower(p_low, p_high, k): u^p_low on [0, k], k^p_low (u/k)^p_high after
///
/// Construction validates N numerically (N(0) = 0, increasing, convex on a
/// log grid) and throws std::invalid_argument otherwise.
class OrliczFunction {
 public:
  enum class Family { Power, PowerLog, PiecewisePower };

  static OrliczFunction power(double p);
  static OrliczFunction power_log(double p, double a);
  static OrliczFunction piecewise_power(double p_low, double p_high, double knot);

  Family family() const { return family_; }
  double p() const { return p_; }
  double a() const { return a_; }
  double p_high() const { return p_high_; }
  double knot() const { return knot_; }

  double operator()(double u) const;
  /// log2 N(2^x).
  double log2_at(double x) const;

  /// N^{-1}(v) for v >= 0.
  double inverse(double v) const;
  /// log2 N^{-1}(2^y).
  double log2_inverse(double y) const;

  /// sup of N(2u)/N(u) over a grid of u in [1, 2^40].
  double delta2_infinity() const;

  /// Second-difference convexity test on a log grid, relative tolerance 1e-10.
  bool is_convex_on_grid() const;

  friend bool operator==(const OrliczFunction&, const OrliczFunction&) = default;

 private:
  OrliczFunction(Family family, double p, double a, double p_high, double knot);
  void validate() const;

  Family family_;
  double p_;
  double a_ = 0.0;
  double p_high_ = 0.0;
  double knot_ = 0.0;
};

std::string to_string(OrliczFunction::Family f);

}  // namespace symfun

#endif  // SYMFUN_ORLICZ_HPP_
