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

#ifndef SYMFUN_POSITIVE_FUNCTION_HPP_
#define SYMFUN_POSITIVE_FUNCTION_HPP_

#include <functional>
#include <string>

#include "symfun/concave_weight.hpp"

namespace symfun {

/// Positive function psi on (0, 1] or (0, inf), handled in log space:
/// the stored map is x -> log2 psi(2^x).
class PositiveFunction {
 public:
  using LogMap = std::function<double(double)>;

  PositiveFunction(LogMap log2_psi, std::string name);

  static PositiveFunction power(double r);
  /// t^r_low on (0, 1], t^r_high on [1, inf).
  static PositiveFunction glued_power(double r_low, double r_high);
  static PositiveFunction constant(double c);
  /// Wraps a linear-scale psi; psi must stay positive and finite.
  static PositiveFunction from_linear(std::function<double(double)> psi, std::string name);
  static PositiveFunction of(const ConcaveWeight& w);

  double log2_at(double x) const { return log2_psi_(x); }
  double operator()(double t) const;
  const std::string& name() const { return name_; }

  /// psi^{1/q}.
  PositiveFunction root(double q) const;

 private:
  LogMap log2_psi_;
  std::string name_;
};

}  // namespace symfun

#endif  // SYMFUN_POSITIVE_FUNCTION_HPP_
