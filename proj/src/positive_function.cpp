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

#include "symfun/positive_function.hpp"

#include <cmath>
#include <stdexcept>

namespace symfun {

PositiveFunction::PositiveFunction(LogMap log2_psi, std::string name)
    : log2_psi_(std::move(log2_psi)), name_(std::move(name)) {
  if (!log2_psi_) throw std::invalid_argument("empty positive function");
}

PositiveFunction PositiveFunction::power(double r) {
  return PositiveFunction([r](double x) { return r * x; }, "power(r=" + std::to_string(r) + ")");
}

PositiveFunction PositiveFunction::glued_power(double r_low, double r_high) {
  return PositiveFunction(
      [r_low, r_high](double x) { return x <= 0 ? r_low * x : r_high * x; },
      "glued(r_low=" + std::to_string(r_low) + ",r_high=" + std::to_string(r_high) + ")");
}

PositiveFunction PositiveFunction::constant(double c) {
  if (!(c > 0) || !std::isfinite(c)) throw std::invalid_argument("constant must be positive");
  const double level = std::log2(c);
  return PositiveFunction([level](double) { return level; }, "constant");
}

PositiveFunction PositiveFunction::from_linear(std::function<double(double)> psi,
                                               std::string name) {
  return PositiveFunction(
      [psi = std::move(psi)](double x) {
        const double v = psi(std::exp2(x));
        if (!(v > 0) || !std::isfinite(v)) {
          throw std::domain_error("positive function left (0, inf)");
        }
        return std::log2(v);
      },
      std::move(name));
}

PositiveFunction PositiveFunction::of(const ConcaveWeight& w) {
  return PositiveFunction([w](double x) { return w.log2_at(x); },
                          "weight:" + to_string(w.family()));
}

double PositiveFunction::operator()(double t) const {
  if (!(t > 0)) throw std::domain_error("positive function evaluated at t <= 0");
  return std::exp2(log2_psi_(std::log2(t)));
}

PositiveFunction PositiveFunction::root(double q) const {
  if (!(q > 0)) throw std::invalid_argument("root order must be positive");
  return PositiveFunction([f = log2_psi_, q](double x) { return f(x) / q; },
                          name_ + "^(1/q)");
}

}  // namespace symfun
