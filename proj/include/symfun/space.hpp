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

#ifndef SYMFUN_SPACE_HPP_
#define SYMFUN_SPACE_HPP_

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "symfun/concave_weight.hpp"
#include "symfun/orlicz.hpp"
#include "symfun/positive_function.hpp"
#include "symfun/step_function.hpp"

namespace symfun {

/// One level of a nonincreasing profile: value on (previous end, end].
struct Level {
  double value = 0.0;
  double end = 0.0;
};

/// Profile of f*: strictly decreasing positive values with increasing ends.
std::vector<Level> profile(const StepFunction& f);

/// Sorts arbitrary (value, length) pieces into a profile; zero values dropped.
std::vector<Level> profile_from_pieces(std::vector<std::pair<double, double>> pieces);

/// Closed description of a rearrangement-invariant space, normalized so that
/// the indicator of (0, 1] has norm 1.
class SpaceDescriptor {
 public:
  enum class Kind { Lp, Orlicz, Lorentz, X1 };

  static SpaceDescriptor lp(double p, Domain domain = Domain::Unit);
  static SpaceDescriptor orlicz(OrliczFunction n, Domain domain = Domain::Unit);
  static SpaceDescriptor lorentz(double q, ConcaveWeight psi, Domain domain = Domain::Unit);
  /// Half-line extension: max(||f* chi_(0,1]||_inner, ||f||_L1). Inner on Unit.
  static SpaceDescriptor x1(SpaceDescriptor inner);

  Kind kind() const { return kind_; }
  Domain domain() const { return domain_; }
  /// Lp exponent (may be inf).
  double p() const { return p_; }
  /// Lorentz exponent.
  double q() const { return q_; }
  const OrliczFunction& orlicz_function() const;
  const ConcaveWeight& weight() const;
  const SpaceDescriptor& inner() const;
  /// Factor applied to the raw norm so that ||chi_(0,1]|| = 1.
  double normalization() const { return factor_; }

  double norm(const StepFunction& f) const;
  double norm_of_profile(std::span<const Level> levels) const;

  /// ||chi_(0,t]||.
  double fundamental(double t) const;
  /// log2 of fundamental(2^x).
  double log2_fundamental(double x) const;
  PositiveFunction fundamental_function() const;

  /// Raw Luxemburg modular sum N(v/u) len over a profile.
  double orlicz_modular(std::span<const Level> levels, double u) const;

  /// Parameter-wise equality.
  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b);

 private:
  SpaceDescriptor() = default;
  double raw_norm(std::span<const Level> levels) const;
  void check_domain(const StepFunction& f) const;

  Kind kind_ = Kind::Lp;
  Domain domain_ = Domain::Unit;
  double p_ = 1.0;
  double q_ = 1.0;
  double factor_ = 1.0;
  std::shared_ptr<const OrliczFunction> orlicz_;
  std::shared_ptr<const ConcaveWeight> weight_;
  std::shared_ptr<const SpaceDescriptor> inner_;
};

std::string to_string(SpaceDescriptor::Kind k);

}  // namespace symfun

#endif  // SYMFUN_SPACE_HPP_
