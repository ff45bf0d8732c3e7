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

#ifndef SYMFUN_STEP_FUNCTION_HPP_
#define SYMFUN_STEP_FUNCTION_HPP_

#include <span>
#include <string>
#include <vector>

#include "symfun/rational.hpp"

namespace symfun {

/// Underlying measure space: [0,1] or (0,inf), both with Lebesgue measure.
enum class Domain { Unit, HalfLine };

std::string to_string(Domain d);

/// One piece (lo, hi] of a step function.
struct Segment {
  Rational lo;
  Rational hi;
  double value = 0.0;
};

/// A finitely supported piecewise-constant function.
///
/// Breakpoints t_1 < ... < t_M are exact rationals with implicit t_0 = 0;
/// `values[i]` is the value on (t_{i-1}, t_i] and the function vanishes on
/// (t_M, inf). The representation is canonical: equal neighbours are merged
/// and trailing zero pieces are dropped, so two step functions are equal
/// a.e. iff they compare equal. The zero function has no breakpoints.
class StepFunction {
 public:
  explicit StepFunction(Domain domain = Domain::HalfLine);
  StepFunction(Domain domain, std::vector<Rational> breakpoints,
               std::vector<double> values);

  /// c * indicator of (lo, hi].
  static StepFunction indicator(Domain domain, const Rational& lo,
                                const Rational& hi, double c = 1.0);

  /// Builds from pieces sorted by `lo` with pairwise disjoint interiors;
  /// gaps are filled with zero.
  static StepFunction from_segments(Domain domain, std::vector<Segment> pieces);

  Domain domain() const { return domain_; }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  /// Right end of the support (0 for the zero function).
  Rational support_end() const;
  /// Lebesgue measure of {f != 0}.
  Rational support_measure() const;

  /// Value at t > 0, with the (t_{i-1}, t_i] convention.
  double operator()(const Rational& t) const;
  double operator()(double t) const;

  /// All pieces, zero pieces included, starting at 0.
  std::vector<Segment> segments() const;

  /// Exact integral of f over (lo, hi]; the double values are taken exactly.
  Rational integral(const Rational& lo, const Rational& hi) const;
  Rational integral() const;

  double sup_abs() const;
  bool is_nonnegative() const;
  bool is_nonincreasing() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  Domain domain_;
  std::vector<Rational> breaks_;
  std::vector<double> values_;
};

std::string to_string(const StepFunction& f);

/// Level sets of |f|: levels[i] strictly decreasing and positive,
/// measures[i] = m{|f| >= levels[i]} nondecreasing. The last measure equals
/// the support measure.
struct DistributionFunction {
  std::vector<double> levels;
  std::vector<Rational> measures;

  /// m{|f| > tau} for tau >= 0.
  Rational measure_above(double tau) const;
  friend bool operator==(const DistributionFunction&,
                         const DistributionFunction&) = default;
};

DistributionFunction distribution(const StepFunction& f);

/// Right-continuous nonincreasing rearrangement f* of |f|.
StepFunction rearrange(const StepFunction& f);

/// True iff m{|f| > tau} and m{|g| > tau} differ by at most `tol` for all tau.
bool equimeasurable(const StepFunction& f, const StepFunction& g, double tol = 0.0);

enum class DilationMode {
  Full,           ///< x(t/tau) on (0, inf); half-line only
  UnitTruncated,  ///< x(t/tau) on [0, min(1, tau)]; unit interval only
  ZeroPart        ///< chi_[0,1] * Full(x chi_[0,1]); half-line only
};

StepFunction dilate(const StepFunction& f, const Rational& tau, DilationMode mode);
StepFunction dilate(const StepFunction& f, double tau, DilationMode mode);

/// Membership in the tail set: f = c chi_[1,2] + g with c > 0,
/// supp g in (2, inf) and |g| <= c. For n < 0 the test is applied to the
/// dilation of f by 2^n; for n >= 0 to f itself.
bool in_G_set(const StepFunction& f, int n = 0);

/// t -> f(t - h). Throws std::domain_error if the shifted support leaves the
/// domain.
StepFunction translate(const StepFunction& f, const Rational& h);

/// sum_k coeffs[k] * parts[k] for pairwise disjointly supported parts.
/// Throws std::invalid_argument on overlapping supports.
StepFunction disjoint_sum(std::span<const double> coeffs,
                          std::span<const StepFunction> parts);

/// f * chi_(lo, hi].
StepFunction restrict_to(const StepFunction& f, const Rational& lo, const Rational& hi);

/// Same function viewed on another domain; Unit requires support in [0,1].
StepFunction with_domain(const StepFunction& f, Domain domain);

StepFunction scale(const StepFunction& f, double c);
StepFunction abs(const StepFunction& f);
StepFunction add(const StepFunction& f, const StepFunction& g);

/// f(t) <= g(t) for every t > 0.
bool pointwise_le(const StepFunction& f, const StepFunction& g);

}  // namespace symfun

#endif  // SYMFUN_STEP_FUNCTION_HPP_
