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

#include "symfun/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symfun {

namespace {

double clean(double v) { return v == 0.0 ? 0.0 : v; }  // folds -0.0

template <typename Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  if (f.domain() != g.domain()) {
    throw std::invalid_argument("step functions live on different domains");
  }
  std::vector<Rational> knots;
  knots.reserve(f.size() + g.size());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(),
             g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(knots));
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::vector<double> values;
  values.reserve(knots.size());
  std::size_t i = 0, j = 0;
  for (const Rational& t : knots) {
    while (i < f.size() && f.breakpoints()[i] < t) ++i;
    while (j < g.size() && g.breakpoints()[j] < t) ++j;
    const double fv = i < f.size() ? f.values()[i] : 0.0;
    const double gv = j < g.size() ? g.values()[j] : 0.0;
    values.push_back(op(fv, gv));
  }
  return StepFunction(f.domain(), std::move(knots), std::move(values));
}

}  // namespace

std::string to_string(Domain d) { return d == Domain::Unit ? "unit" : "halfline"; }

StepFunction::StepFunction(Domain domain) : domain_(domain) {}

StepFunction::StepFunction(Domain domain, std::vector<Rational> breakpoints,
                           std::vector<double> values)
    : domain_(domain) {
  if (breakpoints.size() != values.size()) {
    throw std::invalid_argument("breakpoints and values differ in length");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const Rational& prev = i == 0 ? Rational(0) : breakpoints[i - 1];
    if (!(breakpoints[i] > prev)) {
      throw std::invalid_argument("breakpoints must be positive and strictly increasing");
    }
    if (!std::isfinite(values[i])) throw std::invalid_argument("non-finite step value");
  }
  if (domain == Domain::Unit && !breakpoints.empty() && breakpoints.back() > 1) {
    throw std::domain_error("breakpoint beyond 1 on the unit interval");
  }
  // merge equal neighbours, then drop the trailing zero run
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = clean(values[i]);
    if (!values_.empty() && values_.back() == v) {
      breaks_.back() = std::move(breakpoints[i]);
    } else {
      breaks_.push_back(std::move(breakpoints[i]));
      values_.push_back(v);
    }
  }
  if (!values_.empty() && values_.back() == 0.0) {
    breaks_.pop_back();
    values_.pop_back();
  }
}

StepFunction StepFunction::indicator(Domain domain, const Rational& lo,
                                     const Rational& hi, double c) {
  if (lo < 0 || !(hi > lo)) throw std::invalid_argument("indicator needs 0 <= lo < hi");
  if (lo == 0) return StepFunction(domain, {hi}, {c});
  return StepFunction(domain, {lo, hi}, {0.0, c});
}

StepFunction StepFunction::from_segments(Domain domain, std::vector<Segment> pieces) {
  std::vector<Rational> knots;
  std::vector<double> values;
  Rational cursor = 0;
  for (Segment& s : pieces) {
    if (!(s.hi > s.lo)) continue;
    if (s.lo < cursor) throw std::invalid_argument("overlapping segments");
    if (s.lo > cursor) {
      knots.push_back(s.lo);
      values.push_back(0.0);
    }
    cursor = s.hi;
    knots.push_back(std::move(s.hi));
    values.push_back(s.value);
  }
  return StepFunction(domain, std::move(knots), std::move(values));
}

Rational StepFunction::support_end() const {
  return breaks_.empty() ? Rational(0) : breaks_.back();
}

Rational StepFunction::support_measure() const {
  Rational total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (values_[i] != 0.0) total += breaks_[i] - (i == 0 ? Rational(0) : breaks_[i - 1]);
  }
  return total;
}

double StepFunction::operator()(const Rational& t) const {
  if (t <= 0) throw std::domain_error("step functions are evaluated at t > 0");
  const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
  if (it == breaks_.end()) return 0.0;
  return values_[static_cast<std::size_t>(it - breaks_.begin())];
}

double StepFunction::operator()(double t) const { return (*this)(to_rational(t)); }

std::vector<Segment> StepFunction::segments() const {
  std::vector<Segment> out;
  out.reserve(size());
  Rational lo = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    out.push_back({lo, breaks_[i], values_[i]});
    lo = breaks_[i];
  }
  return out;
}

Rational StepFunction::integral(const Rational& lo, const Rational& hi) const {
  Rational total = 0;
  Rational left = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    const Rational& right = breaks_[i];
    if (right > lo && left < hi && values_[i] != 0.0) {
      const Rational a = left > lo ? left : lo;
      const Rational b = right < hi ? right : hi;
      total += Rational(values_[i]) * (b - a);
    }
    if (right >= hi) break;
    left = right;
  }
  return total;
}

Rational StepFunction::integral() const {
  return is_zero() ? Rational(0) : integral(0, support_end());
}

double StepFunction::sup_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

bool StepFunction::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

bool StepFunction::is_nonincreasing() const {
  return std::is_sorted(values_.begin(), values_.end(), std::greater<>());
}

std::string to_string(const StepFunction& f) {
  std::ostringstream os;
  os << "StepFunction[" << to_string(f.domain()) << "]{";
  for (const Segment& s : f.segments()) {
    os << " (" << s.lo.get_str() << "," << s.hi.get_str() << "]:" << s.value;
  }
  os << " }";
  return os.str();
}

Rational DistributionFunction::measure_above(double tau) const {
  Rational m = 0;
  for (std::size_t i = 0; i < levels.size() && levels[i] > tau; ++i) m = measures[i];
  return m;
}

DistributionFunction distribution(const StepFunction& f) {
  std::vector<std::pair<double, Rational>> pieces;
  for (const Segment& s : f.segments()) {
    if (s.value != 0.0) pieces.emplace_back(std::fabs(s.value), s.hi - s.lo);
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  DistributionFunction d;
  Rational cumulative = 0;
  for (auto& [level, length] : pieces) {
    cumulative += length;
    if (!d.levels.empty() && d.levels.back() == level) {
      d.measures.back() = cumulative;
    } else {
      d.levels.push_back(level);
      d.measures.push_back(cumulative);
    }
  }
  return d;
}

StepFunction rearrange(const StepFunction& f) {
  const DistributionFunction d = distribution(f);
  return StepFunction(f.domain(), d.measures, d.levels);
}

bool equimeasurable(const StepFunction& f, const StepFunction& g, double tol) {
  if (tol < 0) throw std::invalid_argument("equimeasurable: negative tolerance");
  const DistributionFunction df = distribution(f);
  const DistributionFunction dg = distribution(g);
  if (tol == 0.0) return df == dg;
  // the difference of the two distribution functions only changes at levels
  std::vector<double> probes = df.levels;
  probes.insert(probes.end(), dg.levels.begin(), dg.levels.end());
  probes.push_back(0.0);
  for (double tau : probes) {
    const double gap = to_double(abs(df.measure_above(tau) - dg.measure_above(tau)));
    if (gap > tol) return false;
  }
  return true;
}

StepFunction restrict_to(const StepFunction& f, const Rational& lo, const Rational& hi) {
  std::vector<Segment> pieces;
  for (Segment& s : f.segments()) {
    if (s.hi <= lo || s.lo >= hi || s.value == 0.0) continue;
    if (s.lo < lo) s.lo = lo;
    if (s.hi > hi) s.hi = hi;
    pieces.push_back(std::move(s));
  }
  return StepFunction::from_segments(f.domain(), std::move(pieces));
}

StepFunction with_domain(const StepFunction& f, Domain domain) {
  return StepFunction(domain, f.breakpoints(), f.values());
}

StepFunction dilate(const StepFunction& f, const Rational& tau, DilationMode mode) {
  if (tau <= 0) throw std::invalid_argument("dilation factor must be positive");
  const bool half_line = f.domain() == Domain::HalfLine;
  if ((mode == DilationMode::UnitTruncated) == half_line) {
    throw std::invalid_argument("dilation mode does not match the function's domain");
  }
  const auto scaled = [&tau](const StepFunction& g) {
    std::vector<Rational> knots = g.breakpoints();
    for (Rational& t : knots) t *= tau;
    return std::make_pair(std::move(knots), g.values());
  };
  switch (mode) {
    case DilationMode::Full: {
      auto [knots, values] = scaled(f);
      return StepFunction(Domain::HalfLine, std::move(knots), std::move(values));
    }
    case DilationMode::UnitTruncated: {
      auto [knots, values] = scaled(f);
      const StepFunction wide(Domain::HalfLine, std::move(knots), std::move(values));
      return with_domain(restrict_to(wide, 0, 1), Domain::Unit);
    }
    case DilationMode::ZeroPart: {
      auto [knots, values] = scaled(restrict_to(f, 0, 1));
      const StepFunction wide(Domain::HalfLine, std::move(knots), std::move(values));
      return restrict_to(wide, 0, 1);
    }
  }
  throw std::logic_error("unreachable dilation mode");
}

StepFunction dilate(const StepFunction& f, double tau, DilationMode mode) {
  if (!(tau > 0) || !std::isfinite(tau)) {
    throw std::invalid_argument("dilation factor must be positive");
  }
  return dilate(f, to_rational(tau), mode);
}

bool in_G_set(const StepFunction& f, int n) {
  if (f.domain() != Domain::HalfLine) {
    throw std::invalid_argument("the tail set is defined on the half-line");
  }
  const StepFunction g = n < 0 ? dilate(f, pow2(n), DilationMode::Full) : f;
  double c = 0.0;
  bool head_seen = false;
  for (const Segment& s : g.segments()) {
    if (s.lo < 1 && s.value != 0.0) return false;  // must vanish on (0,1]
    if (s.hi > 1 && s.lo < 2) {                     // touches (1,2]
      if (!head_seen) {
        c = s.value;
        head_seen = true;
      }
      if (s.value != c) return false;
    }
    if (s.hi > 2 && std::fabs(s.value) > c) return false;
  }
  // the head must cover all of (1,2]
  return head_seen && c > 0.0 && g.support_end() >= 2;
}

StepFunction translate(const StepFunction& f, const Rational& h) {
  std::vector<Segment> pieces;
  for (Segment& s : f.segments()) {
    if (s.value == 0.0) continue;
    s.lo += h;
    s.hi += h;
    if (s.lo < 0) throw std::domain_error("translate: support leaves (0, inf)");
    if (f.domain() == Domain::Unit && s.hi > 1) {
      throw std::domain_error("translate: support leaves [0,1]");
    }
    pieces.push_back(std::move(s));
  }
  return StepFunction::from_segments(f.domain(), std::move(pieces));
}

StepFunction disjoint_sum(std::span<const double> coeffs,
                          std::span<const StepFunction> parts) {
  if (coeffs.size() != parts.size()) {
    throw std::invalid_argument("disjoint_sum: coefficient/part count mismatch");
  }
  if (parts.empty()) return StepFunction();
  const Domain domain = parts.front().domain();
  std::vector<Segment> pieces;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].domain() != domain) {
      throw std::invalid_argument("disjoint_sum: parts on different domains");
    }
    for (Segment& s : parts[k].segments()) {
      if (s.value == 0.0) continue;
      s.value *= coeffs[k];
      pieces.push_back(std::move(s));
    }
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].lo < pieces[i - 1].hi) {
      throw std::invalid_argument("disjoint_sum: supports overlap");
    }
  }
  return StepFunction::from_segments(domain, std::move(pieces));
}

StepFunction scale(const StepFunction& f, double c) {
  std::vector<double> values = f.values();
  for (double& v : values) v *= c;
  return StepFunction(f.domain(), f.breakpoints(), std::move(values));
}

StepFunction abs(const StepFunction& f) {
  std::vector<double> values = f.values();
  for (double& v : values) v = std::fabs(v);
  return StepFunction(f.domain(), f.breakpoints(), std::move(values));
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](double a, double b) { return a + b; });
}

bool pointwise_le(const StepFunction& f, const StepFunction& g) {
  bool ok = true;
  combine(f, g, [&ok](double a, double b) {
    if (a > b) ok = false;
    return 0.0;
  });
  // beyond both supports both functions vanish
  return ok;
}

}  // namespace symfun
