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

#include "symfun/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace symfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double l1_of_profile(std::span<const Level> levels) {
  long double total = 0;
  double prev = 0.0;
  for (const Level& l : levels) {
    total += static_cast<long double>(l.value) * (l.end - prev);
    prev = l.end;
  }
  return static_cast<double>(total);
}

std::vector<Level> truncate_profile(std::span<const Level> levels, double end) {
  std::vector<Level> out;
  for (const Level& l : levels) {
    out.push_back({l.value, std::min(l.end, end)});
    if (l.end >= end) break;
  }
  return out;
}

}  // namespace

std::string to_string(SpaceDescriptor::Kind k) {
  switch (k) {
    case SpaceDescriptor::Kind::Lp: return "lp";
    case SpaceDescriptor::Kind::Orlicz: return "orlicz";
    case SpaceDescriptor::Kind::Lorentz: return "lorentz";
    case SpaceDescriptor::Kind::X1: return "x1";
  }
  return "unknown";
}

std::vector<Level> profile(const StepFunction& f) {
  const DistributionFunction d = distribution(f);
  std::vector<Level> out;
  out.reserve(d.levels.size());
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    out.push_back({d.levels[i], to_double(d.measures[i])});
  }
  return out;
}

std::vector<Level> profile_from_pieces(std::vector<std::pair<double, double>> pieces) {
  std::erase_if(pieces, [](const auto& p) { return p.first == 0.0 || p.second <= 0.0; });
  for (auto& p : pieces) p.first = std::fabs(p.first);
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Level> out;
  long double end = 0;
  for (const auto& [value, length] : pieces) {
    end += length;
    if (!out.empty() && out.back().value == value) {
      out.back().end = static_cast<double>(end);
    } else {
      out.push_back({value, static_cast<double>(end)});
    }
  }
  return out;
}

SpaceDescriptor SpaceDescriptor::lp(double p, Domain domain) {
  if (!(p >= 1.0)) throw std::invalid_argument("Lp exponent must be >= 1");
  SpaceDescriptor s;
  s.kind_ = Kind::Lp;
  s.domain_ = domain;
  s.p_ = p;
  return s;
}

SpaceDescriptor SpaceDescriptor::orlicz(OrliczFunction n, Domain domain) {
  SpaceDescriptor s;
  s.kind_ = Kind::Orlicz;
  s.domain_ = domain;
  s.orlicz_ = std::make_shared<const OrliczFunction>(std::move(n));
  s.factor_ = s.orlicz_->inverse(1.0);
  return s;
}

SpaceDescriptor SpaceDescriptor::lorentz(double q, ConcaveWeight psi, Domain domain) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("Lorentz exponent must be finite and >= 1");
  }
  SpaceDescriptor s;
  s.kind_ = Kind::Lorentz;
  s.domain_ = domain;
  s.q_ = q;
  s.weight_ = std::make_shared<const ConcaveWeight>(std::move(psi));
  s.factor_ = std::pow((*s.weight_)(1.0), -1.0 / q);
  return s;
}

SpaceDescriptor SpaceDescriptor::x1(SpaceDescriptor inner) {
  if (inner.domain() != Domain::Unit) {
    throw std::invalid_argument("the extension takes a space on the unit interval");
  }
  SpaceDescriptor s;
  s.kind_ = Kind::X1;
  s.domain_ = Domain::HalfLine;
  s.inner_ = std::make_shared<const SpaceDescriptor>(std::move(inner));
  return s;
}

const OrliczFunction& SpaceDescriptor::orlicz_function() const {
  if (!orlicz_) throw std::logic_error("not an Orlicz space");
  return *orlicz_;
}

const ConcaveWeight& SpaceDescriptor::weight() const {
  if (!weight_) throw std::logic_error("not a Lorentz space");
  return *weight_;
}

const SpaceDescriptor& SpaceDescriptor::inner() const {
  if (!inner_) throw std::logic_error("not an extension space");
  return *inner_;
}

void SpaceDescriptor::check_domain(const StepFunction& f) const {
  if (f.domain() != domain_) {
    throw std::invalid_argument("function domain " + to_string(f.domain()) +
                                " does not match space domain " + to_string(domain_));
  }
}

double SpaceDescriptor::norm(const StepFunction& f) const {
  check_domain(f);
  if (f.is_zero()) return 0.0;
  const std::vector<Level> levels = profile(f);
  if (kind_ == Kind::X1 && f.support_measure() > 1) {
    const std::vector<Level> head = truncate_profile(levels, 1.0);
    const double l1 = to_double(abs(f).integral());
    return std::max(inner_->norm_of_profile(head), l1);
  }
  return norm_of_profile(levels);
}

double SpaceDescriptor::norm_of_profile(std::span<const Level> levels) const {
  if (levels.empty()) return 0.0;
  if (domain_ == Domain::Unit && levels.back().end > 1.0) {
    throw std::domain_error("profile longer than the unit interval");
  }
  if (kind_ == Kind::X1) {
    if (levels.back().end <= 1.0) return inner_->norm_of_profile(levels);
    const std::vector<Level> head = truncate_profile(levels, 1.0);
    return std::max(inner_->norm_of_profile(head), l1_of_profile(levels));
  }
  return factor_ * raw_norm(levels);
}

double SpaceDescriptor::orlicz_modular(std::span<const Level> levels, double u) const {
  const OrliczFunction& n = orlicz_function();
  long double total = 0;
  double prev = 0.0;
  for (const Level& l : levels) {
    total += static_cast<long double>(n(l.value / u)) * (l.end - prev);
    prev = l.end;
  }
  return static_cast<double>(total);
}

double SpaceDescriptor::raw_norm(std::span<const Level> levels) const {
  switch (kind_) {
    case Kind::Lp: {
      if (p_ == kInf) return levels.front().value;
      if (p_ == 1.0) return l1_of_profile(levels);
      long double total = 0;
      double prev = 0.0;
      for (const Level& l : levels) {
        total += std::pow(static_cast<long double>(l.value), static_cast<long double>(p_)) *
                 (l.end - prev);
        prev = l.end;
      }
      return static_cast<double>(std::pow(total, 1.0L / p_));
    }
    case Kind::Lorentz: {
      const ConcaveWeight& psi = *weight_;
      long double total = 0;
      double prev_weight = 0.0;
      for (const Level& l : levels) {
        const double w = psi(l.end);
        total += std::pow(static_cast<long double>(l.value), static_cast<long double>(q_)) *
                 (w - prev_weight);
        prev_weight = w;
      }
      return static_cast<double>(std::pow(total, 1.0L / q_));
    }
    case Kind::Orlicz: {
      const OrliczFunction& n = *orlicz_;
      const double measure = levels.back().end;
      const double sup = levels.front().value;
      const double scale = n.inverse(1.0 / measure);
      double lo = l1_of_profile(levels) / (measure * scale);
      double hi = sup / scale;
      if (!(hi > lo * (1.0 + 1e-15))) return hi;
      const double slack = 1e-9;
      if (orlicz_modular(levels, lo) < 1.0 - slack || orlicz_modular(levels, hi) > 1.0 + slack) {
        throw std::runtime_error("Luxemburg bisection failed to bracket; invalid Orlicz function");
      }
      while (hi / lo - 1.0 > 1e-13) {
        const double mid = std::sqrt(lo) * std::sqrt(hi);
        if (mid <= lo || mid >= hi) break;
        (orlicz_modular(levels, mid) > 1.0 ? lo : hi) = mid;
      }
      return std::sqrt(lo) * std::sqrt(hi);
    }
    case Kind::X1:
      break;
  }
  throw std::logic_error("raw_norm on an extension space");
}

double SpaceDescriptor::fundamental(double t) const {
  if (!(t > 0) || !std::isfinite(t)) throw std::domain_error("fundamental needs t > 0");
  if (domain_ == Domain::Unit && t > 1) {
    throw std::domain_error("fundamental: t beyond the unit interval");
  }
  switch (kind_) {
    case Kind::Lp:
      return p_ == kInf ? 1.0 : std::pow(t, 1.0 / p_);
    case Kind::Orlicz:
      return factor_ / orlicz_->inverse(1.0 / t);
    case Kind::Lorentz:
      return std::pow((*weight_)(t) / (*weight_)(1.0), 1.0 / q_);
    case Kind::X1:
      return std::max(inner_->fundamental(std::min(t, 1.0)), t);
  }
  return 0.0;
}

double SpaceDescriptor::log2_fundamental(double x) const {
  switch (kind_) {
    case Kind::Lp:
      return p_ == kInf ? 0.0 : x / p_;
    case Kind::Orlicz:
      return orlicz_->log2_inverse(0.0) - orlicz_->log2_inverse(-x);
    case Kind::Lorentz:
      return (weight_->log2_at(x) - weight_->log2_at(0.0)) / q_;
    case Kind::X1:
      return std::max(inner_->log2_fundamental(std::min(x, 0.0)), x);
  }
  return 0.0;
}

bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  if (a.kind_ != b.kind_ || a.domain_ != b.domain_) return false;
  switch (a.kind_) {
    case SpaceDescriptor::Kind::Lp: return a.p_ == b.p_;
    case SpaceDescriptor::Kind::Orlicz: return *a.orlicz_ == *b.orlicz_;
    case SpaceDescriptor::Kind::Lorentz: return a.q_ == b.q_ && *a.weight_ == *b.weight_;
    case SpaceDescriptor::Kind::X1: return *a.inner_ == *b.inner_;
  }
  return false;
}

PositiveFunction SpaceDescriptor::fundamental_function() const {
  SpaceDescriptor copy = *this;
  return PositiveFunction([copy](double x) { return copy.log2_fundamental(x); },
                          "phi:" + to_string(kind_));
}

}  // namespace symfun
