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

#include "symfun/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symfun {

namespace {

constexpr double kE = std::numbers::e;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string to_string(OrliczFunction::Family f) {
  switch (f) {
    case OrliczFunction::Family::Power: return "power";
    case OrliczFunction::Family::PowerLog: return "powerlog";
    case OrliczFunction::Family::PiecewisePower: return "piecewise";
  }
  return "unknown";
}

OrliczFunction::OrliczFunction(Family family, double p, double a, double p_high,
                               double knot)
    : family_(family), p_(p), a_(a), p_high_(p_high), knot_(knot) {
  validate();
}

OrliczFunction OrliczFunction::power(double p) {
  return OrliczFunction(Family::Power, p, 0.0, 0.0, 0.0);
}

OrliczFunction OrliczFunction::power_log(double p, double a) {
  return OrliczFunction(Family::PowerLog, p, a, 0.0, 0.0);
}

OrliczFunction OrliczFunction::piecewise_power(double p_low, double p_high, double knot) {
  return OrliczFunction(Family::PiecewisePower, p_low, 0.0, p_high, knot);
}

void OrliczFunction::validate() const {
  require(std::isfinite(p_) && p_ >= 1.0, "Orlicz exponent must be finite and >= 1");
  switch (family_) {
    case Family::Power:
      return;
    case Family::PowerLog:
      require(std::isfinite(a_), "PowerLog log exponent must be finite");
      break;
    case Family::PiecewisePower:
      require(std::isfinite(p_high_) && p_high_ >= 1.0,
              "PiecewisePower upper exponent must be finite and >= 1");
      require(std::isfinite(knot_) && knot_ > 0.0, "PiecewisePower knot must be positive");
      break;
  }
  require(is_convex_on_grid(), "Orlicz function fails the convexity check");
}

double OrliczFunction::operator()(double u) const {
  if (u < 0) throw std::domain_error("Orlicz function evaluated at a negative point");
  if (u == 0) return 0.0;
  switch (family_) {
    case Family::Power:
      return std::pow(u, p_);
    case Family::PowerLog:
      return std::pow(u, p_) * std::pow(std::log(kE + u), a_);
    case Family::PiecewisePower:
      if (u <= knot_) return std::pow(u, p_);
      return std::pow(knot_, p_) * std::pow(u / knot_, p_high_);
  }
  return 0.0;
}

double OrliczFunction::log2_at(double x) const {
  switch (family_) {
    case Family::Power:
      return p_ * x;
    case Family::PowerLog:
      return p_ * x + a_ * std::log2(std::log(kE + std::exp2(x)));
    case Family::PiecewisePower: {
      const double lk = std::log2(knot_);
      return x <= lk ? p_ * x : p_ * lk + p_high_ * (x - lk);
    }
  }
  return 0.0;
}

double OrliczFunction::log2_inverse(double y) const {
  switch (family_) {
    case Family::Power:
      return y / p_;
    case Family::PiecewisePower: {
      const double lk = std::log2(knot_);
      const double yk = p_ * lk;
      return y <= yk ? y / p_ : lk + (y - yk) / p_high_;
    }
    case Family::PowerLog:
      break;
  }
  // log2_at is strictly increasing; bracket around the pure-power guess
  double lo = y / p_ - 1.0;
  double hi = y / p_ + 1.0;
  for (int i = 0; log2_at(lo) > y; ++i) {
    if (i > 2000) throw std::runtime_error("Orlicz inverse: bracket search failed");
    lo -= (hi - lo);
  }
  for (int i = 0; log2_at(hi) < y; ++i) {
    if (i > 2000) throw std::runtime_error("Orlicz inverse: bracket search failed");
    hi += (hi - lo);
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (log2_at(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double OrliczFunction::inverse(double v) const {
  if (v < 0) throw std::domain_error("Orlicz inverse evaluated at a negative point");
  if (v == 0) return 0.0;
  if (family_ == Family::Power) return std::pow(v, 1.0 / p_);
  return std::exp2(log2_inverse(std::log2(v)));
}

double OrliczFunction::delta2_infinity() const {
  double worst = 0.0;
  for (int j = 0; j <= 40 * 8; ++j) {
    const double x = j / 8.0;
    worst = std::max(worst, std::exp2(log2_at(x + 1.0) - log2_at(x)));
  }
  return worst;
}

bool OrliczFunction::is_convex_on_grid() const {
  std::vector<double> us;
  for (int j = -30 * 16; j <= 30 * 16; ++j) us.push_back(std::exp2(j / 16.0));
  if (family_ == Family::PiecewisePower) {
    us.push_back(knot_);
    std::sort(us.begin(), us.end());
  }
  double prev_u = 0.0, prev_n = 0.0, prev_slope = 0.0;
  for (double u : us) {
    if (u <= prev_u) continue;
    const double n = (*this)(u);
    if (!std::isfinite(n) || !(n > prev_n)) return false;
    const double slope = (n - prev_n) / (u - prev_u);
    if (slope < prev_slope - 1e-10 * std::fabs(slope)) return false;
    prev_u = u;
    prev_n = n;
    prev_slope = slope;
  }
  return true;
}

}  // namespace symfun
