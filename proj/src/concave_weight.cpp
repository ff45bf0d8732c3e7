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

#include "symfun/concave_weight.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symfun {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr long kMaxOctaves = 100000;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

bool valid_exponent(double r) { return std::isfinite(r) && r > 0.0 && r <= 1.0; }

// log2(2^a + 2^b)
double log2_sum(double a, double b) {
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp2(lo - hi)) / kLn2;
}

}  // namespace

std::string to_string(ConcaveWeight::Family f) {
  switch (f) {
    case ConcaveWeight::Family::Power: return "power";
    case ConcaveWeight::Family::PowerSum: return "powersum";
    case ConcaveWeight::Family::PiecewiseLinearLog: return "plog";
  }
  return "unknown";
}

ConcaveWeight::ConcaveWeight(Family family, double r1, double r2, int start,
                             std::vector<SlopeBlock> blocks)
    : family_(family), r1_(r1), r2_(r2), start_(start), blocks_(std::move(blocks)) {
  switch (family_) {
    case Family::Power:
      require(valid_exponent(r1_), "power weight exponent must lie in (0, 1]");
      break;
    case Family::PowerSum:
      require(valid_exponent(r1_) && valid_exponent(r2_),
              "power-sum weight exponents must lie in (0, 1]");
      break;
    case Family::PiecewiseLinearLog: {
      require(!blocks_.empty(), "slope schedule is empty");
      long total = 0;
      for (const SlopeBlock& b : blocks_) {
        require(std::isfinite(b.exponent) && b.exponent >= 0.0 && b.exponent <= 1.0,
                "slope exponents must lie in [0, 1]");
        require(b.octaves > 0, "slope blocks need a positive octave count");
        total += b.octaves;
      }
      require(total <= kMaxOctaves, "slope schedule is too long");
      require(blocks_.front().exponent > 0.0,
              "the first slope exponent must be positive so that psi(0+) = 0");
      build_table();
      require(is_concave_on_grid(), "piecewise-linear weight fails the concavity check");
      break;
    }
  }
}

ConcaveWeight ConcaveWeight::power(double r) {
  return ConcaveWeight(Family::Power, r, 0.0, 0, {});
}

ConcaveWeight ConcaveWeight::power_sum(double r1, double r2) {
  return ConcaveWeight(Family::PowerSum, r1, r2, 0, {});
}

ConcaveWeight ConcaveWeight::piecewise_linear_log(int start, std::vector<SlopeBlock> blocks) {
  return ConcaveWeight(Family::PiecewiseLinearLog, 0.0, 0.0, start, std::move(blocks));
}

void ConcaveWeight::build_table() {
  std::vector<double> exponents;
  for (const SlopeBlock& b : blocks_) exponents.insert(exponents.end(), b.octaves, b.exponent);
  const double r0 = exponents.front();
  double c = std::exp2(r0) - 1.0;
  double level = start_ * r0;
  log_knots_.assign(1, level);
  rel_slopes_.clear();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0) c = c * std::exp2(exponents[i]) / (1.0 + c);
    rel_slopes_.push_back(c);
    level += std::log2(1.0 + c);
    log_knots_.push_back(level);
  }
  // relative slope on the first octave past the schedule
  rel_slopes_.push_back(c * std::exp2(exponents.back()) / (1.0 + c));
}

std::pair<double, double> ConcaveWeight::knot(long k) const {
  const long last = start_ + static_cast<long>(rel_slopes_.size()) - 1;
  if (k < start_) {
    const double r0 = blocks_.front().exponent;
    return {static_cast<double>(k) * r0, std::exp2(r0) - 1.0};
  }
  if (k <= last) {
    const auto i = static_cast<std::size_t>(k - start_);
    return {log_knots_[i], rel_slopes_[i]};
  }
  const double r = blocks_.back().exponent;
  const double j = static_cast<double>(k - last);
  const double c1 = rel_slopes_.back();
  const double growth = r == 0.0 ? j : std::expm1(r * j * kLn2) / std::expm1(r * kLn2);
  const double ratio = 1.0 + c1 * growth;
  return {log_knots_.back() + std::log2(ratio), c1 * std::exp2(r * j) / ratio};
}

double ConcaveWeight::log2_at(double x) const {
  switch (family_) {
    case Family::Power:
      return r1_ * x;
    case Family::PowerSum:
      return log2_sum(r1_ * x, r2_ * x);
    case Family::PiecewiseLinearLog: {
      if (!std::isfinite(x)) throw std::domain_error("weight evaluated at a non-finite point");
      const double k = std::floor(x);
      const auto [level, c] = knot(static_cast<long>(k));
      return level + std::log1p(c * std::expm1((x - k) * kLn2)) / kLn2;
    }
  }
  return 0.0;
}

double ConcaveWeight::operator()(double t) const {
  if (t < 0) throw std::domain_error("weight evaluated at a negative point");
  if (t == 0) return 0.0;
  switch (family_) {
    case Family::Power:
      return std::pow(t, r1_);
    case Family::PowerSum:
      return std::pow(t, r1_) + std::pow(t, r2_);
    case Family::PiecewiseLinearLog:
      return std::exp2(log2_at(std::log2(t)));
  }
  return 0.0;
}

bool ConcaveWeight::is_concave_on_grid() const {
  double prev_t = 0.0, prev_v = 0.0, prev_slope = std::numeric_limits<double>::infinity();
  for (int j = -80 * 8; j <= 80 * 8; ++j) {
    const double t = std::exp2(j / 8.0);
    const double v = (*this)(t);
    if (!std::isfinite(v) || !(v > prev_v)) return false;
    const double slope = (v - prev_v) / (t - prev_t);
    if (slope > prev_slope * (1.0 + 1e-9)) return false;
    prev_t = t;
    prev_v = v;
    prev_slope = slope;
  }
  return true;
}

bool ConcaveWeight::is_quasi_concave_on_grid() const {
  double prev = -std::numeric_limits<double>::infinity();
  double prev_x = 0.0;
  for (int j = -80 * 8; j <= 80 * 8; ++j) {
    const double x = j / 8.0;
    const double v = log2_at(x);
    if (j > -80 * 8) {
      if (v < prev - 1e-12) return false;
      if (v - x > prev - prev_x + 1e-9) return false;
    }
    prev = v;
    prev_x = x;
  }
  return true;
}

}  // namespace symfun
