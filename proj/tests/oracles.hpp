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

// Brute-force references. Nothing here calls into the library beyond reading
// the raw breakpoints and values of a StepFunction.

#ifndef SYMFUN_TESTS_ORACLES_HPP_
#define SYMFUN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "symfun/step_function.hpp"

namespace oracle {

using Q = mpq_class;

struct Piece {
  Q lo, hi;
  double value;
};

/// Raw pieces straight from the representation, including zero ones.
inline std::vector<Piece> pieces(const symfun::StepFunction& f) {
  std::vector<Piece> out;
  Q prev = 0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    out.push_back({prev, f.breakpoints()[i], f.values()[i]});
    prev = f.breakpoints()[i];
  }
  return out;
}

/// f(t) with the (lo, hi] convention, by linear scan.
inline double eval(const symfun::StepFunction& f, const Q& t) {
  for (const Piece& p : pieces(f)) {
    if (t > p.lo && t <= p.hi) return p.value;
  }
  return 0.0;
}

inline Q integral(const symfun::StepFunction& f, const Q& a, const Q& b) {
  Q total = 0;
  for (const Piece& p : pieces(f)) {
    const Q lo = std::max(a, p.lo), hi = std::min(b, p.hi);
    if (hi > lo) total += Q(p.value) * (hi - lo);
  }
  return total;
}

inline Q measure_above(const symfun::StepFunction& f, double tau) {
  Q total = 0;
  for (const Piece& p : pieces(f)) {
    if (std::fabs(p.value) > tau) total += p.hi - p.lo;
  }
  return total;
}

/// (|v|, length) sorted by |v| descending, zeros dropped.
inline std::vector<std::pair<double, long double>> decreasing_profile(
    const symfun::StepFunction& f) {
  std::vector<std::pair<double, long double>> out;
  for (const Piece& p : pieces(f)) {
    if (p.value != 0.0) out.emplace_back(std::fabs(p.value), Q(p.hi - p.lo).get_d());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

inline long double lp_norm(const symfun::StepFunction& f, double p) {
  long double total = 0, mx = 0;
  for (const auto& [v, len] : decreasing_profile(f)) {
    mx = std::max<long double>(mx, v);
    total += std::pow(static_cast<long double>(v), static_cast<long double>(p)) * len;
  }
  if (std::isinf(p)) return mx;
  return std::pow(total, 1.0L / p);
}

/// Lorentz norm from the sorted profile, divided by psi(1)^{1/q}.
inline long double lorentz_norm(const symfun::StepFunction& f, double q,
                                const std::function<long double(long double)>& psi) {
  long double total = 0, end = 0;
  for (const auto& [v, len] : decreasing_profile(f)) {
    const long double next = end + len;
    total += std::pow(static_cast<long double>(v), static_cast<long double>(q)) *
             (psi(next) - psi(end));
    end = next;
  }
  return std::pow(total / psi(1.0L), 1.0L / q);
}

/// Luxemburg norm by plain bisection over u in [2^-200, 2^200], normalized by
/// the indicator of (0, 1].
inline long double luxemburg(const symfun::StepFunction& f,
                             const std::function<long double(long double)>& n) {
  const auto prof = decreasing_profile(f);
  if (prof.empty()) return 0;
  const auto modular = [&](long double u) {
    long double total = 0;
    for (const auto& [v, len] : prof) total += n(v / u) * len;
    return total;
  };
  long double lo = -200, hi = 200;  // log2 u
  for (int i = 0; i < 400; ++i) {
    const long double mid = (lo + hi) / 2;
    (modular(std::exp2(mid)) > 1 ? lo : hi) = mid;
  }
  // N^{-1}(1)
  long double a = -200, b = 200;
  for (int i = 0; i < 400; ++i) {
    const long double mid = (a + b) / 2;
    (n(std::exp2(mid)) > 1 ? b : a) = mid;
  }
  return std::exp2(hi) * std::exp2(b);
}

/// Piecewise-linear concave weight built octave by octave in long double.
/// Slope on octave k is the slope on octave k-1 times 2^{r_k - 1}; below
/// `start` psi(2^k) = 2^{k r_0}; after the schedule the last exponent repeats.
struct PlogWeight {
  int start;
  std::vector<double> exponents;  // one per octave from start

  double exponent_at(long k) const {
    if (k < start) return exponents.front();
    const auto i = static_cast<std::size_t>(k - start);
    return i < exponents.size() ? exponents[i] : exponents.back();
  }

  /// psi(2^x) for x anywhere; octaves below start are geometric.
  long double operator()(long double x) const {
    const long k = static_cast<long>(std::floor(x));
    const double r0 = exponents.front();
    long double value = 0, slope = 0;  // psi(2^j), slope on octave j
    long j = 0;
    if (k < start) {
      value = std::exp2(static_cast<long double>(k) * r0);
      slope = value * (std::exp2(static_cast<long double>(r0)) - 1) / std::exp2((long double)k);
      j = k;
    } else {
      value = std::exp2(static_cast<long double>(start) * r0);
      slope = value * (std::exp2(static_cast<long double>(r0)) - 1) /
              std::exp2(static_cast<long double>(start));
      for (j = start; j < k; ++j) {
        value += slope * std::exp2(static_cast<long double>(j));
        slope *= std::exp2(static_cast<long double>(exponent_at(j + 1)) - 1);
      }
    }
    return value + slope * (std::exp2(x) - std::exp2(static_cast<long double>(j)));
  }
};

inline std::vector<double> expand_blocks(const std::vector<std::pair<double, int>>& blocks) {
  std::vector<double> out;
  for (const auto& [r, count] : blocks) out.insert(out.end(), static_cast<std::size_t>(count), r);
  return out;
}

/// sup of log2 psi(2^{x + log2_t}) - log2 psi(2^x) over `points` log-uniform x
/// in [x_lo, x_hi], endpoints included.
inline long double dense_log2_dilation(const std::function<long double(long double)>& log2_psi,
                                       long double log2_t, long double x_lo, long double x_hi,
                                       int points = 10000) {
  long double best = -INFINITY;
  for (int i = 0; i < points; ++i) {
    const long double x = x_lo + (x_hi - x_lo) * i / (points - 1);
    best = std::max(best, log2_psi(x + log2_t) - log2_psi(x));
  }
  return best;
}

/// Index k with t in (2^k, 2^{k+1}], by repeated halving.
inline int block_of(const Q& t) {
  int k = 0;
  Q lo = 1;
  while (t <= lo) {
    lo /= 2;
    --k;
  }
  while (t > 2 * lo) {
    lo *= 2;
    ++k;
  }
  return k;
}

/// Sequence shift straight from the definition, with truncation predicates.
inline std::map<int, double> shift(const std::map<int, double>& a, int n,
                                   const std::function<bool(int)>& keep) {
  std::map<int, double> out;
  for (const auto& [k, v] : a) {
    if (keep(k) && keep(k + n) && v != 0.0) out[k + n] = v;
  }
  return out;
}

/// Deterministic test-side sampler.
struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  int integer(int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double uniform() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
  /// m/8 with 0 < |m| <= 16.
  double dyadic(bool positive = false) {
    int m = 0;
    while (m == 0) m = integer(positive ? 1 : -16, 16);
    return m / 8.0;
  }

  /// Random step function with breakpoints j/den in (0, limit].
  symfun::StepFunction step(symfun::Domain domain, long den, long limit_num, int max_pieces = 6,
                            bool positive = false) {
    std::vector<Q> knots;
    const int count = integer(1, max_pieces);
    for (int i = 0; i < count; ++i) {
      Q q(integer(1, static_cast<int>(limit_num)), den);
      q.canonicalize();
      knots.push_back(q);
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    std::vector<double> values;
    for (std::size_t i = 0; i < knots.size(); ++i) {
      values.push_back(integer(0, 5) == 0 ? 0.0 : dyadic(positive));
    }
    return symfun::StepFunction(domain, std::move(knots), std::move(values));
  }

  std::map<int, double> sequence(int lo, int hi, int max_entries = 6) {
    std::map<int, double> a;
    const int count = integer(1, max_entries);
    for (int i = 0; i < count; ++i) a[integer(lo, hi)] = dyadic();
    return a;
  }
};

}  // namespace oracle

#endif  // SYMFUN_TESTS_ORACLES_HPP_
