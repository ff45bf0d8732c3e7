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

#ifndef SYMFUN_CONCAVE_WEIGHT_HPP_
#define SYMFUN_CONCAVE_WEIGHT_HPP_

#include <string>
#include <vector>

namespace symfun {

/// Run of octaves sharing one slope exponent.
struct SlopeBlock {
  double exponent = 0.0;  ///< in [0, 1]
  int octaves = 0;
  friend bool operator==(const SlopeBlock&, const SlopeBlock&) = default;
};

/// Increasing concave weight psi on (0, inf) with psi(0+) = 0.
///
///   Power(r):       t^r, 0 < r <= 1
///   PowerSum(r1,r2): t^r1 + t^r2
///   PiecewiseLinearLog(start, blocks):
///     concave, linear on every octave [2^k, 2^{k+1}], with the slope on
///     octave k equal to the slope on octave k-1 times 2^{r_k - 1}. The
///     schedule r_k is read from `blocks` starting at octave `start`; below
///     `start` the first exponent is continued geometrically (psi(2t) =
///     2^{r_0} psi(t) at the knots) and above the last block the last
///     exponent is continued. Octave exponents r_k in [0, 1] keep psi
///     concave; mixing small and large exponents gives distinct lower and
///     upper dilation indices.
class ConcaveWeight {
 public:
  enum class Family { Power, PowerSum, PiecewiseLinearLog };

  static ConcaveWeight power(double r);
  static ConcaveWeight power_sum(double r1, double r2);
  static ConcaveWeight piecewise_linear_log(int start, std::vector<SlopeBlock> blocks);

  Family family() const { return family_; }
  double r1() const { return r1_; }
  double r2() const { return r2_; }
  int start() const { return start_; }
  const std::vector<SlopeBlock>& blocks() const { return blocks_; }

  double operator()(double t) const;
  /// log2 psi(2^x).
  double log2_at(double x) const;

  /// psi increasing and concave on a log grid over [2^-80, 2^80].
  bool is_concave_on_grid() const;
  /// psi nondecreasing and psi(t)/t nonincreasing on the same grid.
  bool is_quasi_concave_on_grid() const;

  friend bool operator==(const ConcaveWeight& a, const ConcaveWeight& b) {
    return a.family_ == b.family_ && a.r1_ == b.r1_ && a.r2_ == b.r2_ &&
           a.start_ == b.start_ && a.blocks_ == b.blocks_;
  }

 private:
  ConcaveWeight(Family family, double r1, double r2, int start,
                std::vector<SlopeBlock> blocks);
  void build_table();
  /// (log2 psi(2^k), relative slope on octave k) for any integer k.
  std::pair<double, double> knot(long k) const;

  Family family_;
  double r1_ = 0.0;
  double r2_ = 0.0;
  int start_ = 0;
  std::vector<SlopeBlock> blocks_;
  // piecewise-linear tables over octaves [start_, start_ + size]
  std::vector<double> log_knots_;
  std::vector<double> rel_slopes_;
};

std::string to_string(ConcaveWeight::Family f);

}  // namespace symfun

#endif  // SYMFUN_CONCAVE_WEIGHT_HPP_
