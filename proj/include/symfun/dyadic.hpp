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

#ifndef SYMFUN_DYADIC_HPP_
#define SYMFUN_DYADIC_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "symfun/indices.hpp"
#include "symfun/space.hpp"
#include "symfun/step_function.hpp"

namespace symfun {

/// Finitely supported sequence over Z; zeros are never stored.
class DyadicSequence {
 public:
  DyadicSequence() = default;
  explicit DyadicSequence(std::map<int, double> entries);

  /// Unit vector e_k.
  static DyadicSequence unit(int k, double value = 1.0);

  double operator[](int k) const;
  void set(int k, double value);
  const std::map<int, double>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int k_min() const;
  int k_max() const;
  double sup_abs() const;

  /// Entries with lo <= k <= hi.
  DyadicSequence restricted(int lo, int hi) const;

  friend bool operator==(const DyadicSequence&, const DyadicSequence&) = default;

 private:
  std::map<int, double> entries_;
};

std::string to_string(const DyadicSequence& a);

/// Sum a_k chi of the k-th dyadic block (2^k, 2^{k+1}].
StepFunction S(const DyadicSequence& a);

/// ||S a||_X through the level profile (block lengths 2^k).
double E_norm(const SpaceDescriptor& space, const DyadicSequence& a);

enum class ShiftVariant { Full, Zero, Infinity };
std::string to_string(ShiftVariant v);

/// Index sets used by the truncated shifts: blocks inside [0, 1] are k <= -1,
/// blocks inside [1, inf) are k >= 0.
inline constexpr int kZeroTop = -1;
inline constexpr int kInfinityBottom = 0;

/// (tau_n a)_k = a_{k-n}; Zero and Infinity truncate before and after.
DyadicSequence shift(const DyadicSequence& a, int n, ShiftVariant variant);

/// Block averages 2^-k int over block k. f must vanish near 0.
DyadicSequence block_averages(const StepFunction& f);

/// Averaging projection onto functions constant on dyadic blocks. A nonzero
/// head (0, t_1] stays constant on the blocks it covers.
StepFunction Q(const StepFunction& f);

/// sigma_{2^n} on the half-line, exactly.
StepFunction dilate_dyadic(const StepFunction& f, int n);

struct IdentityTally {
  int checked = 0;
  int passed = 0;
  bool ok() const { return checked == passed; }
};

struct BoundPair {
  double sampled_lower = 0.0;
  double certified_upper = 0.0;
};

struct Prop4Report {
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  IdentityTally equa102, equa102a, dilation1, q_fixes_s, q_idempotent, q_dominates,
      q_contractive;
  double q_worst_ratio = 0.0;  ///< max ||Qf|| / ||f||
  BoundPair tau, tau_zero, tau_infinity;
  BoundPair sigma, sigma_zero, sigma_infinity;
  std::vector<std::string> violations;
  bool passed() const;
};

/// Seeded exact-identity and two-sided constant checks for one n.
/// `window` bounds the block indices of sampled sequences.
Prop4Report verify_prop4(const SpaceDescriptor& space, int n, int samples, std::uint64_t seed,
                         int window = 12);

enum class ShiftExponent { Gamma, Delta, GammaZero, DeltaZero, GammaInfinity, DeltaInfinity };
std::string to_string(ShiftExponent e);

/// Candidate sequences: unit vectors, flat blocks, geometric profiles and
/// seeded random signed vectors, all inside [-window, window].
std::vector<DyadicSequence> default_shift_candidates(int window = 60, std::uint64_t seed = 0,
                                                     int random_count = 32);

/// Sampled lower bound on the shift operator norm over the candidates.
double shift_lower_bound(const SpaceDescriptor& space, int n, ShiftVariant variant,
                         const std::vector<DyadicSequence>& candidates);

/// delta-type: running inf of (1/n) log2 of sampled norms (lower bound on the
/// limit); gamma-type: minus the running inf for tau_{-n}.
IndexEstimate shift_exponent(const SpaceDescriptor& space, ShiftExponent which, int n_max,
                             const std::vector<DyadicSequence>& candidates);

}  // namespace symfun

#endif  // SYMFUN_DYADIC_HPP_
