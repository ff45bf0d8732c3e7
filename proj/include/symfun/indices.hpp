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

#ifndef SYMFUN_INDICES_HPP_
#define SYMFUN_INDICES_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symfun/orlicz.hpp"
#include "symfun/positive_function.hpp"
#include "symfun/space.hpp"

namespace symfun {

inline constexpr int kDefaultNMax = 40;
inline constexpr int kDefaultGridDepth = 60;

/// Estimation failed: empty grid, non-finite ratio.
class EstimateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DilationVariant {
  UnitTilde,  ///< s in (0, min(1, 1/t)], psi on (0, 1]
  Full,       ///< s > 0
  Zero,       ///< s in (0, min(1, 1/t)]
  Infinity    ///< s >= max(1, 1/t)
};

/// log2 of sup psi(ts)/psi(s) over s = 2^k in the variant's range, |k| <= K,
/// plus the range endpoints when they are not dyadic. t = 2^log2_t.
double log2_dilation_function(const PositiveFunction& psi, double log2_t,
                              DilationVariant variant, int grid_depth = kDefaultGridDepth);
double dilation_function(const PositiveFunction& psi, double t, DilationVariant variant,
                         int grid_depth = kDefaultGridDepth);

enum class BoundDirection { UpperBoundOnLimit, LowerBoundOnLimit, TwoSided };
std::string to_string(BoundDirection d);

struct IndexSample {
  int n = 0;
  double value = 0.0;        ///< (1/n) log2 of the dilation quantity
  double running_inf = 0.0;  ///< min over n' <= n
};

struct IndexEstimate {
  double value = 0.0;
  std::vector<IndexSample> per_n;
  BoundDirection bound_direction = BoundDirection::TwoSided;
  int n_max = 0;
  int grid_depth = 0;
};

/// Builds an estimate from a sequence (1/n) log2 q_n, n = 1..size.
/// Upper-type (nu, delta): value = running inf. Lower-type (mu, gamma):
/// value = -running inf of the sequence of log2 q(2^-n)/n.
IndexEstimate estimate_from_sequence(std::span<const double> per_n, bool negate,
                                     BoundDirection direction, int grid_depth);

enum class IndexKind { MuUnit, NuUnit, Mu, Nu, MuZero, NuZero, MuInfinity, NuInfinity };
std::string to_string(IndexKind k);

/// mu-type kinds are reported as lower bounds, nu-type as upper bounds.
IndexEstimate dilation_index(const PositiveFunction& psi, IndexKind kind,
                             int n_max = kDefaultNMax, int grid_depth = kDefaultGridDepth);

/// max over the family of ||sigma_{2^n} f|| / ||f||; truncated dilation on Unit.
double boyd_lower_bound(const SpaceDescriptor& space, int n,
                        std::span<const StepFunction> family);
/// Indicators (0, 2^-j] and a few decreasing profiles sized for n.
std::vector<StepFunction> default_boyd_family(const SpaceDescriptor& space, int n);

struct OrliczIndices {
  IndexEstimate alpha_literal;  ///< dyadic sup over k <= 0 of N^-1 ratios
  IndexEstimate beta_literal;
  IndexEstimate alpha_phi;      ///< indices of 1/N^-1(1/t) on (0, 1]
  IndexEstimate beta_phi;
  double disagreement = 0.0;    ///< max endpoint difference between the routes
  bool flagged = false;         ///< disagreement above 0.02
};

OrliczIndices orlicz_indices(const OrliczFunction& n, int n_max = kDefaultNMax,
                             int grid_depth = kDefaultGridDepth);

struct LorentzIndices {
  IndexEstimate alpha;
  IndexEstimate beta;
};

LorentzIndices lorentz_indices(double q, const ConcaveWeight& psi, int n_max = kDefaultNMax,
                               int grid_depth = kDefaultGridDepth);

struct MinMaxReport {
  IndexEstimate mu, mu_zero, mu_infinity;
  IndexEstimate nu, nu_zero, nu_infinity;
  double mu_gap = 0.0;  ///< |mu - min(mu0, mu_inf)|
  double nu_gap = 0.0;  ///< |nu - max(nu0, nu_inf)|
  bool mu_identity = false;
  bool nu_identity = false;
  int eq6_samples = 0;
  double eq6_max_error = 0.0;
  bool eq6_identity = false;
  bool passed() const { return mu_identity && nu_identity && eq6_identity; }
};

/// psi positive on (0, inf). The pointwise decomposition of log2 psi(ts)/psi(s)
/// is checked at `samples` seeded points (log2 t in (0, 40], lambda in [0, 1]).
MinMaxReport verify_minmax(const PositiveFunction& psi, int n_max = kDefaultNMax,
                           int grid_depth = kDefaultGridDepth, double tol = 0.02,
                           int samples = 1000, std::uint64_t seed = 0);

struct FInterval {
  bool is_union = false;
  double lo = 1.0, hi = 1.0;    ///< first component
  double lo2 = 1.0, hi2 = 1.0;  ///< second component when is_union
  bool contains(double p, double slack = 0.0) const;
  friend bool operator==(const FInterval&, const FInterval&) = default;
};

std::string to_string(const FInterval& f);

/// Index set of a fundamental-type space, in p-space.
struct SpaceIndices {
  double alpha = 0, beta = 0;
  double alpha_zero = 0, beta_zero = 0;
  double alpha_infinity = 0, beta_infinity = 0;
  std::vector<std::pair<std::string, IndexEstimate>> estimates;
};

SpaceIndices space_indices(const SpaceDescriptor& space, int n_max = kDefaultNMax,
                           int grid_depth = kDefaultGridDepth);

FInterval f_interval(const SpaceIndices& idx, Domain domain);
FInterval f_interval(const SpaceDescriptor& space, int n_max = kDefaultNMax,
                     int grid_depth = kDefaultGridDepth);

}  // namespace symfun

#endif  // SYMFUN_INDICES_HPP_
