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

#include "symfun/indices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "symfun/space_config.hpp"

namespace symfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double reciprocal(double a) { return a <= 0.0 ? kInf : 1.0 / a; }

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_mu(IndexKind k) {
  return k == IndexKind::MuUnit || k == IndexKind::Mu || k == IndexKind::MuZero ||
         k == IndexKind::MuInfinity;
}

DilationVariant variant_of(IndexKind k) {
  switch (k) {
    case IndexKind::MuUnit:
    case IndexKind::NuUnit: return DilationVariant::UnitTilde;
    case IndexKind::Mu:
    case IndexKind::Nu: return DilationVariant::Full;
    case IndexKind::MuZero:
    case IndexKind::NuZero: return DilationVariant::Zero;
    case IndexKind::MuInfinity:
    case IndexKind::NuInfinity: return DilationVariant::Infinity;
  }
  return DilationVariant::Full;
}

void order_component(double& lo, double& hi) {
  lo = std::max(lo, 1.0);
  hi = std::max(hi, 1.0);
  if (lo > hi) std::swap(lo, hi);
}

}  // namespace

std::string to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::UpperBoundOnLimit: return "upper_bound_on_limit";
    case BoundDirection::LowerBoundOnLimit: return "lower_bound_on_limit";
    case BoundDirection::TwoSided: return "two_sided";
  }
  return "unknown";
}

std::string to_string(IndexKind k) {
  switch (k) {
    case IndexKind::MuUnit: return "mu_unit";
    case IndexKind::NuUnit: return "nu_unit";
    case IndexKind::Mu: return "mu";
    case IndexKind::Nu: return "nu";
    case IndexKind::MuZero: return "mu_zero";
    case IndexKind::NuZero: return "nu_zero";
    case IndexKind::MuInfinity: return "mu_infinity";
    case IndexKind::NuInfinity: return "nu_infinity";
  }
  return "unknown";
}

double log2_dilation_function(const PositiveFunction& psi, double log2_t,
                              DilationVariant variant, int grid_depth) {
  if (!std::isfinite(log2_t)) throw std::domain_error("dilation function needs finite t > 0");
  if (grid_depth < 0) throw std::invalid_argument("grid depth must be nonnegative");
  const double depth = grid_depth;
  double lo = -depth, hi = depth;
  switch (variant) {
    case DilationVariant::UnitTilde:
    case DilationVariant::Zero:
      hi = std::min(0.0, -log2_t);
      break;
    case DilationVariant::Full:
      break;
    case DilationVariant::Infinity:
      lo = std::max(0.0, -log2_t);
      break;
  }
  if (lo > hi) throw EstimateError("dilation grid is empty for this t and depth");
  std::vector<double> grid;
  for (double k = std::ceil(lo); k <= hi; k += 1.0) grid.push_back(k);
  if (lo != std::ceil(lo)) grid.push_back(lo);
  if (hi != std::floor(hi)) grid.push_back(hi);
  double best = -kInf;
  for (double k : grid) best = std::max(best, psi.log2_at(log2_t + k) - psi.log2_at(k));
  if (!std::isfinite(best)) throw EstimateError("dilation function is not finite");
  return best;
}

double dilation_function(const PositiveFunction& psi, double t, DilationVariant variant,
                         int grid_depth) {
  if (!(t > 0)) throw std::domain_error("dilation function needs t > 0");
  return std::exp2(log2_dilation_function(psi, std::log2(t), variant, grid_depth));
}

IndexEstimate estimate_from_sequence(std::span<const double> per_n, bool negate,
                                     BoundDirection direction, int grid_depth) {
  IndexEstimate e;
  e.bound_direction = direction;
  e.n_max = static_cast<int>(per_n.size());
  e.grid_depth = grid_depth;
  double running = kInf;
  for (std::size_t i = 0; i < per_n.size(); ++i) {
    if (!std::isfinite(per_n[i])) throw EstimateError("non-finite index diagnostic");
    running = std::min(running, per_n[i]);
    e.per_n.push_back({static_cast<int>(i) + 1, per_n[i], running});
  }
  if (per_n.empty()) throw EstimateError("index estimate needs n_max >= 1");
  e.value = negate ? -running : running;
  return e;
}

IndexEstimate dilation_index(const PositiveFunction& psi, IndexKind kind, int n_max,
                             int grid_depth) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  const bool mu = is_mu(kind);
  const DilationVariant variant = variant_of(kind);
  std::vector<double> seq;
  seq.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double x = mu ? -n : n;
    seq.push_back(log2_dilation_function(psi, x, variant, grid_depth) / n);
  }
  return estimate_from_sequence(
      seq, mu, mu ? BoundDirection::LowerBoundOnLimit : BoundDirection::UpperBoundOnLimit,
      grid_depth);
}

double boyd_lower_bound(const SpaceDescriptor& space, int n,
                        std::span<const StepFunction> family) {
  const DilationMode mode =
      space.domain() == Domain::Unit ? DilationMode::UnitTruncated : DilationMode::Full;
  const Rational tau = pow2(n);
  double best = 0.0;
  for (const StepFunction& f : family) {
    const double base = space.norm(f);
    if (base == 0.0) throw std::invalid_argument("boyd_lower_bound: zero test function");
    best = std::max(best, space.norm(dilate(f, tau, mode)) / base);
  }
  return best;
}

std::vector<StepFunction> default_boyd_family(const SpaceDescriptor& space, int n) {
  std::vector<StepFunction> out;
  const Domain d = space.domain();
  const int reach = std::max(20, std::abs(n) + 4);
  if (d == Domain::Unit) {
    for (int j = 0; j <= reach; ++j) out.push_back(StepFunction::indicator(d, 0, pow2(-j)));
  } else {
    for (int j = -reach; j <= reach; ++j) {
      out.push_back(StepFunction::indicator(d, 0, pow2(j)));
      out.push_back(StepFunction::indicator(d, pow2(j), pow2(j + 1)));
    }
  }
  // dyadic staircases 2^{j/2} on (2^-j-1, 2^-j]
  for (int depth : {8, 16}) {
    std::vector<Rational> knots;
    std::vector<double> values;
    for (int j = depth; j >= 0; --j) {
      knots.push_back(pow2(-j));
      values.push_back(std::exp2(0.5 * j));
    }
    out.emplace_back(d, std::move(knots), std::move(values));
  }
  return out;
}

OrliczIndices orlicz_indices(const OrliczFunction& n, int n_max, int grid_depth) {
  if (n_max < 1 || grid_depth < 0) throw std::invalid_argument("bad index parameters");
  // y[j] = log2 N^-1(2^-j) for j = 0 .. K + n_max
  std::vector<double> y(static_cast<std::size_t>(grid_depth + n_max + 1));
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] = n.log2_inverse(-static_cast<double>(j));
    if (!std::isfinite(y[j])) throw EstimateError("Orlicz inverse is not finite");
  }
  std::vector<double> lower, upper;
  for (int m = 1; m <= n_max; ++m) {
    double best_lo = -kInf, best_hi = -kInf;
    for (int k = 0; k <= grid_depth; ++k) {
      const double diff = y[static_cast<std::size_t>(k + m)] - y[static_cast<std::size_t>(k)];
      best_lo = std::max(best_lo, diff);
      best_hi = std::max(best_hi, -diff);
    }
    lower.push_back(best_lo / m);
    upper.push_back(best_hi / m);
  }
  OrliczIndices out;
  out.alpha_literal =
      estimate_from_sequence(lower, true, BoundDirection::LowerBoundOnLimit, grid_depth);
  out.beta_literal =
      estimate_from_sequence(upper, false, BoundDirection::UpperBoundOnLimit, grid_depth);
  const PositiveFunction phi([n](double x) { return -n.log2_inverse(-x); }, "orlicz_phi");
  out.alpha_phi = dilation_index(phi, IndexKind::MuUnit, n_max, grid_depth);
  out.beta_phi = dilation_index(phi, IndexKind::NuUnit, n_max, grid_depth);
  out.disagreement = std::max(std::fabs(out.alpha_literal.value - out.alpha_phi.value),
                              std::fabs(out.beta_literal.value - out.beta_phi.value));
  out.flagged = out.disagreement > 0.02;
  return out;
}

LorentzIndices lorentz_indices(double q, const ConcaveWeight& psi, int n_max, int grid_depth) {
  if (!(q >= 1.0) || n_max < 1 || grid_depth < 0) {
    throw std::invalid_argument("bad index parameters");
  }
  std::vector<double> lower, upper;
  for (int m = 1; m <= n_max; ++m) {
    double best_lo = -kInf, best_hi = -kInf;
    for (int k = -grid_depth; k <= 0; ++k) {
      const double diff = (psi.log2_at(k - m) - psi.log2_at(k)) / q;
      best_lo = std::max(best_lo, diff);
      best_hi = std::max(best_hi, -diff);
    }
    lower.push_back(best_lo / m);
    upper.push_back(best_hi / m);
  }
  LorentzIndices out;
  out.alpha = estimate_from_sequence(lower, true, BoundDirection::LowerBoundOnLimit, grid_depth);
  out.beta = estimate_from_sequence(upper, false, BoundDirection::UpperBoundOnLimit, grid_depth);
  return out;
}

MinMaxReport verify_minmax(const PositiveFunction& psi, int n_max, int grid_depth, double tol,
                           int samples, std::uint64_t seed) {
  MinMaxReport r;
  r.mu = dilation_index(psi, IndexKind::Mu, n_max, grid_depth);
  r.mu_zero = dilation_index(psi, IndexKind::MuZero, n_max, grid_depth);
  r.mu_infinity = dilation_index(psi, IndexKind::MuInfinity, n_max, grid_depth);
  r.nu = dilation_index(psi, IndexKind::Nu, n_max, grid_depth);
  r.nu_zero = dilation_index(psi, IndexKind::NuZero, n_max, grid_depth);
  r.nu_infinity = dilation_index(psi, IndexKind::NuInfinity, n_max, grid_depth);
  r.mu_gap = std::fabs(r.mu.value - std::min(r.mu_zero.value, r.mu_infinity.value));
  r.nu_gap = std::fabs(r.nu.value - std::max(r.nu_zero.value, r.nu_infinity.value));
  r.mu_identity = r.mu_gap <= tol;
  r.nu_identity = r.nu_gap <= tol;

  std::mt19937_64 rng(seed);
  const double at_one = psi.log2_at(0.0);
  for (int i = 0; i < samples; ++i) {
    const double x = 40.0 * (1.0 - unit_uniform(rng));  // log2 t in (0, 40]
    const double lambda = unit_uniform(rng);
    const double lhs = (psi.log2_at((1.0 - lambda) * x) - psi.log2_at(-lambda * x)) / x;
    const double head = lambda < 1.0 ? (1.0 - lambda) *
                                           (psi.log2_at((1.0 - lambda) * x) - at_one) /
                                           ((1.0 - lambda) * x)
                                     : 0.0;
    const double tail =
        lambda > 0.0 ? lambda * (at_one - psi.log2_at(-lambda * x)) / (lambda * x) : 0.0;
    r.eq6_max_error = std::max(r.eq6_max_error, std::fabs(lhs - (head + tail)));
  }
  r.eq6_samples = samples;
  r.eq6_identity = r.eq6_max_error <= 1e-12;
  return r;
}

bool FInterval::contains(double p, double slack) const {
  if (p >= lo - slack && p <= hi + slack) return true;
  return is_union && p >= lo2 - slack && p <= hi2 + slack;
}

std::string to_string(const FInterval& f) {
  std::string s = "[" + format_number(f.lo) + ", " + format_number(f.hi) + "]";
  if (f.is_union) s += " U [" + format_number(f.lo2) + ", " + format_number(f.hi2) + "]";
  return s;
}

SpaceIndices space_indices(const SpaceDescriptor& space, int n_max, int grid_depth) {
  const PositiveFunction phi = space.fundamental_function();
  SpaceIndices idx;
  if (space.domain() == Domain::Unit) {
    IndexEstimate a = dilation_index(phi, IndexKind::MuUnit, n_max, grid_depth);
    IndexEstimate b = dilation_index(phi, IndexKind::NuUnit, n_max, grid_depth);
    idx.alpha = idx.alpha_zero = a.value;
    idx.beta = idx.beta_zero = b.value;
    idx.alpha_infinity = idx.alpha;
    idx.beta_infinity = idx.beta;
    idx.estimates = {{"alpha", std::move(a)}, {"beta", std::move(b)}};
    return idx;
  }
  const std::pair<const char*, IndexKind> kinds[] = {
      {"alpha", IndexKind::Mu},           {"beta", IndexKind::Nu},
      {"alpha_zero", IndexKind::MuZero},  {"beta_zero", IndexKind::NuZero},
      {"alpha_infinity", IndexKind::MuInfinity}, {"beta_infinity", IndexKind::NuInfinity}};
  for (const auto& [name, kind] : kinds) {
    idx.estimates.emplace_back(name, dilation_index(phi, kind, n_max, grid_depth));
  }
  idx.alpha = idx.estimates[0].second.value;
  idx.beta = idx.estimates[1].second.value;
  idx.alpha_zero = idx.estimates[2].second.value;
  idx.beta_zero = idx.estimates[3].second.value;
  idx.alpha_infinity = idx.estimates[4].second.value;
  idx.beta_infinity = idx.estimates[5].second.value;
  if (space.kind() == SpaceDescriptor::Kind::X1) {
    // tail indices of the L1 part
    idx.alpha_infinity = 1.0;
    idx.beta_infinity = 1.0;
  }
  return idx;
}

FInterval f_interval(const SpaceIndices& idx, Domain domain) {
  FInterval f;
  if (domain == Domain::Unit || idx.alpha_infinity <= idx.beta_zero) {
    f.lo = reciprocal(idx.beta);
    f.hi = reciprocal(idx.alpha);
    order_component(f.lo, f.hi);
    return f;
  }
  f.is_union = true;
  f.lo = reciprocal(idx.beta);
  f.hi = reciprocal(idx.alpha_infinity);
  f.lo2 = reciprocal(idx.beta_zero);
  f.hi2 = reciprocal(idx.alpha);
  order_component(f.lo, f.hi);
  order_component(f.lo2, f.hi2);
  if (f.lo2 < f.lo) {
    std::swap(f.lo, f.lo2);
    std::swap(f.hi, f.hi2);
  }
  return f;
}

FInterval f_interval(const SpaceDescriptor& space, int n_max, int grid_depth) {
  return f_interval(space_indices(space, n_max, grid_depth), space.domain());
}

}  // namespace symfun
