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

#include "symfun/dyadic.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace symfun {

namespace {

constexpr double kRelSlack = 1e-9;

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

// k with 2^k <= q < 2^{k+1}
int floor_log2(const Rational& q) {
  if (sgn(q) <= 0) throw std::domain_error("floor_log2 of a nonpositive value");
  int e = static_cast<int>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
          static_cast<int>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  if (pow2(e) > q) --e;
  return e;
}

// nonzero dyadic value m / 8 with |m| <= 16
double dyadic_value(std::mt19937_64& rng, bool positive) {
  int m = 0;
  while (m == 0) m = uniform_int(rng, positive ? 1 : -16, 16);
  return m / 8.0;
}

DyadicSequence random_sequence(std::mt19937_64& rng, int lo, int hi, bool positive = false) {
  if (lo > hi) return {};
  DyadicSequence a;
  const int count = uniform_int(rng, 1, std::min(6, hi - lo + 1));
  for (int i = 0; i < count; ++i) a.set(uniform_int(rng, lo, hi), dyadic_value(rng, positive));
  return a;
}

// random dyadic rational in (2^lo_exp, 2^hi_exp]
Rational random_point(std::mt19937_64& rng, int lo_exp, int hi_exp) {
  const int e = uniform_int(rng, lo_exp, hi_exp - 1);
  const int m = uniform_int(rng, 257, 512);  // mantissa in (1/2, 1] * 512
  return Rational(m) * pow2(e + 1 - 9);
}

StepFunction random_step(std::mt19937_64& rng, Domain domain, int lo_exp, int hi_exp,
                         bool head_zero, bool decreasing) {
  std::vector<Rational> knots;
  const int count = uniform_int(rng, 1, 6);
  for (int i = 0; i < count; ++i) knots.push_back(random_point(rng, lo_exp, hi_exp));
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  std::vector<double> values;
  for (std::size_t i = 0; i < knots.size(); ++i) values.push_back(dyadic_value(rng, decreasing));
  if (decreasing) std::sort(values.begin(), values.end(), std::greater<>());
  if (head_zero) values.front() = 0.0;
  if (head_zero && knots.size() == 1) {
    knots.push_back(knots.front() * 2);
    values.push_back(dyadic_value(rng, false));
  }
  return StepFunction(domain, std::move(knots), std::move(values));
}

// c chi_(1,2] + g on (2, 2^T] with |g| <= c
StepFunction random_tail_member(std::mt19937_64& rng) {
  const double c = dyadic_value(rng, true);
  std::vector<Rational> knots{Rational(1), Rational(2)};
  std::vector<double> values{0.0, c};
  const int pieces = uniform_int(rng, 0, 5);
  Rational end = 2;
  for (int i = 0; i < pieces; ++i) {
    end += make_rational(uniform_int(rng, 1, 16), 4);
    knots.push_back(end);
    values.push_back(c * uniform_int(rng, -8, 8) / 8.0);
  }
  return StepFunction(Domain::HalfLine, std::move(knots), std::move(values));
}

double fast_E_norm(const SpaceDescriptor& space, const DyadicSequence& a) {
  std::vector<std::pair<double, double>> pieces;
  pieces.reserve(a.entries().size());
  for (const auto& [k, v] : a.entries()) pieces.emplace_back(v, std::ldexp(1.0, k));
  const std::vector<Level> levels = profile_from_pieces(std::move(pieces));
  return space.norm_of_profile(levels);
}

void tally(IdentityTally& t, bool ok) {
  ++t.checked;
  if (ok) ++t.passed;
}

void check_upper(std::vector<std::string>& out, const char* what, double lower, double upper) {
  if (lower > upper * (1.0 + kRelSlack)) {
    std::ostringstream os;
    os << what << ": sampled " << lower << " exceeds bound " << upper;
    out.push_back(os.str());
  }
}

}  // namespace

DyadicSequence::DyadicSequence(std::map<int, double> entries) {
  for (const auto& [k, v] : entries) set(k, v);
}

DyadicSequence DyadicSequence::unit(int k, double value) {
  DyadicSequence a;
  a.set(k, value);
  return a;
}

double DyadicSequence::operator[](int k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? 0.0 : it->second;
}

void DyadicSequence::set(int k, double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite sequence entry");
  if (value == 0.0) {
    entries_.erase(k);
  } else {
    entries_[k] = value;
  }
}

int DyadicSequence::k_min() const {
  if (empty()) throw std::logic_error("empty sequence has no support");
  return entries_.begin()->first;
}

int DyadicSequence::k_max() const {
  if (empty()) throw std::logic_error("empty sequence has no support");
  return entries_.rbegin()->first;
}

double DyadicSequence::sup_abs() const {
  double m = 0.0;
  for (const auto& [k, v] : entries_) m = std::max(m, std::fabs(v));
  return m;
}

DyadicSequence DyadicSequence::restricted(int lo, int hi) const {
  DyadicSequence out;
  for (auto it = entries_.lower_bound(lo); it != entries_.end() && it->first <= hi; ++it) {
    out.entries_.insert(*it);
  }
  return out;
}

std::string to_string(const DyadicSequence& a) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : a.entries()) {
    os << (first ? "" : ", ") << k << ": " << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string to_string(ShiftVariant v) {
  switch (v) {
    case ShiftVariant::Full: return "full";
    case ShiftVariant::Zero: return "zero";
    case ShiftVariant::Infinity: return "infinity";
  }
  return "unknown";
}

std::string to_string(ShiftExponent e) {
  switch (e) {
    case ShiftExponent::Gamma: return "gamma";
    case ShiftExponent::Delta: return "delta";
    case ShiftExponent::GammaZero: return "gamma_zero";
    case ShiftExponent::DeltaZero: return "delta_zero";
    case ShiftExponent::GammaInfinity: return "gamma_infinity";
    case ShiftExponent::DeltaInfinity: return "delta_infinity";
  }
  return "unknown";
}

StepFunction S(const DyadicSequence& a) {
  std::vector<Segment> pieces;
  for (const auto& [k, v] : a.entries()) pieces.push_back({pow2(k), pow2(k + 1), v});
  return StepFunction::from_segments(Domain::HalfLine, std::move(pieces));
}

double E_norm(const SpaceDescriptor& space, const DyadicSequence& a) {
  if (space.domain() != Domain::HalfLine) {
    throw std::invalid_argument("the sequence lattice needs a half-line space");
  }
  return space.norm(S(a));
}

DyadicSequence shift(const DyadicSequence& a, int n, ShiftVariant variant) {
  int lo = INT_MIN, hi = INT_MAX;
  if (variant == ShiftVariant::Zero) hi = kZeroTop;
  if (variant == ShiftVariant::Infinity) lo = kInfinityBottom;
  DyadicSequence out;
  for (const auto& [k, v] : a.entries()) {
    if (k < lo || k > hi) continue;
    const long target = static_cast<long>(k) + n;
    if (target < lo || target > hi) continue;
    out.set(static_cast<int>(target), v);
  }
  return out;
}

DyadicSequence block_averages(const StepFunction& f) {
  if (f.is_zero()) return {};
  if (f.values().front() != 0.0) {
    throw std::invalid_argument("block averages need f to vanish near 0");
  }
  std::map<int, Rational> sums;
  for (const Segment& s : f.segments()) {
    if (s.value == 0.0) continue;
    const Rational v(s.value);
    for (int k = floor_log2(s.lo);; ++k) {
      const Rational a = pow2(k), b = pow2(k + 1);
      if (a >= s.hi) break;
      const Rational lo = std::max(a, s.lo), hi = std::min(b, s.hi);
      if (hi > lo) sums[k] += v * (hi - lo);
    }
  }
  DyadicSequence out;
  for (const auto& [k, total] : sums) out.set(k, to_double(total / pow2(k)));
  return out;
}

StepFunction Q(const StepFunction& f) {
  if (f.is_zero()) return f;
  std::vector<Segment> pieces;
  StepFunction rest = f;
  if (f.values().front() != 0.0) {
    const int h = floor_log2(f.breakpoints().front());
    pieces.push_back({Rational(0), pow2(h), f.values().front()});
    rest = restrict_to(f, pow2(h), f.support_end());
  }
  const DyadicSequence averages = block_averages(rest);
  for (const auto& [k, v] : averages.entries()) {
    pieces.push_back({pow2(k), pow2(k + 1), v});
  }
  return StepFunction::from_segments(f.domain(), std::move(pieces));
}

StepFunction dilate_dyadic(const StepFunction& f, int n) {
  return dilate(f, pow2(n), DilationMode::Full);
}

bool Prop4Report::passed() const {
  for (const IdentityTally* t : {&equa102, &equa102a, &dilation1, &q_fixes_s, &q_idempotent,
                                 &q_dominates, &q_contractive}) {
    if (!t->ok()) return false;
  }
  return violations.empty();
}

Prop4Report verify_prop4(const SpaceDescriptor& space, int n, int samples, std::uint64_t seed,
                         int window) {
  if (space.domain() != Domain::HalfLine) {
    throw std::invalid_argument("verify_prop4 needs a half-line space");
  }
  if (window < 4) throw std::invalid_argument("window must be at least 4");
  Prop4Report r;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  const Rational tau = pow2(n);
  const auto ratio = [&](const StepFunction& top, const StepFunction& bottom) {
    return space.norm(top) / space.norm(bottom);
  };

  for (int i = 0; i < samples; ++i) {
    const DyadicSequence a = random_sequence(rng, -window, window);

    // S(tau0_n a) = sigma0_{2^n} S(a restricted to j <= min(-1, -1-n))
    const DyadicSequence a_minus = a.restricted(INT_MIN, std::min(kZeroTop, kZeroTop - n));
    tally(r.equa102,
          S(shift(a, n, ShiftVariant::Zero)) == dilate(S(a_minus), tau, DilationMode::ZeroPart));

    // S(tauinf_n a) = sigma_{2^n} S(a restricted to j >= max(0, -n))
    const DyadicSequence a_plus = a.restricted(std::max(kInfinityBottom, -n), INT_MAX);
    tally(r.equa102a,
          S(shift(a, n, ShiftVariant::Infinity)) == dilate(S(a_plus), tau, DilationMode::Full));

    const StepFunction x = random_step(rng, Domain::HalfLine, -window, window, true, false);
    tally(r.dilation1,
          block_averages(dilate_dyadic(x, 1)) == shift(block_averages(x), 1, ShiftVariant::Full));

    tally(r.q_fixes_s, Q(S(a)) == S(a));

    const StepFunction g = random_step(rng, Domain::HalfLine, -window, window, false, false);
    const StepFunction qg = Q(g);
    tally(r.q_idempotent, Q(qg) == qg);
    const double q_ratio = ratio(qg, g);
    r.q_worst_ratio = std::max(r.q_worst_ratio, q_ratio);
    tally(r.q_contractive, q_ratio <= 1.0 + 1e-9);

    const StepFunction dec = random_step(rng, Domain::HalfLine, -window, 0, false, true);
    tally(r.q_dominates, pointwise_le(dec, Q(dilate(dec, Rational(2), DilationMode::ZeroPart))));

    // sampled operator-norm lower bounds
    const double na = E_norm(space, a);
    r.tau.sampled_lower =
        std::max(r.tau.sampled_lower, E_norm(space, shift(a, n, ShiftVariant::Full)) / na);
    r.tau_zero.sampled_lower =
        std::max(r.tau_zero.sampled_lower, E_norm(space, shift(a, n, ShiftVariant::Zero)) / na);
    r.tau_infinity.sampled_lower = std::max(
        r.tau_infinity.sampled_lower, E_norm(space, shift(a, n, ShiftVariant::Infinity)) / na);

    r.sigma.sampled_lower = std::max(r.sigma.sampled_lower, ratio(dilate_dyadic(g, n), g));
    const StepFunction unit_part = restrict_to(g, 0, 1);
    if (!unit_part.is_zero()) {
      r.sigma_zero.sampled_lower =
          std::max(r.sigma_zero.sampled_lower,
                   ratio(dilate(unit_part, tau, DilationMode::ZeroPart), unit_part));
    }
    StepFunction member = random_tail_member(rng);
    if (n < 0) member = dilate_dyadic(member, -n);
    if (!in_G_set(member, std::min(n, 0))) {
      r.violations.push_back("constructed tail-set member failed the membership test");
    }
    r.sigma_infinity.sampled_lower =
        std::max(r.sigma_infinity.sampled_lower, ratio(dilate_dyadic(member, n), member));
  }
  // unit vectors deterministically cover the shift directions
  for (int k = -window; k <= window; ++k) {
    const DyadicSequence e = DyadicSequence::unit(k);
    const double ne = E_norm(space, e);
    r.tau.sampled_lower =
        std::max(r.tau.sampled_lower, E_norm(space, shift(e, n, ShiftVariant::Full)) / ne);
    r.tau_zero.sampled_lower =
        std::max(r.tau_zero.sampled_lower, E_norm(space, shift(e, n, ShiftVariant::Zero)) / ne);
    r.tau_infinity.sampled_lower = std::max(
        r.tau_infinity.sampled_lower, E_norm(space, shift(e, n, ShiftVariant::Infinity)) / ne);
  }

  double dilation_bound = std::max(1.0, std::ldexp(1.0, n));
  if (space.kind() == SpaceDescriptor::Kind::Lp) {
    dilation_bound = space.p() == std::numeric_limits<double>::infinity()
                         ? 1.0
                         : std::exp2(n / space.p());
  }
  r.sigma.certified_upper = dilation_bound;
  r.sigma_zero.certified_upper = dilation_bound;
  r.sigma_infinity.certified_upper = dilation_bound;
  r.tau.certified_upper = dilation_bound;
  r.tau_zero.certified_upper = dilation_bound;
  r.tau_infinity.certified_upper = 2.0 * dilation_bound;

  auto& v = r.violations;
  check_upper(v, "tau", r.tau.sampled_lower, r.tau.certified_upper);
  check_upper(v, "tau_zero", r.tau_zero.sampled_lower, r.tau_zero.certified_upper);
  check_upper(v, "tau_infinity", r.tau_infinity.sampled_lower, r.tau_infinity.certified_upper);
  check_upper(v, "sigma", r.sigma.sampled_lower, r.sigma.certified_upper);
  check_upper(v, "sigma_zero", r.sigma_zero.sampled_lower, r.sigma_zero.certified_upper);
  check_upper(v, "sigma_infinity", r.sigma_infinity.sampled_lower,
              r.sigma_infinity.certified_upper);
  // two-sided constants, both directions
  check_upper(v, "sigma vs 2 tau", r.sigma.sampled_lower, 2.0 * r.tau.certified_upper);
  check_upper(v, "sigma_zero vs 2 tau_zero", r.sigma_zero.sampled_lower,
              2.0 * r.tau_zero.certified_upper);
  check_upper(v, "sigma_infinity vs 4 tau_infinity", r.sigma_infinity.sampled_lower,
              4.0 * r.tau_infinity.certified_upper);
  check_upper(v, "tau vs sigma", r.tau.sampled_lower, r.sigma.certified_upper);
  check_upper(v, "tau_zero vs sigma_zero", r.tau_zero.sampled_lower,
              r.sigma_zero.certified_upper);
  check_upper(v, "tau_infinity vs 2 sigma_infinity", r.tau_infinity.sampled_lower,
              2.0 * r.sigma_infinity.certified_upper);
  if (n == 1) {
    check_upper(v, "tau_zero at n=1", r.tau_zero.sampled_lower, 2.0);
    check_upper(v, "tau_infinity at n=1", r.tau_infinity.sampled_lower, 2.0);
  }
  return r;
}

std::vector<DyadicSequence> default_shift_candidates(int window, std::uint64_t seed,
                                                     int random_count) {
  std::vector<DyadicSequence> out;
  for (int k = -window; k <= window; ++k) out.push_back(DyadicSequence::unit(k));
  for (int len : {2, 4, 8, 16}) {
    for (int start = -window; start + len - 1 <= window; start += 8) {
      DyadicSequence a;
      for (int k = start; k < start + len; ++k) a.set(k, 1.0);
      out.push_back(a);
    }
  }
  for (double rate : {-0.5, -0.25, 0.25, 0.5}) {
    for (int start = -window; start + 15 <= window; start += 16) {
      DyadicSequence a;
      for (int j = 0; j < 16; ++j) a.set(start + j, std::exp2(-rate * j));
      out.push_back(a);
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    DyadicSequence a;
    const int count = uniform_int(rng, 1, 12);
    for (int j = 0; j < count; ++j) {
      a.set(uniform_int(rng, -window, window), (unit_uniform(rng) < 0.5 ? -1.0 : 1.0) *
                                                   (0.25 + unit_uniform(rng)));
    }
    if (!a.empty()) out.push_back(a);
  }
  return out;
}

double shift_lower_bound(const SpaceDescriptor& space, int n, ShiftVariant variant,
                         const std::vector<DyadicSequence>& candidates) {
  if (space.domain() != Domain::HalfLine) {
    throw std::invalid_argument("the sequence lattice needs a half-line space");
  }
  double best = 0.0;
  for (const DyadicSequence& a : candidates) {
    if (a.empty()) continue;
    const double base = fast_E_norm(space, a);
    best = std::max(best, fast_E_norm(space, shift(a, n, variant)) / base);
  }
  return best;
}

IndexEstimate shift_exponent(const SpaceDescriptor& space, ShiftExponent which, int n_max,
                             const std::vector<DyadicSequence>& candidates) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  bool gamma = false;
  ShiftVariant variant = ShiftVariant::Full;
  switch (which) {
    case ShiftExponent::Gamma: gamma = true; break;
    case ShiftExponent::Delta: break;
    case ShiftExponent::GammaZero: gamma = true; variant = ShiftVariant::Zero; break;
    case ShiftExponent::DeltaZero: variant = ShiftVariant::Zero; break;
    case ShiftExponent::GammaInfinity: gamma = true; variant = ShiftVariant::Infinity; break;
    case ShiftExponent::DeltaInfinity: variant = ShiftVariant::Infinity; break;
  }
  std::vector<double> seq;
  for (int n = 1; n <= n_max; ++n) {
    const double bound = shift_lower_bound(space, gamma ? -n : n, variant, candidates);
    if (!(bound > 0)) throw EstimateError("no candidate survives the truncated shift");
    seq.push_back(std::log2(bound) / n);
  }
  return estimate_from_sequence(
      seq, gamma,
      gamma ? BoundDirection::UpperBoundOnLimit : BoundDirection::LowerBoundOnLimit, 0);
}

}  // namespace symfun
