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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "symfun/dyadic.hpp"

using namespace symfun;
using doctest::Approx;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Rational q(long n, long d) { return make_rational(n, d); }

SpaceDescriptor lp_half(double p) { return SpaceDescriptor::lp(p, Domain::HalfLine); }

long double lp_sequence_norm(const std::map<int, double>& a, double p) {
  long double total = 0, mx = 0;
  for (const auto& [k, v] : a) {
    mx = std::max<long double>(mx, std::fabs(v));
    total += std::pow(std::fabs(static_cast<long double>(v)), static_cast<long double>(p)) *
             std::exp2(static_cast<long double>(k));
  }
  return std::isinf(p) ? mx : std::pow(total, 1.0L / p);
}

}  // namespace

TEST_CASE("sequence basics") {
  DyadicSequence a({{-2, 1.5}, {3, -4}});
  CHECK(a[-2] == 1.5);
  CHECK(a[0] == 0);
  CHECK(a.k_min() == -2);
  CHECK(a.k_max() == 3);
  CHECK(a.sup_abs() == 4);
  a.set(3, 0);
  CHECK(a == DyadicSequence::unit(-2, 1.5));
  CHECK(a.restricted(0, 5).empty());
  CHECK(DyadicSequence({{1, 0.0}}).empty());
}

TEST_CASE("S places entries on dyadic blocks") {
  CHECK(S(DyadicSequence::unit(0)) == StepFunction::indicator(Domain::HalfLine, 1, 2));
  CHECK(S(DyadicSequence::unit(-3, 2)) == StepFunction::indicator(Domain::HalfLine, q(1, 8), q(1, 4), 2));
  oracle::Sampler s(21);
  for (int i = 0; i < 200; ++i) {
    const auto m = s.sequence(-10, 10);
    const StepFunction f = S(DyadicSequence(m));
    for (int k = -11; k <= 11; ++k) {
      const double want = m.count(k) ? m.at(k) : 0.0;
      const Rational mid = (pow2(k) + pow2(k + 1)) / 2;
      CHECK(oracle::eval(f, mid) == want);
      CHECK(oracle::eval(f, pow2(k + 1)) == want);
    }
  }
}

TEST_CASE("E norm on L^p is a weighted sequence norm") {
  oracle::Sampler s(22);
  for (double p : {1.0, 2.0, 3.5, kInf}) {
    for (int i = 0; i < 100; ++i) {
      const auto m = s.sequence(-12, 12);
      const double got = E_norm(lp_half(p), DyadicSequence(m));
      const long double want = lp_sequence_norm(m, p);
      CHECK(std::fabs(got - want) <= 1e-14 * want);
    }
  }
  CHECK_THROWS_AS(E_norm(SpaceDescriptor::lp(2), DyadicSequence::unit(-1)), std::invalid_argument);
}

TEST_CASE("shifts match the definition") {
  oracle::Sampler s(23);
  const auto all = [](int) { return true; };
  const auto zero = [](int k) { return k <= -1; };
  const auto inf = [](int k) { return k >= 0; };
  for (int i = 0; i < 500; ++i) {
    const auto m = s.sequence(-20, 20);
    const int n = s.integer(-25, 25);
    const DyadicSequence a(m);
    CHECK(shift(a, n, ShiftVariant::Full).entries() == oracle::shift(m, n, all));
    CHECK(shift(a, n, ShiftVariant::Zero).entries() == oracle::shift(m, n, zero));
    CHECK(shift(a, n, ShiftVariant::Infinity).entries() == oracle::shift(m, n, inf));
  }
  // shifted unit vectors
  CHECK(shift(DyadicSequence::unit(-1), 1, ShiftVariant::Zero).empty());
  CHECK(shift(DyadicSequence::unit(-2), 1, ShiftVariant::Zero) == DyadicSequence::unit(-1));
  CHECK(shift(DyadicSequence::unit(0), -1, ShiftVariant::Infinity).empty());
  CHECK(shift(DyadicSequence::unit(1), -1, ShiftVariant::Infinity) == DyadicSequence::unit(0));
}

TEST_CASE("block averages match the definition") {
  oracle::Sampler s(24);
  for (int i = 0; i < 200; ++i) {
    const StepFunction raw = s.step(Domain::HalfLine, 16, 64, 8);
    const StepFunction f = restrict_to(raw, q(1, 16), 4);
    const DyadicSequence got = block_averages(f);
    for (int k = -5; k <= 2; ++k) {
      const Rational lo = pow2(k), hi = pow2(k + 1);
      const Rational avg = oracle::integral(f, lo, hi) / lo;
      CHECK(got[k] == to_double(avg));
    }
    if (!got.empty()) CHECK(got.k_min() >= -5);
  }
  CHECK_THROWS_AS(block_averages(StepFunction::indicator(Domain::HalfLine, 0, 1)),
                  std::invalid_argument);
  const StepFunction f(Domain::HalfLine, {1, q(3, 2), 2}, {0, 2, 4});
  CHECK(block_averages(f) == DyadicSequence::unit(0, 3));
}

TEST_CASE("Q examples") {
  CHECK(Q(S(DyadicSequence({{-1, 2}, {2, 3}}))) == S(DyadicSequence({{-1, 2}, {2, 3}})));
  // constant head kept exactly on (0, 2^h]
  const StepFunction f(Domain::HalfLine, {q(3, 4), q(3, 2)}, {5, 1});
  const StepFunction got = Q(f);
  CHECK(got(q(1, 4)) == 5);
  // (1/2, 1]: 5 on (1/2, 3/4], 1 on (3/4, 1] -> 3
  CHECK(got(q(3, 4)) == 3);
  // (1, 2]: 1 on (1, 3/2] -> 1/2
  CHECK(got(q(3, 2)) == 0.5);
  CHECK(Q(got) == got);
}

TEST_CASE("Q is idempotent and contractive") {
  oracle::Sampler s(25);
  const SpaceDescriptor spaces[] = {
      lp_half(1), lp_half(2), lp_half(kInf),
      SpaceDescriptor::lorentz(1, ConcaveWeight::power(0.5), Domain::HalfLine),
      SpaceDescriptor::orlicz(OrliczFunction::power_log(2, 1), Domain::HalfLine)};
  for (int i = 0; i < 100; ++i) {
    const StepFunction f = s.step(Domain::HalfLine, 16, 128, 8);
    const StepFunction qf = Q(f);
    CHECK(Q(qf) == qf);
    for (const SpaceDescriptor& sp : spaces) {
      CHECK(sp.norm(qf) <= sp.norm(f) * (1 + 1e-9));
    }
  }
}

TEST_CASE("dyadic dilation commutes with S and block averages") {
  oracle::Sampler s(26);
  for (int i = 0; i < 200; ++i) {
    const auto m = s.sequence(-10, 10);
    const int n = s.integer(-5, 5);
    const DyadicSequence a(m);
    CHECK(dilate_dyadic(S(a), n) == S(shift(a, n, ShiftVariant::Full)));
    const StepFunction f = restrict_to(s.step(Domain::HalfLine, 16, 64), q(1, 16), 4);
    CHECK(block_averages(dilate_dyadic(f, 1)) == shift(block_averages(f), 1, ShiftVariant::Full));
  }
}

TEST_CASE("lattice report on half-line spaces") {
  const SpaceDescriptor spaces[] = {
      lp_half(2), SpaceDescriptor::lorentz(1, ConcaveWeight::power(0.5), Domain::HalfLine),
      SpaceDescriptor::orlicz(OrliczFunction::power_log(2, 1), Domain::HalfLine)};
  for (const SpaceDescriptor& sp : spaces) {
    for (int n : {1, 2, -1}) {
      const Prop4Report r = verify_prop4(sp, n, 60, 7);
      CAPTURE(n);
      CHECK(r.passed());
      CHECK(r.equa102.checked == 60);
      CHECK(r.q_worst_ratio <= 1 + 1e-9);
      for (const BoundPair* b : {&r.tau, &r.tau_zero, &r.tau_infinity, &r.sigma}) {
        CHECK(b->sampled_lower <= b->certified_upper * (1 + 1e-9));
      }
    }
  }
  const Prop4Report l2 = verify_prop4(lp_half(2), 2, 40, 3);
  CHECK(l2.tau.sampled_lower == Approx(2).epsilon(1e-12));
  CHECK(l2.tau.certified_upper == Approx(2).epsilon(1e-12));
  CHECK_THROWS_AS(verify_prop4(SpaceDescriptor::lp(2), 1, 10, 0), std::invalid_argument);
}

TEST_CASE("report is deterministic in the seed") {
  const Prop4Report a = verify_prop4(lp_half(3), 1, 30, 99);
  const Prop4Report b = verify_prop4(lp_half(3), 1, 30, 99);
  CHECK(a.tau.sampled_lower == b.tau.sampled_lower);
  CHECK(a.sigma.sampled_lower == b.sigma.sampled_lower);
  CHECK(a.q_worst_ratio == b.q_worst_ratio);
}

TEST_CASE("shift exponents of L^p") {
  const auto cands = default_shift_candidates(30, 0, 8);
  for (double p : {1.0, 2.0, 4.0}) {
    for (ShiftExponent e : {ShiftExponent::Gamma, ShiftExponent::Delta, ShiftExponent::GammaZero,
                            ShiftExponent::DeltaZero, ShiftExponent::GammaInfinity,
                            ShiftExponent::DeltaInfinity}) {
      CAPTURE(to_string(e));
      CHECK(shift_exponent(lp_half(p), e, 10, cands).value == Approx(1 / p).epsilon(1e-12));
    }
  }
  CHECK(shift_lower_bound(lp_half(2), 4, ShiftVariant::Full, cands) == Approx(4).epsilon(1e-12));
  const std::vector<DyadicSequence> lone = {DyadicSequence::unit(-1)};
  CHECK_THROWS_AS(shift_exponent(lp_half(2), ShiftExponent::DeltaZero, 3, lone), EstimateError);
}
