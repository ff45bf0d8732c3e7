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
#include <functional>
#include <limits>

#include "oracles.hpp"
#include "symfun/indices.hpp"

using namespace symfun;
using doctest::Approx;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<std::pair<double, int>> kAlternating = {{0.2, 15}, {1, 15}, {0.2, 15}, {1, 15}};

ConcaveWeight alternating() {
  std::vector<SlopeBlock> sb;
  for (const auto& [r, c] : kAlternating) sb.push_back({r, c});
  return ConcaveWeight::piecewise_linear_log(-60, sb);
}

long double oracle_log2(long double x) {
  static const oracle::PlogWeight w{-60, oracle::expand_blocks(kAlternating)};
  return std::log2(w(x));
}

/// Running-inf estimate from the dense oracle on the unit-interval grid.
double oracle_unit_index(const std::function<long double(long double)>& log2_psi, bool mu,
                         int n_max, int depth, int points = 10000) {
  long double running = INFINITY;
  for (int n = 1; n <= n_max; ++n) {
    const long double lt = mu ? -n : n;
    const long double hi = mu ? 0 : -n;
    running = std::min(running, oracle::dense_log2_dilation(log2_psi, lt, -depth, hi, points) / n);
  }
  return static_cast<double>(mu ? -running : running);
}

}  // namespace

TEST_CASE("power dilation functions are closed form") {
  for (double r : {0.25, 0.5, 1.0}) {
    const PositiveFunction p = PositiveFunction::power(r);
    for (DilationVariant v : {DilationVariant::UnitTilde, DilationVariant::Full,
                              DilationVariant::Zero, DilationVariant::Infinity}) {
      for (int n : {1, 5, 17}) {
        CHECK(log2_dilation_function(p, n, v) == Approx(n * r).epsilon(1e-12));
        CHECK(log2_dilation_function(p, -n, v) == Approx(-n * r).epsilon(1e-12));
      }
      CHECK(dilation_function(p, 1.0, v) == 1.0);
    }
  }
  CHECK(dilation_function(PositiveFunction::glued_power(0.2, 0.9), 1.0, DilationVariant::Full) >= 1.0);
  CHECK_THROWS(dilation_function(PositiveFunction::power(0.5), 0.0, DilationVariant::Full));
  CHECK_THROWS_AS(log2_dilation_function(PositiveFunction::power(0.5), 70, DilationVariant::Zero),
                  EstimateError);
}

TEST_CASE("non-dyadic t includes the range endpoint") {
  // psi(s) = s^0.5 on (0,1], M~(t) at t = 2^2.5 over s in (0, 2^-2.5]
  const PositiveFunction p = PositiveFunction::glued_power(0.5, 0.1);
  CHECK(log2_dilation_function(p, 2.5, DilationVariant::UnitTilde) == Approx(1.25).epsilon(1e-12));
}

TEST_CASE("power-sum contraction matches a dense grid") {
  const ConcaveWeight w = ConcaveWeight::power_sum(0.3, 0.7);
  const PositiveFunction psi = PositiveFunction::of(w);
  const auto log2_psi = [](long double x) {
    return std::log2(std::exp2(0.3L * x) + std::exp2(0.7L * x));
  };
  const double got = dilation_function(psi, std::exp2(-20.0), DilationVariant::UnitTilde);
  const double ref = std::exp2(static_cast<double>(oracle::dense_log2_dilation(log2_psi, -20, -60, 0)));
  CHECK(std::fabs(got / ref - 1) < 0.01);
  CHECK(std::fabs(std::log2(got) / -20 - 0.3) < 0.01);
}

TEST_CASE("index examples") {
  const PositiveFunction sq = PositiveFunction::power(0.5);
  for (IndexKind k : {IndexKind::MuUnit, IndexKind::NuUnit, IndexKind::Mu, IndexKind::Nu}) {
    const IndexEstimate e = dilation_index(sq, k, 40);
    CHECK(e.value == Approx(0.5).epsilon(1e-12));
    REQUIRE(e.per_n.size() == 40);
    for (const IndexSample& s : e.per_n) CHECK(std::fabs(std::fabs(s.value) - 0.5) < 1e-12);
  }
  CHECK(dilation_index(sq, IndexKind::MuUnit).bound_direction == BoundDirection::LowerBoundOnLimit);
  CHECK(dilation_index(sq, IndexKind::NuUnit).bound_direction == BoundDirection::UpperBoundOnLimit);
  CHECK(dilation_index(PositiveFunction::constant(2), IndexKind::Nu).value == 0.0);

  const PositiveFunction broken([](double) { return std::nan(""); }, "nan");
  CHECK_THROWS_AS(dilation_index(broken, IndexKind::Nu, 3), EstimateError);
  CHECK_THROWS_AS(dilation_index(sq, IndexKind::Nu, 0), std::invalid_argument);
}

TEST_CASE("alternating weight has a nondegenerate interval matching the oracle") {
  const PositiveFunction psi = PositiveFunction::of(alternating());
  const IndexEstimate mu = dilation_index(psi, IndexKind::MuUnit, 30);
  const IndexEstimate nu = dilation_index(psi, IndexKind::NuUnit, 30);
  CHECK(mu.value < nu.value);
  CHECK(std::fabs(mu.value - oracle_unit_index(oracle_log2, true, 30, 60)) < 0.02);
  CHECK(std::fabs(nu.value - oracle_unit_index(oracle_log2, false, 30, 60)) < 0.02);
}

TEST_CASE("running infimum is nonincreasing") {
  for (const PositiveFunction& psi :
       {PositiveFunction::of(alternating()), PositiveFunction::glued_power(0.3, 0.8),
        PositiveFunction::of(ConcaveWeight::power_sum(0.2, 0.9))}) {
    for (IndexKind k : {IndexKind::NuUnit, IndexKind::Nu, IndexKind::NuZero, IndexKind::NuInfinity,
                        IndexKind::MuUnit, IndexKind::Mu}) {
      const IndexEstimate e = dilation_index(psi, k, 25);
      for (std::size_t i = 1; i < e.per_n.size(); ++i) {
        CHECK(e.per_n[i].running_inf <= e.per_n[i - 1].running_inf);
      }
    }
  }
}

TEST_CASE("index chain on quasi-concave weights") {
  for (const ConcaveWeight& w : {alternating(), ConcaveWeight::power_sum(0.3, 0.7),
                                 ConcaveWeight::power(0.4)}) {
    const PositiveFunction psi = PositiveFunction::of(w);
    const double mu = dilation_index(psi, IndexKind::Mu).value;
    const double nu = dilation_index(psi, IndexKind::Nu).value;
    const double mu0 = dilation_index(psi, IndexKind::MuZero).value;
    const double nu0 = dilation_index(psi, IndexKind::NuZero).value;
    const double mui = dilation_index(psi, IndexKind::MuInfinity).value;
    const double nui = dilation_index(psi, IndexKind::NuInfinity).value;
    const double tol = 1e-9;
    CHECK(0 <= mu + tol);
    CHECK(mu <= mu0 + tol);
    CHECK(mu0 <= nu0 + tol);
    CHECK(nu0 <= nu + tol);
    CHECK(nu <= 1 + tol);
    CHECK(mu <= mui + tol);
    CHECK(mui <= nui + tol);
    CHECK(nui <= nu + tol);
  }
}

TEST_CASE("homogeneity of roots") {
  const PositiveFunction psi = PositiveFunction::of(alternating());
  for (double q : {2.0, 4.0}) {
    const PositiveFunction root = psi.root(q);
    for (IndexKind k : {IndexKind::MuUnit, IndexKind::NuUnit, IndexKind::Nu}) {
      const IndexEstimate a = dilation_index(psi, k, 20);
      const IndexEstimate b = dilation_index(root, k, 20);
      for (std::size_t i = 0; i < a.per_n.size(); ++i) {
        CHECK(b.per_n[i].value == a.per_n[i].value / q);
      }
    }
  }
}

TEST_CASE("boyd lower bounds") {
  for (double p : {1.0, 2.0, 4.0}) {
    const SpaceDescriptor s = SpaceDescriptor::lp(p);
    for (int n : {1, 3, 6}) {
      const StepFunction f = StepFunction::indicator(Domain::Unit, 0, pow2(-n));
      const StepFunction fam[] = {f};
      CHECK(boyd_lower_bound(s, n, fam) == Approx(std::exp2(n / p)).epsilon(1e-14));
    }
  }
  const SpaceDescriptor l2 = SpaceDescriptor::lp(2);
  CHECK(boyd_lower_bound(l2, 0, default_boyd_family(l2, 0)) == Approx(1).epsilon(1e-15));

  const SpaceDescriptor x1 = SpaceDescriptor::x1(l2);
  const StepFunction chi12[] = {StepFunction::indicator(Domain::HalfLine, 1, 2)};
  for (int n : {1, 2, 5}) CHECK(boyd_lower_bound(x1, n, chi12) == Approx(std::exp2(n)));

  for (const SpaceDescriptor& s :
       {l2, x1, SpaceDescriptor::lorentz(1, ConcaveWeight::power(0.5)),
        SpaceDescriptor::orlicz(OrliczFunction::power_log(2, 1))}) {
    for (int n : {-3, -1, 0, 1, 3}) {
      CHECK(boyd_lower_bound(s, n, default_boyd_family(s, n)) <=
            std::max(1.0, std::exp2(n)) * (1 + 1e-12));
    }
  }
}

TEST_CASE("orlicz indices") {
  for (double p : {1.0, 2.0, 4.0}) {
    const OrliczIndices o = orlicz_indices(OrliczFunction::power(p));
    CHECK(o.alpha_literal.value == Approx(1 / p).epsilon(1e-12));
    CHECK(o.beta_literal.value == Approx(1 / p).epsilon(1e-12));
    CHECK(o.alpha_phi.value == Approx(1 / p).epsilon(1e-12));
    CHECK(o.beta_phi.value == Approx(1 / p).epsilon(1e-12));
    CHECK_FALSE(o.flagged);
  }
  const OrliczIndices pl = orlicz_indices(OrliczFunction::power_log(2, 1), 40);
  // log2 phi(2^x) = -log2 N^{-1}(2^{-x}) by bisection
  const auto log2_phi = [](long double x) {
    const auto n = [](long double u) { return u * u * std::log(std::exp(1.0L) + u); };
    long double a = -200, b = 200;
    for (int i = 0; i < 90; ++i) {
      const long double mid = (a + b) / 2;
      (n(std::exp2(mid)) > std::exp2(-x) ? b : a) = mid;
    }
    return -(a + b) / 2;
  };
  CHECK(std::fabs(pl.alpha_phi.value - oracle_unit_index(log2_phi, true, 40, 60, 1500)) < 0.02);
  CHECK(std::fabs(pl.beta_phi.value - oracle_unit_index(log2_phi, false, 40, 60, 1500)) < 0.02);
  CHECK(std::fabs(pl.alpha_literal.value - 0.5) < 0.02);
  CHECK(std::fabs(pl.beta_literal.value - 0.5) < 0.02);

  const FInterval l1 = f_interval(SpaceDescriptor::orlicz(OrliczFunction::power(1)));
  CHECK(l1.lo == Approx(1));
  CHECK(l1.hi == Approx(1));
}

TEST_CASE("lorentz indices") {
  for (double q : {1.0, 2.0}) {
    for (double r : {0.3, 0.5, 0.9}) {
      const LorentzIndices l = lorentz_indices(q, ConcaveWeight::power(r));
      CHECK(l.alpha.value == Approx(r / q).epsilon(1e-12));
      CHECK(l.beta.value == Approx(r / q).epsilon(1e-12));
    }
  }
  const LorentzIndices l1 = lorentz_indices(1, ConcaveWeight::power(1));
  CHECK(l1.alpha.value == Approx(1));
  const FInterval f = f_interval(SpaceDescriptor::lorentz(1, ConcaveWeight::power(1)));
  CHECK(f.lo == Approx(1));
  CHECK(f.hi == Approx(1));

  const LorentzIndices alt = lorentz_indices(2, alternating());
  CHECK(alt.alpha.value < alt.beta.value);
  const PositiveFunction psi = PositiveFunction::of(alternating());
  CHECK(std::fabs(alt.alpha.value - dilation_index(psi, IndexKind::MuUnit).value / 2) < 0.02);
  CHECK(std::fabs(alt.beta.value - dilation_index(psi, IndexKind::NuUnit).value / 2) < 0.02);
}

TEST_CASE("min-max identities") {
  const MinMaxReport p = verify_minmax(PositiveFunction::power(0.5));
  CHECK(p.passed());
  const MinMaxReport g = verify_minmax(PositiveFunction::glued_power(0.3, 0.7));
  CHECK(g.passed());
  CHECK(g.mu.value == Approx(0.3).epsilon(1e-9));
  CHECK(g.nu.value == Approx(0.7).epsilon(1e-9));
  const MinMaxReport sq = verify_minmax(PositiveFunction::power(2), 10, 60, 0.02, 0);
  CHECK(sq.mu_identity);
  // eq6 at t = 4, lambda = 1/2 for psi = t^2 by hand: both sides equal 2
  const double x = 2, lambda = 0.5;
  const auto l = [](double y) { return 2 * y; };
  const double lhs = (l((1 - lambda) * x) - l(-lambda * x)) / x;
  const double rhs = (l((1 - lambda) * x) - l(0)) / x + (l(0) - l(-lambda * x)) / x;
  CHECK(lhs == rhs);
  CHECK(verify_minmax(PositiveFunction::power(2), 5, 20, 0.02, 1000, 9).eq6_identity);
}

TEST_CASE("interval examples") {
  for (double p : {1.0, 2.0, 3.0}) {
    const FInterval f = f_interval(SpaceDescriptor::lp(p));
    CHECK_FALSE(f.is_union);
    CHECK(f.lo == Approx(p).epsilon(1e-12));
    CHECK(f.hi == Approx(p).epsilon(1e-12));
  }
  const FInterval inf = f_interval(SpaceDescriptor::lp(kInf));
  CHECK(inf.lo == kInf);
  CHECK(inf.hi == kInf);

  const FInterval lor = f_interval(SpaceDescriptor::lorentz(1, ConcaveWeight::power(0.5)));
  CHECK(lor.lo == Approx(2).epsilon(1e-12));
  CHECK(lor.hi == Approx(2).epsilon(1e-12));

  const FInterval x1 = f_interval(SpaceDescriptor::x1(SpaceDescriptor::lp(2)));
  CHECK(x1.is_union);
  CHECK(x1.lo == Approx(1));
  CHECK(x1.hi == Approx(1));
  CHECK(x1.lo2 == Approx(2).epsilon(1e-12));
  CHECK(x1.hi2 == Approx(2).epsilon(1e-12));
  CHECK(x1.contains(1));
  CHECK(x1.contains(2));
  CHECK_FALSE(x1.contains(1.5));

  // half-line L^p: case i
  const FInterval hl = f_interval(SpaceDescriptor::lp(3, Domain::HalfLine));
  CHECK_FALSE(hl.is_union);
  CHECK(hl.lo == Approx(3));
}

TEST_CASE("estimate_from_sequence") {
  const double seq[] = {0.9, 0.7, 0.8, 0.6};
  const IndexEstimate up = estimate_from_sequence(seq, false, BoundDirection::UpperBoundOnLimit, 7);
  CHECK(up.value == 0.6);
  CHECK(up.per_n[2].running_inf == 0.7);
  CHECK(up.grid_depth == 7);
  const IndexEstimate down = estimate_from_sequence(seq, true, BoundDirection::LowerBoundOnLimit, 7);
  CHECK(down.value == -0.6);
  CHECK_THROWS_AS(estimate_from_sequence(std::span<const double>{}, false,
                                         BoundDirection::TwoSided, 0),
                  EstimateError);
}
