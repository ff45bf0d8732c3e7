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

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "symfun/rational.hpp"
#include "symfun/step_function.hpp"

using namespace symfun;

namespace {

Rational q(long n, long d) { return make_rational(n, d); }

StepFunction unit(std::vector<Rational> b, std::vector<double> v) {
  return StepFunction(Domain::Unit, std::move(b), std::move(v));
}

StepFunction half(std::vector<Rational> b, std::vector<double> v) {
  return StepFunction(Domain::HalfLine, std::move(b), std::move(v));
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(-3) == q(1, 8));
  CHECK(pow2(70) == Rational(mpz_class(1) << 70));
  CHECK(to_rational(0.375) == q(3, 8));
  CHECK_THROWS_AS(to_rational(std::numeric_limits<double>::infinity()), std::domain_error);
  // halfway between 1 and the next double rounds to even
  const Rational mid = Rational(1) + pow2(-53);
  CHECK(to_double(mid) == 1.0);
  const Rational above = Rational(1) + pow2(-53) + pow2(-80);
  CHECK(to_double(above) == std::nextafter(1.0, 2.0));
  CHECK(to_double(q(1, 3)) == 1.0 / 3.0);
  CHECK(to_string(q(6, 4)) == "3/2");
}

TEST_CASE("canonical form") {
  const StepFunction f = half({q(1, 2), 1, 2, 3}, {1, 1, 0, 0});
  CHECK(f.breakpoints() == std::vector<Rational>{1});
  CHECK(f.values() == std::vector<double>{1});
  CHECK(StepFunction(Domain::HalfLine).is_zero());
  CHECK(half({1}, {0}).is_zero());
  CHECK(half({1}, {-0.0}) == StepFunction(Domain::HalfLine));
  CHECK_THROWS_AS(half({1, q(1, 2)}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(half({0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(half({1}, {std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(unit({2}, {1}), std::domain_error);
  // interior zeros survive between nonzero pieces
  const StepFunction g = half({1, 2, 3}, {1, 0, 1});
  CHECK(g.size() == 3);
  CHECK(g.support_measure() == 2);
  CHECK(g.support_end() == 3);
}

TEST_CASE("evaluation uses the left-open convention") {
  const StepFunction f = half({1, 2}, {3, 4});
  CHECK(f(Rational(1)) == 3);
  CHECK(f(q(3, 2)) == 4);
  CHECK(f(Rational(2)) == 4);
  CHECK(f(q(5, 2)) == 0);
  CHECK(f(0.5) == 3);
}

TEST_CASE("from_segments fills gaps and rejects overlap") {
  const StepFunction f =
      StepFunction::from_segments(Domain::HalfLine, {{1, 2, 1.0}, {3, 4, 2.0}});
  CHECK(f == half({1, 2, 3, 4}, {0, 1, 0, 2}));
  CHECK_THROWS_AS(
      StepFunction::from_segments(Domain::HalfLine, {{1, 3, 1.0}, {2, 4, 2.0}}),
      std::invalid_argument);
}

TEST_CASE("rearrange examples") {
  const StepFunction chi = StepFunction::indicator(Domain::Unit, 0, 1);
  CHECK(rearrange(chi) == chi);

  const StepFunction f = unit({q(1, 2), q(3, 4)}, {1, 2});
  CHECK(rearrange(f) == unit({q(1, 4), q(3, 4)}, {2, 1}));

  const StepFunction g = StepFunction::indicator(Domain::Unit, q(1, 5), q(3, 10), -3);
  CHECK(rearrange(g) == unit({q(1, 10)}, {3}));
}

TEST_CASE("equimeasurable examples") {
  const StepFunction f = unit({q(1, 4), q(1, 2)}, {1, -2});
  CHECK(equimeasurable(f, f, 0));
  CHECK(equimeasurable(f, translate(f, q(1, 3)), 0));
  CHECK_FALSE(equimeasurable(StepFunction::indicator(Domain::Unit, 0, 1),
                             StepFunction::indicator(Domain::Unit, 0, q(1, 2), 2), 0));
  // tolerance in measure
  const StepFunction a = unit({q(1, 2)}, {1});
  const StepFunction b = unit({q(1, 2) + q(1, 1000)}, {1});
  CHECK_FALSE(equimeasurable(a, b, 0));
  CHECK(equimeasurable(a, b, 0.01));
}

TEST_CASE("distribution function") {
  const StepFunction f = half({1, 2, 4}, {1, -3, 1});
  const DistributionFunction d = distribution(f);
  CHECK(d.levels == std::vector<double>{3, 1});
  CHECK(d.measures == std::vector<Rational>{1, 4});
  CHECK(d.measure_above(0) == 4);
  CHECK(d.measure_above(1) == 1);
  CHECK(d.measure_above(3) == 0);
  CHECK(d.measure_above(0.5) == oracle::measure_above(f, 0.5));
}

TEST_CASE("dilate examples") {
  const StepFunction chi = StepFunction::indicator(Domain::HalfLine, 0, 1);
  CHECK(dilate(chi, Rational(2), DilationMode::Full) ==
        StepFunction::indicator(Domain::HalfLine, 0, 2));
  const StepFunction u = unit({q(1, 2), 1}, {1, 2});
  CHECK(dilate(u, Rational(1), DilationMode::UnitTruncated) == u);
  CHECK(dilate(chi, Rational(1), DilationMode::Full) == chi);
  CHECK(dilate(chi, Rational(1), DilationMode::ZeroPart) == chi);
  CHECK(dilate(u, Rational(4), DilationMode::UnitTruncated) ==
        StepFunction::indicator(Domain::Unit, 0, 1));
  // contraction on the unit interval keeps the whole profile
  CHECK(dilate(u, q(1, 2), DilationMode::UnitTruncated) == unit({q(1, 4), q(1, 2)}, {1, 2}));
  // ZeroPart cuts input and output at 1
  const StepFunction h = half({q(1, 2), 2}, {1, 5});
  CHECK(dilate(h, Rational(2), DilationMode::ZeroPart) == half({1}, {1}));
  CHECK(dilate(h, q(1, 2), DilationMode::ZeroPart) == half({q(1, 4), q(1, 2)}, {1, 5}));
  CHECK_THROWS_AS(dilate(u, Rational(2), DilationMode::Full), std::invalid_argument);
  CHECK_THROWS_AS(dilate(h, Rational(2), DilationMode::UnitTruncated), std::invalid_argument);
  CHECK_THROWS_AS(dilate(h, Rational(0), DilationMode::Full), std::invalid_argument);
  CHECK_THROWS_AS(dilate(h, -1.0, DilationMode::Full), std::invalid_argument);
}

TEST_CASE("in_G_set examples") {
  const StepFunction chi12 = StepFunction::indicator(Domain::HalfLine, 1, 2);
  CHECK(in_G_set(chi12));
  CHECK(in_G_set(half({1, 2, 4}, {0, 1, 0.5})));
  CHECK_FALSE(in_G_set(half({1, 2, 3}, {0, 1, 2})));
  CHECK_FALSE(in_G_set(half({q(1, 2), 2}, {0, 1})));
  CHECK_FALSE(in_G_set(half({1, 2}, {0, -1})));
  CHECK_FALSE(in_G_set(StepFunction(Domain::HalfLine)));
  // n < 0: f in the dilated set iff sigma_{2^n} f is in the plain set
  const StepFunction wide = StepFunction::indicator(Domain::HalfLine, 4, 8);
  CHECK(in_G_set(wide, -2));
  CHECK_FALSE(in_G_set(wide, 0));
}

TEST_CASE("translate and disjoint sums") {
  const StepFunction f = StepFunction::indicator(Domain::Unit, 0, q(1, 4));
  CHECK(translate(f, q(1, 2)) == StepFunction::indicator(Domain::Unit, q(1, 2), q(3, 4)));
  CHECK_THROWS_AS(translate(f, q(7, 8)), std::domain_error);

  const double one[] = {1.0};
  const StepFunction parts1[] = {f};
  CHECK(disjoint_sum(one, parts1) == f);

  const double ones[] = {1.0, 1.0};
  const StepFunction halves[] = {StepFunction::indicator(Domain::Unit, 0, q(1, 2)),
                                 StepFunction::indicator(Domain::Unit, q(1, 2), 1)};
  CHECK(disjoint_sum(ones, halves) == StepFunction::indicator(Domain::Unit, 0, 1));

  const StepFunction overlap[] = {StepFunction::indicator(Domain::Unit, 0, q(1, 2)),
                                  StepFunction::indicator(Domain::Unit, q(1, 4), 1)};
  CHECK_THROWS_AS(disjoint_sum(ones, overlap), std::invalid_argument);
}

TEST_CASE("integral matches the oracle") {
  oracle::Sampler s(3);
  for (int i = 0; i < 200; ++i) {
    const StepFunction f = s.step(Domain::HalfLine, 16, 64);
    CHECK(f.integral() == oracle::integral(f, 0, 1000));
    const Rational a = q(s.integer(0, 32), 16), b = a + q(s.integer(0, 32), 16);
    CHECK(f.integral(a, b) == oracle::integral(f, a, b));
  }
}

TEST_CASE("pointwise algebra") {
  const StepFunction f = half({1, 2}, {1, -2});
  const StepFunction g = half({q(3, 2), 3}, {1, 1});
  const StepFunction s = add(f, g);
  for (const Rational& t : {q(1, 2), q(5, 4), q(7, 4), q(5, 2), Rational(4)}) {
    CHECK(s(t) == oracle::eval(f, t) + oracle::eval(g, t));
  }
  CHECK(abs(f) == half({1, 2}, {1, 2}));
  CHECK(scale(f, 0).is_zero());
  CHECK(scale(f, -1) == half({1, 2}, {-1, 2}));
  CHECK(pointwise_le(abs(f), scale(abs(f), 2)));
  CHECK_FALSE(pointwise_le(g, f));
  CHECK(restrict_to(f, q(1, 2), q(3, 2)) == half({q(1, 2), 1, q(3, 2)}, {0, 1, -2}));
  CHECK(with_domain(half({1}, {1}), Domain::Unit) == StepFunction::indicator(Domain::Unit, 0, 1));
  CHECK_THROWS(with_domain(f, Domain::Unit));
}

TEST_CASE("monotonicity predicates") {
  CHECK(half({1, 2}, {2, 1}).is_nonincreasing());
  CHECK_FALSE(half({1, 2}, {1, 2}).is_nonincreasing());
  CHECK(half({1, 2}, {2, 1}).is_nonnegative());
  CHECK_FALSE(half({1, 2}, {2, -1}).is_nonnegative());
  CHECK(half({1, 2}, {-1, 3}).sup_abs() == 3);
}
