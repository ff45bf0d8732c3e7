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

#ifndef SYMFUN_CERTIFIER_HPP_
#define SYMFUN_CERTIFIER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symfun/indices.hpp"
#include "symfun/space.hpp"
#include "symfun/step_function.hpp"

namespace symfun {

/// eps / (2 (1 + eps)); eps > 0.
double eta(double epsilon);
Rational eta_exact(double epsilon);

/// Smallest integer n > max{(2m/(1-eta))^e, (2m/eta)^e}, e = 2p/(p-1).
/// Exact when e is an integer. Throws std::invalid_argument for p <= 1 or
/// p = inf and std::overflow_error when the value is not representable.
mpz_class n_threshold(int m, double p, const Rational& eta);

struct TailReport {
  double l1 = 0.0;
  double l1_bound = 0.0;    ///< 2 n^{(1-p)/p}
  bool l1_ok = true;
  double tail_start = 0.0;  ///< 2 n^{(1-p)/(2p)} / (1 - eta)
  double tail_sup = 0.0;    ///< sup of f beyond tail_start
  double tail_bound = 0.0;  ///< 2 n^{(1-p)/(2p)}
  bool tail_ok = true;
  double l1_margin() const { return l1_bound - l1; }
  double tail_margin() const { return tail_bound - tail_sup; }
  bool passed() const { return l1_ok && tail_ok; }
};

/// f nonincreasing, nonnegative, on the half-line.
TailReport tail_diagnostics(const StepFunction& f, double n, double p, double eta);

/// Translates x_k = f(. - (k-1)/m) of a generator supported in (0, 1/m].
struct WitnessSystem {
  StepFunction generator{Domain::Unit};
  int m = 1;
  double p = 2.0;
  SpaceDescriptor space = SpaceDescriptor::lp(2.0);
  std::string generator_name;
  /// ratio of the flat m-vector for the raw generator; ratios divide by it
  double anchor = 1.0;

  /// generator / anchor
  StepFunction scaled_generator() const;
  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;
  std::vector<StepFunction> translates() const;
  /// ||sum a_k x_k|| through the merged level profile.
  double combination_norm(std::span<const double> a) const;
  /// Same through the explicit disjoint sum.
  double combination_norm_exact(std::span<const double> a) const;
  /// ||sum a_k x_k|| / (anchor ||a||_p).
  double ratio(std::span<const double> a) const;
  double ratio_exact(std::span<const double> a) const;
};

/// Normalizes the generator so the flat m-vector has ratio 1.
WitnessSystem make_witness_system(const SpaceDescriptor& space, double p, int m,
                                  const StepFunction& generator, std::string name);

double lp_norm(std::span<const double> a, double p);

struct DistortionReport {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> argmin;  ///< coefficient vector attaining lo
  std::vector<double> argmax;
  int candidate_count = 0;
  std::uint64_t seed = 0;
  double distortion() const { return hi / lo; }
};

/// Flat vectors j = 1..m first, then seeded random sorted vectors alternating
/// with one-coordinate refinements of the current extremes. `budget` counts
/// all candidates, so a larger budget extends the same stream.
DistortionReport equivalence_constants(const WitnessSystem& w, int budget, std::uint64_t seed);

enum class GeneratorFamily { Indicator, Power, TruncatedPower, All };
std::string to_string(GeneratorFamily f);
GeneratorFamily parse_generator_family(const std::string& s);

struct NamedGenerator {
  std::string name;
  StepFunction f{Domain::Unit};
};

/// Unnormalized generators on (0, 1/m].
std::vector<NamedGenerator> generators(GeneratorFamily family, int m);
StepFunction indicator_generator(int m);
/// t^-gamma sampled at right endpoints of ((1/m) 2^-j-1, (1/m) 2^-j], j < depth.
StepFunction power_generator(int m, double gamma, int depth = 24);
/// t^-gamma above rho/m, constant below.
StepFunction truncated_power_generator(int m, double gamma, int rho_octaves);

enum class Verdict { Success, Inconclusive };
std::string to_string(Verdict v);

struct CertifyResult {
  WitnessSystem system;
  DistortionReport report;
  Verdict verdict = Verdict::Inconclusive;
  double p = 0.0;
  int m = 0;
  double epsilon = 0.0;
  int generators_tried = 0;
};

/// Unit-interval spaces only. Success iff hi <= 1 + eps and lo >= 1/(1 + eps);
/// among generators success wins, then the smallest distortion.
CertifyResult certify(const SpaceDescriptor& space, double p, int m, double epsilon,
                      GeneratorFamily family = GeneratorFamily::All, int budget = 2000,
                      std::uint64_t seed = 0);

struct ScanRow {
  double p = 0.0;
  bool in_interval = false;
  CertifyResult result;
};

struct ScanTable {
  FInterval interval;
  std::vector<ScanRow> rows;
  /// No success outside the interval.
  bool consistent() const;
};

/// Grid points run in parallel; rows keep the grid order.
ScanTable f_interval_scan(const SpaceDescriptor& space, int m, double epsilon,
                          std::span<const double> grid, int budget = 2000,
                          GeneratorFamily family = GeneratorFamily::All, std::uint64_t seed = 0,
                          int n_max = kDefaultNMax, int grid_depth = kDefaultGridDepth);

}  // namespace symfun

#endif  // SYMFUN_CERTIFIER_HPP_
