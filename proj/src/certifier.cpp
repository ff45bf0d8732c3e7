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

#include "symfun/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "symfun/parallel.hpp"
#include "symfun/space_config.hpp"

namespace symfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_index(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

void check_p(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("target p must be >= 1");
}

mpz_class floor_to_mpz(long double v) {
  if (v < 0x1.0p63L) return mpz_class(static_cast<unsigned long>(std::floor(v)));
  int e = 0;
  const long double frac = std::frexp(v, &e);
  mpz_class mant(static_cast<unsigned long>(std::ldexp(frac, 64)));
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(e - 64));
  return out;
}

Rational rational_pow(const Rational& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::vector<double> sorted_normalized(std::vector<double> a, double p) {
  for (double& v : a) v = std::fabs(v);
  std::sort(a.begin(), a.end(), std::greater<>());
  const double norm = lp_norm(a, p);
  if (norm > 0) {
    for (double& v : a) v /= norm;
  }
  return a;
}

std::string format_gamma(double g) {
  return format_number(g);
}

bool better(const CertifyResult& a, const CertifyResult& b) {
  const bool sa = a.verdict == Verdict::Success, sb = b.verdict == Verdict::Success;
  if (sa != sb) return sa;
  return a.report.distortion() < b.report.distortion();
}

}  // namespace

double eta(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  return epsilon / (2.0 * (1.0 + epsilon));
}

Rational eta_exact(double epsilon) {
  eta(epsilon);
  const Rational e = to_rational(epsilon);
  Rational out = e / (2 * (1 + e));
  out.canonicalize();
  return out;
}

mpz_class n_threshold(int m, double p, const Rational& eta) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("n_threshold needs 1 < p < inf");
  }
  if (sgn(eta) <= 0 || eta >= 1) throw std::invalid_argument("eta must lie in (0, 1)");
  const Rational P = to_rational(p);
  Rational e = 2 * P / (P - 1);
  e.canonicalize();
  const Rational a = Rational(2 * m) / (1 - eta);
  const Rational b = Rational(2 * m) / eta;
  if (e.get_den() == 1 && e.get_num() <= 4096) {
    const unsigned long k = e.get_num().get_ui();
    const Rational big = std::max(rational_pow(a, k), rational_pow(b, k));
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), big.get_num_mpz_t(), big.get_den_mpz_t());
    return out + 1;
  }
  const long double ex = static_cast<long double>(e.get_d());
  const long double lg =
      ex * std::max(std::log2(static_cast<long double>(a.get_d())),
                    std::log2(static_cast<long double>(b.get_d())));
  if (!(lg < 16000.0L)) throw std::overflow_error("n_threshold is not representable");
  return floor_to_mpz(std::exp2(lg)) + 1;
}

TailReport tail_diagnostics(const StepFunction& f, double n, double p, double eta) {
  if (!(n >= 1.0)) throw std::invalid_argument("n must be >= 1");
  check_p(p);
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0, 1)");
  if (!f.is_nonnegative() || !f.is_nonincreasing()) {
    throw std::invalid_argument("tail diagnostics need f nonnegative and nonincreasing");
  }
  TailReport r;
  const double e1 = std::isinf(p) ? -1.0 : (1.0 - p) / p;
  r.l1 = to_double(f.integral());
  r.l1_bound = 2.0 * std::pow(n, e1);
  r.l1_ok = r.l1 <= r.l1_bound;
  r.tail_bound = 2.0 * std::pow(n, e1 / 2.0);
  r.tail_start = r.tail_bound / (1.0 - eta);
  const auto& br = f.breakpoints();
  const auto it = std::upper_bound(br.begin(), br.end(), to_rational(r.tail_start));
  const auto i = static_cast<std::size_t>(it - br.begin());
  r.tail_sup = i < f.values().size() ? f.values()[i] : 0.0;
  r.tail_ok = r.tail_sup <= r.tail_bound;
  return r;
}

double lp_norm(std::span<const double> a, double p) {
  check_p(p);
  double mx = 0.0;
  for (double v : a) mx = std::max(mx, std::fabs(v));
  if (std::isinf(p) || mx == 0.0) return mx;
  long double total = 0;
  if (p == 1.0) {
    for (double v : a) total += std::fabs(v);
    return static_cast<double>(total);
  }
  for (double v : a) total += std::pow(static_cast<long double>(std::fabs(v) / mx), p);
  return mx * static_cast<double>(std::pow(total, 1.0L / p));
}

StepFunction WitnessSystem::scaled_generator() const {
  return scale(generator, 1.0 / anchor);
}

void WitnessSystem::validate() const {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  check_p(p);
  if (generator.domain() != Domain::Unit) {
    throw std::invalid_argument("generator must live on the unit interval");
  }
  if (generator.is_zero()) throw std::invalid_argument("zero generator");
  if (!generator.is_nonnegative() || !generator.is_nonincreasing()) {
    throw std::invalid_argument("generator must be nonnegative and nonincreasing");
  }
  if (generator.support_end() > make_rational(1, m)) {
    throw std::invalid_argument("generator support exceeds (0, 1/m]");
  }
  if (space.domain() != Domain::Unit) {
    throw std::invalid_argument("witness systems live in unit-interval spaces");
  }
  if (!(anchor > 0.0) || !std::isfinite(anchor)) {
    throw std::invalid_argument("anchor must be positive and finite");
  }
}

std::vector<StepFunction> WitnessSystem::translates() const {
  std::vector<StepFunction> out;
  const StepFunction g = scaled_generator();
  for (int k = 0; k < m; ++k) out.push_back(translate(g, make_rational(k, m)));
  return out;
}

double WitnessSystem::combination_norm(std::span<const double> a) const {
  if (static_cast<int>(a.size()) != m) throw std::invalid_argument("coefficient count != m");
  std::vector<std::pair<double, double>> levels;
  for (const Segment& s : generator.segments()) {
    if (s.value != 0.0) levels.emplace_back(s.value, to_double(s.hi - s.lo));
  }
  std::vector<std::pair<double, double>> pieces;
  pieces.reserve(levels.size() * a.size());
  for (double c : a) {
    if (c == 0.0) continue;
    for (const auto& [v, len] : levels) pieces.emplace_back(std::fabs(c) * v, len);
  }
  if (pieces.empty()) return 0.0;
  std::vector<Level> prof = profile_from_pieces(std::move(pieces));
  if (prof.back().end > 1.0 && prof.back().end < 1.0 + 1e-12) prof.back().end = 1.0;
  return space.norm_of_profile(prof);
}

double WitnessSystem::combination_norm_exact(std::span<const double> a) const {
  if (static_cast<int>(a.size()) != m) throw std::invalid_argument("coefficient count != m");
  std::vector<StepFunction> parts;
  for (int k = 0; k < m; ++k) parts.push_back(translate(generator, make_rational(k, m)));
  return space.norm(disjoint_sum(a, parts));
}

double WitnessSystem::ratio(std::span<const double> a) const {
  return combination_norm(a) / (anchor * lp_norm(a, p));
}

double WitnessSystem::ratio_exact(std::span<const double> a) const {
  return combination_norm_exact(a) / (anchor * lp_norm(a, p));
}

WitnessSystem make_witness_system(const SpaceDescriptor& space, double p, int m,
                                  const StepFunction& generator, std::string name) {
  WitnessSystem w;
  w.generator = generator;
  w.m = m;
  w.p = p;
  w.space = space;
  w.generator_name = std::move(name);
  w.validate();
  const std::vector<double> flat(static_cast<std::size_t>(m), 1.0);
  w.anchor = w.ratio(flat);
  w.validate();
  return w;
}

DistortionReport equivalence_constants(const WitnessSystem& w, int budget, std::uint64_t seed) {
  w.validate();
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  DistortionReport r;
  r.seed = seed;
  r.lo = kInf;
  r.hi = 0.0;
  const auto m = static_cast<std::size_t>(w.m);
  const auto consider = [&](const std::vector<double>& a) {
    const double q = w.ratio(a);
    if (!std::isfinite(q) || !(q > 0)) throw std::runtime_error("non-finite distortion ratio");
    if (q < r.lo) {
      r.lo = q;
      r.argmin = a;
    }
    if (q > r.hi) {
      r.hi = q;
      r.argmax = a;
    }
    ++r.candidate_count;
  };
  for (std::size_t j = 1; j <= m && r.candidate_count < budget; ++j) {
    std::vector<double> a(m, 0.0);
    const double v = std::isinf(w.p) ? 1.0 : std::pow(static_cast<double>(j), -1.0 / w.p);
    std::fill(a.begin(), a.begin() + static_cast<long>(j), v);
    consider(a);
  }
  std::mt19937_64 rng(seed);
  const auto refine = [&](std::vector<double> a) {
    const int i = uniform_index(rng, w.m);
    if (unit_uniform(rng) < 0.125) {
      a[static_cast<std::size_t>(i)] = 0.0;
    } else {
      a[static_cast<std::size_t>(i)] *= std::exp2(2.0 * unit_uniform(rng) - 1.0);
      if (a[static_cast<std::size_t>(i)] == 0.0) a[static_cast<std::size_t>(i)] = unit_uniform(rng);
    }
    return a;
  };
  for (int step = 0; r.candidate_count < budget; ++step) {
    std::vector<double> a;
    switch (step % 3) {
      case 0: {
        a.assign(m, 0.0);
        const int support = 1 + uniform_index(rng, w.m);
        const bool heavy = unit_uniform(rng) < 0.5;
        for (int i = 0; i < support; ++i) {
          const double u = unit_uniform(rng);
          a[static_cast<std::size_t>(i)] = heavy ? -std::log1p(-u) : u;
        }
        break;
      }
      case 1: a = refine(r.argmax); break;
      default: a = refine(r.argmin); break;
    }
    a = sorted_normalized(std::move(a), w.p);
    if (a.front() == 0.0) {
      a.assign(m, 0.0);
      a.front() = 1.0;
    }
    consider(a);
  }
  return r;
}

std::string to_string(GeneratorFamily f) {
  switch (f) {
    case GeneratorFamily::Indicator: return "indicator";
    case GeneratorFamily::Power: return "power";
    case GeneratorFamily::TruncatedPower: return "truncated_power";
    case GeneratorFamily::All: return "all";
  }
  return "unknown";
}

GeneratorFamily parse_generator_family(const std::string& s) {
  for (GeneratorFamily f : {GeneratorFamily::Indicator, GeneratorFamily::Power,
                            GeneratorFamily::TruncatedPower, GeneratorFamily::All}) {
    if (to_string(f) == s) return f;
  }
  throw std::invalid_argument("unknown generator family '" + s + "'");
}

StepFunction indicator_generator(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return StepFunction::indicator(Domain::Unit, Rational(0), make_rational(1, m));
}

StepFunction truncated_power_generator(int m, double gamma, int rho_octaves) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0, 1)");
  if (rho_octaves < 0 || rho_octaves > 200) {
    throw std::invalid_argument("octave count must lie in [0, 200]");
  }
  const Rational top = make_rational(1, m);
  const double log2_top = -std::log2(static_cast<double>(m));
  const auto value = [&](int j) { return std::exp2(-gamma * (log2_top - j)); };
  std::vector<Segment> pieces;
  pieces.push_back({Rational(0), top * pow2(-rho_octaves), value(rho_octaves)});
  for (int j = rho_octaves - 1; j >= 0; --j) {
    pieces.push_back({top * pow2(-j - 1), top * pow2(-j), value(j)});
  }
  return StepFunction::from_segments(Domain::Unit, std::move(pieces));
}

StepFunction power_generator(int m, double gamma, int depth) {
  return truncated_power_generator(m, gamma, depth);
}

std::vector<NamedGenerator> generators(GeneratorFamily family, int m) {
  std::vector<NamedGenerator> out;
  const bool all = family == GeneratorFamily::All;
  if (all || family == GeneratorFamily::Indicator) {
    out.push_back({"indicator", indicator_generator(m)});
  }
  if (all || family == GeneratorFamily::Power) {
    for (int i = 1; i <= 9; ++i) {
      const double g = i / 10.0;
      out.push_back({"power(gamma=" + format_gamma(g) + ")", power_generator(m, g)});
    }
  }
  if (all || family == GeneratorFamily::TruncatedPower) {
    for (double g : {0.25, 0.5, 0.75}) {
      for (int rho : {1, 2, 4, 8}) {
        out.push_back({"truncated_power(gamma=" + format_gamma(g) +
                           ",octaves=" + std::to_string(rho) + ")",
                       truncated_power_generator(m, g, rho)});
      }
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::Success ? "success" : "inconclusive";
}

CertifyResult certify(const SpaceDescriptor& space, double p, int m, double epsilon,
                      GeneratorFamily family, int budget, std::uint64_t seed) {
  check_p(p);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
  if (space.domain() != Domain::Unit) {
    throw std::invalid_argument("certify needs a unit-interval space");
  }
  CertifyResult best;
  bool have = false;
  int tried = 0;
  for (const NamedGenerator& g : generators(family, m)) {
    CertifyResult c;
    c.system = make_witness_system(space, p, m, g.f, g.name);
    c.report = equivalence_constants(c.system, budget, seed);
    c.verdict = c.report.hi <= 1.0 + epsilon && c.report.lo >= 1.0 / (1.0 + epsilon)
                    ? Verdict::Success
                    : Verdict::Inconclusive;
    ++tried;
    if (!have || better(c, best)) {
      best = std::move(c);
      have = true;
    }
  }
  best.p = p;
  best.m = m;
  best.epsilon = epsilon;
  best.generators_tried = tried;
  return best;
}

bool ScanTable::consistent() const {
  for (const ScanRow& r : rows) {
    if (!r.in_interval && r.result.verdict == Verdict::Success) return false;
  }
  return true;
}

ScanTable f_interval_scan(const SpaceDescriptor& space, int m, double epsilon,
                          std::span<const double> grid, int budget, GeneratorFamily family,
                          std::uint64_t seed, int n_max, int grid_depth) {
  ScanTable t;
  t.interval = f_interval(space, n_max, grid_depth);
  const std::vector<double> points(grid.begin(), grid.end());
  t.rows = parallel_map<ScanRow>(points.size(), [&](std::size_t i) {
    ScanRow row;
    row.p = points[i];
    row.in_interval = t.interval.contains(points[i], 1e-9);
    row.result = certify(space, points[i], m, epsilon, family, budget, seed);
    return row;
  });
  return t;
}

}  // namespace symfun
