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

#include "symfun/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "symfun/certifier.hpp"
#include "symfun/dyadic.hpp"
#include "symfun/indices.hpp"
#include "symfun/report.hpp"
#include "symfun/space_config.hpp"

namespace symfun {

namespace {

struct Options {
  std::string space;
  std::string p = "2";
  int m = 8;
  double eps = 0.1;
  int n_max = kDefaultNMax;
  int grid_depth = kDefaultGridDepth;
  int budget = 2000;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string t;
  std::vector<int> n{1};
  std::string grid;
  std::string suite = "all";
  int samples = 1000;
  std::string family = "all";
  bool exponents = false;
};

/// Bad configuration: reported with the offending field, exit 2.
class UsageError : public std::invalid_argument {
 public:
  UsageError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct Outcome {
  Json report;
  std::string csv;
  bool passed = true;
};

std::vector<double> parse_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, field));
  if (out.empty()) throw UsageError(field, "empty list");
  return out;
}

SpaceDescriptor require_space(const Options& o) {
  if (o.space.empty()) throw UsageError("space", "--space is required");
  return parse_space(o.space);
}

void require_format(const Options& o, bool csv_ok) {
  if (o.format == "csv" && !csv_ok) throw UsageError("format", "csv is not available here");
}

Json header(const std::string& command) {
  return {{"schema", kSchemaVersion}, {"command", command}};
}

Outcome cmd_indices(const Options& o) {
  require_format(o, true);
  const SpaceDescriptor s = require_space(o);
  const SpaceIndices idx = space_indices(s, o.n_max, o.grid_depth);
  Outcome r;
  r.report = header("indices");
  r.report["space"] = format_space(s);
  r.report["domain"] = to_string(s.domain());
  Json body = to_json(idx);
  for (auto it = body.begin(); it != body.end(); ++it) r.report[it.key()] = it.value();
  r.report["f_interval"] = to_json(f_interval(idx, s.domain()));
  if (s.kind() == SpaceDescriptor::Kind::Orlicz) {
    r.report["orlicz"] = to_json(orlicz_indices(s.orlicz_function(), o.n_max, o.grid_depth));
  }
  if (s.kind() == SpaceDescriptor::Kind::Lorentz) {
    r.report["lorentz"] = to_json(lorentz_indices(s.q(), s.weight(), o.n_max, o.grid_depth));
  }
  r.csv = indices_csv(idx);
  return r;
}

Outcome cmd_fundamental(const Options& o) {
  require_format(o, false);
  const SpaceDescriptor s = require_space(o);
  std::vector<double> ts;
  if (o.t.empty()) {
    const int top = s.domain() == Domain::Unit ? 0 : 4;
    for (int k = -4; k <= top; ++k) ts.push_back(std::ldexp(1.0, k));
  } else {
    ts = parse_list(o.t, "t");
  }
  Json values = Json::array();
  for (double t : ts) {
    if (!(t > 0)) throw UsageError("t", "t must be positive");
    if (s.domain() == Domain::Unit && t > 1) throw UsageError("t", "t exceeds 1 on the unit interval");
    values.push_back({{"t", number(t)}, {"phi", number(s.fundamental(t))}});
  }
  Outcome r;
  r.report = header("fundamental");
  r.report["space"] = format_space(s);
  r.report["values"] = values;
  return r;
}

Json lattice_run(const SpaceDescriptor& s, const std::vector<int>& ns, int samples,
                 std::uint64_t seed, bool& passed) {
  Json reports = Json::array();
  for (int n : ns) {
    const Prop4Report rep = verify_prop4(s, n, samples, seed);
    passed = passed && rep.passed();
    reports.push_back(to_json(rep));
  }
  return reports;
}

Outcome cmd_lattice(const Options& o) {
  require_format(o, false);
  const SpaceDescriptor s = require_space(o);
  if (s.domain() != Domain::HalfLine) throw UsageError("space", "lattice needs domain=halfline");
  if (o.samples < 1) throw UsageError("samples", "samples must be >= 1");
  Outcome r;
  r.report = header("lattice");
  r.report["space"] = format_space(s);
  r.report["reports"] = lattice_run(s, o.n, o.samples, o.seed, r.passed);
  if (o.exponents) {
    const std::vector<DyadicSequence> cand = default_shift_candidates(60, o.seed);
    Json ex = Json::object();
    for (ShiftExponent e : {ShiftExponent::Gamma, ShiftExponent::Delta, ShiftExponent::GammaZero,
                            ShiftExponent::DeltaZero, ShiftExponent::GammaInfinity,
                            ShiftExponent::DeltaInfinity}) {
      ex[to_string(e)] = to_json(shift_exponent(s, e, o.n_max, cand));
    }
    r.report["shift_exponents"] = ex;
  }
  r.report["passed"] = r.passed;
  return r;
}

Outcome cmd_certify(const Options& o) {
  require_format(o, false);
  const SpaceDescriptor s = require_space(o);
  const double p = parse_number(o.p, "p");
  const CertifyResult c =
      certify(s, p, o.m, o.eps, parse_generator_family(o.family), o.budget, o.seed);
  Outcome r;
  r.report = header("certify");
  Json body = to_json(c);
  for (auto it = body.begin(); it != body.end(); ++it) r.report[it.key()] = it.value();
  r.passed = c.verdict == Verdict::Success;
  return r;
}

Outcome cmd_scan(const Options& o) {
  require_format(o, true);
  const SpaceDescriptor s = require_space(o);
  if (o.grid.empty()) throw UsageError("grid", "--grid is required");
  const std::vector<double> grid = parse_list(o.grid, "grid");
  const ScanTable t = f_interval_scan(s, o.m, o.eps, grid, o.budget,
                                      parse_generator_family(o.family), o.seed, o.n_max,
                                      o.grid_depth);
  Outcome r;
  r.report = header("scan");
  r.report["space"] = format_space(s);
  r.report["m"] = o.m;
  r.report["epsilon"] = number(o.eps);
  r.report["seed"] = o.seed;
  Json body = to_json(t);
  for (auto it = body.begin(); it != body.end(); ++it) r.report[it.key()] = it.value();
  r.csv = scan_csv(t);
  r.passed = t.consistent();
  return r;
}

std::vector<std::pair<std::string, PositiveFunction>> minmax_families() {
  return {
      {"power(r=0.5)", PositiveFunction::power(0.5)},
      {"glued(0.3,0.7)", PositiveFunction::glued_power(0.3, 0.7)},
      {"glued(0.8,0.2)", PositiveFunction::glued_power(0.8, 0.2)},
      {"powersum(0.3,0.7)", PositiveFunction::of(ConcaveWeight::power_sum(0.3, 0.7))},
      {"x1(lp:p=2)", SpaceDescriptor::x1(SpaceDescriptor::lp(2.0)).fundamental_function()},
      {"plog(start=-30,blocks=0.2x10/0.9x10/0.2x10/0.9x10)",
       PositiveFunction::of(ConcaveWeight::piecewise_linear_log(
           -30, {{0.2, 10}, {0.9, 10}, {0.2, 10}, {0.9, 10}}))},
  };
}

StepFunction random_unit_support(std::mt19937_64& rng) {
  std::vector<Rational> knots;
  std::vector<double> values;
  const int count = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < count; ++i) knots.push_back(make_rational(1 + static_cast<long>(rng() % 64), 64));
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    values.push_back(static_cast<double>(static_cast<int>(rng() % 33) - 16) / 8.0);
  }
  return StepFunction(Domain::HalfLine, std::move(knots), std::move(values));
}

Json x1_suite(const Options& o, bool& passed) {
  const SpaceDescriptor inners[] = {
      SpaceDescriptor::lp(2.0),
      SpaceDescriptor::lorentz(1.0, ConcaveWeight::power(0.5)),
  };
  Json out = Json::array();
  std::mt19937_64 rng(o.seed);
  for (const SpaceDescriptor& inner : inners) {
    const SpaceDescriptor x = SpaceDescriptor::x1(inner);
    int agree = 0;
    for (int i = 0; i < o.samples; ++i) {
      const StepFunction f = random_unit_support(rng);
      if (x.norm(f) == inner.norm(with_domain(rearrange(f), Domain::Unit))) ++agree;
    }
    bool linear = true;
    for (double t : {1.5, 2.0, 10.0, 1000.0}) linear = linear && x.fundamental(t) == t;
    const bool ok = agree == o.samples && linear;
    passed = passed && ok;
    out.push_back({{"space", format_space(x)},
                   {"norm_samples", o.samples},
                   {"norm_agree", agree},
                   {"fundamental_linear_beyond_1", linear},
                   {"passed", ok}});
  }
  const SpaceDescriptor x = SpaceDescriptor::x1(SpaceDescriptor::lp(2.0));
  const FInterval f = f_interval(x, o.n_max, o.grid_depth);
  const auto near = [](double a, double b) { return std::fabs(a - b) <= 1e-6; };
  const bool shape = f.is_union && near(f.lo, 1) && near(f.hi, 1) && near(f.lo2, 2) &&
                     near(f.hi2, 2);
  passed = passed && shape;
  out.push_back({{"space", format_space(x)}, {"f_interval", to_json(f)}, {"passed", shape}});
  return out;
}

Outcome cmd_verify(const Options& o) {
  require_format(o, false);
  if (o.samples < 1) throw UsageError("samples", "samples must be >= 1");
  const bool all = o.suite == "all";
  Outcome r;
  r.report = header("verify");
  r.report["suite"] = o.suite;
  r.report["seed"] = o.seed;
  r.report["samples"] = o.samples;
  Json results = Json::object();
  if (all || o.suite == "lattice") {
    Json lattice = Json::array();
    for (const char* text : {"lp:p=2,domain=halfline",
                             "lorentz:q=1,psi=power(r=0.5),domain=halfline",
                             "orlicz:n=powerlog(p=2,a=1),domain=halfline"}) {
      const SpaceDescriptor s = parse_space(text);
      lattice.push_back(
          {{"space", format_space(s)}, {"reports", lattice_run(s, {1, 2, -1}, o.samples, o.seed, r.passed)}});
    }
    results["lattice"] = lattice;
  }
  if (all || o.suite == "minmax") {
    Json mm = Json::array();
    for (const auto& [name, psi] : minmax_families()) {
      const MinMaxReport rep = verify_minmax(psi, o.n_max, o.grid_depth, 0.02, o.samples, o.seed);
      r.passed = r.passed && rep.passed();
      Json j = to_json(rep);
      j["psi"] = name;
      mm.push_back(j);
    }
    results["minmax"] = mm;
  }
  if (all || o.suite == "x1") results["x1"] = x1_suite(o, r.passed);
  r.report["results"] = results;
  r.report["passed"] = r.passed;
  return r;
}

void emit(const Options& o, const Outcome& r, std::ostream& out) {
  const std::string text = o.format == "csv" ? r.csv : dump(r.report);
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("out", "cannot open '" + o.out + "' for writing");
  file << text;
}

void add_common(CLI::App* sub, Options& o, bool needs_space) {
  auto* space = sub->add_option("--space", o.space, "space descriptor, e.g. lp:p=2");
  if (needs_space) space->required();
  sub->add_option("--n-max", o.n_max, "largest n in index estimates")->check(CLI::Range(1, 400));
  sub->add_option("--grid-depth", o.grid_depth, "dyadic grid half-width K")
      ->check(CLI::Range(1, 2000));
  sub->add_option("--seed", o.seed, "seed for randomized candidates");
  sub->add_option("--out", o.out, "write the report here instead of stdout");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void add_certify_knobs(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "number of witnesses")->check(CLI::Range(1, 4096));
  sub->add_option("--eps", o.eps, "target distortion slack")
      ->check(CLI::Range(0.0, 1e6) & CLI::Validator(
                                         [](std::string& s) -> std::string {
                                           return std::stod(s) > 0 ? "" : "must be positive";
                                         },
                                         "POSITIVE"));
  sub->add_option("--budget", o.budget, "candidate vectors per generator")
      ->check(CLI::Range(1, 100000000));
  sub->add_option("--family", o.family, "indicator, power, truncated_power or all")
      ->check(CLI::IsMember({"indicator", "power", "truncated_power", "all"}));
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symfun: norms, indices and lp certificates for r.i. spaces", "symfun"};
  app.require_subcommand(1, 1);
  Options o;

  auto* indices = app.add_subcommand("indices", "dilation index estimates and F(X)");
  add_common(indices, o, true);

  auto* fundamental = app.add_subcommand("fundamental", "fundamental function values");
  add_common(fundamental, o, true);
  fundamental->add_option("--t", o.t, "comma separated points");

  auto* lattice = app.add_subcommand("lattice", "dyadic lattice identities and shift bounds");
  add_common(lattice, o, true);
  lattice->add_option("--n", o.n, "shift amounts")->delimiter(',');
  lattice->add_option("--samples", o.samples, "random samples per identity");
  lattice->add_flag("--exponents", o.exponents, "also estimate the six shift exponents");

  auto* certify_cmd = app.add_subcommand("certify", "search lp witnesses");
  add_common(certify_cmd, o, true);
  certify_cmd->add_option("--p", o.p, "target exponent, may be inf");
  add_certify_knobs(certify_cmd, o);

  auto* scan = app.add_subcommand("scan", "certify along a p grid");
  add_common(scan, o, true);
  scan->add_option("--grid", o.grid, "comma separated p values")->required();
  add_certify_knobs(scan, o);

  auto* verify = app.add_subcommand("verify", "identity suites");
  add_common(verify, o, false);
  verify->add_option("--suite", o.suite, "lattice, minmax, x1 or all")
      ->check(CLI::IsMember({"lattice", "minmax", "x1", "all"}));
  verify->add_option("--samples", o.samples, "random samples per check");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::string command;
  try {
    Outcome r;
    if (indices->parsed()) {
      command = "indices";
      r = cmd_indices(o);
    } else if (fundamental->parsed()) {
      command = "fundamental";
      r = cmd_fundamental(o);
    } else if (lattice->parsed()) {
      command = "lattice";
      r = cmd_lattice(o);
    } else if (certify_cmd->parsed()) {
      command = "certify";
      r = cmd_certify(o);
    } else if (scan->parsed()) {
      command = "scan";
      r = cmd_scan(o);
    } else {
      command = "verify";
      r = cmd_verify(o);
    }
    emit(o, r, out);
    return r.passed ? kExitPass : kExitAssertion;
  } catch (const ParseError& e) {
    err << "error: field '" << e.field() << "' at position " << e.position() << ": " << e.what()
        << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: field '" << e.field() << "': " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    Json report = header(command);
    report["error"] = {{"type", dynamic_cast<const EstimateError*>(&e) ? "estimate" : "numeric"},
                       {"message", e.what()}};
    try {
      Outcome r;
      r.report = report;
      r.csv = "error," + std::string(e.what()) + "\n";
      emit(o, r, out);
    } catch (const std::exception& inner) {
      err << "error: " << inner.what() << "\n";
    }
    return kExitAssertion;
  }
}

}  // namespace symfun
