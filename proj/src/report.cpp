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

#include "symfun/report.hpp"

#include <cmath>
#include <sstream>

#include "symfun/space_config.hpp"

namespace symfun {

namespace {

Json numbers(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json to_json(const IndexEstimate& e) {
  Json per_n = Json::array();
  for (const IndexSample& s : e.per_n) {
    per_n.push_back({{"n", s.n}, {"value", number(s.value)}, {"running_inf", number(s.running_inf)}});
  }
  return {{"value", number(e.value)},
          {"bound_direction", to_string(e.bound_direction)},
          {"n_max", e.n_max},
          {"grid_depth", e.grid_depth},
          {"per_n", per_n}};
}

Json to_json(const FInterval& f) {
  Json j = {{"text", to_string(f)}, {"is_union", f.is_union}, {"lo", number(f.lo)},
            {"hi", number(f.hi)}};
  if (f.is_union) {
    j["lo2"] = number(f.lo2);
    j["hi2"] = number(f.hi2);
  }
  return j;
}

Json to_json(const SpaceIndices& idx) {
  Json est = Json::object();
  for (const auto& [name, e] : idx.estimates) est[name] = to_json(e);
  return {{"alpha", number(idx.alpha)},
          {"beta", number(idx.beta)},
          {"alpha_zero", number(idx.alpha_zero)},
          {"beta_zero", number(idx.beta_zero)},
          {"alpha_infinity", number(idx.alpha_infinity)},
          {"beta_infinity", number(idx.beta_infinity)},
          {"estimates", est}};
}

Json to_json(const OrliczIndices& o) {
  return {{"alpha_literal", to_json(o.alpha_literal)},
          {"beta_literal", to_json(o.beta_literal)},
          {"alpha_phi", to_json(o.alpha_phi)},
          {"beta_phi", to_json(o.beta_phi)},
          {"disagreement", number(o.disagreement)},
          {"flagged", o.flagged}};
}

Json to_json(const LorentzIndices& l) {
  return {{"alpha", to_json(l.alpha)}, {"beta", to_json(l.beta)}};
}

Json to_json(const MinMaxReport& r) {
  return {{"mu", number(r.mu.value)},
          {"mu_zero", number(r.mu_zero.value)},
          {"mu_infinity", number(r.mu_infinity.value)},
          {"nu", number(r.nu.value)},
          {"nu_zero", number(r.nu_zero.value)},
          {"nu_infinity", number(r.nu_infinity.value)},
          {"mu_gap", number(r.mu_gap)},
          {"nu_gap", number(r.nu_gap)},
          {"mu_identity", r.mu_identity},
          {"nu_identity", r.nu_identity},
          {"eq6_samples", r.eq6_samples},
          {"eq6_max_error", number(r.eq6_max_error)},
          {"eq6_identity", r.eq6_identity},
          {"passed", r.passed()}};
}

Json to_json(const IdentityTally& t) {
  return {{"checked", t.checked}, {"passed", t.passed}, {"ok", t.ok()}};
}

Json to_json(const BoundPair& b) {
  return {{"sampled_lower", number(b.sampled_lower)},
          {"certified_upper", number(b.certified_upper)}};
}

Json to_json(const Prop4Report& r) {
  return {{"n", r.n},
          {"samples", r.samples},
          {"seed", r.seed},
          {"identities",
           {{"equa102", to_json(r.equa102)},
            {"equa102a", to_json(r.equa102a)},
            {"dilation1", to_json(r.dilation1)},
            {"q_fixes_s", to_json(r.q_fixes_s)},
            {"q_idempotent", to_json(r.q_idempotent)},
            {"q_dominates", to_json(r.q_dominates)},
            {"q_contractive", to_json(r.q_contractive)}}},
          {"q_worst_ratio", number(r.q_worst_ratio)},
          {"bounds",
           {{"tau", to_json(r.tau)},
            {"tau_zero", to_json(r.tau_zero)},
            {"tau_infinity", to_json(r.tau_infinity)},
            {"sigma", to_json(r.sigma)},
            {"sigma_zero", to_json(r.sigma_zero)},
            {"sigma_infinity", to_json(r.sigma_infinity)}}},
          {"violations", r.violations},
          {"passed", r.passed()}};
}

Json to_json(const TailReport& t) {
  return {{"l1", number(t.l1)},
          {"l1_bound", number(t.l1_bound)},
          {"l1_margin", number(t.l1_margin())},
          {"l1_ok", t.l1_ok},
          {"tail_start", number(t.tail_start)},
          {"tail_sup", number(t.tail_sup)},
          {"tail_bound", number(t.tail_bound)},
          {"tail_margin", number(t.tail_margin())},
          {"tail_ok", t.tail_ok},
          {"passed", t.passed()}};
}

Json to_json(const DistortionReport& r) {
  return {{"lo", number(r.lo)},
          {"hi", number(r.hi)},
          {"distortion", number(r.distortion())},
          {"argmin", numbers(r.argmin)},
          {"argmax", numbers(r.argmax)},
          {"candidates", r.candidate_count},
          {"seed", r.seed}};
}

Json to_json(const CertifyResult& r) {
  return {{"space", format_space(r.system.space)},
          {"p", number(r.p)},
          {"m", r.m},
          {"epsilon", number(r.epsilon)},
          {"generator", r.system.generator_name},
          {"anchor", number(r.system.anchor)},
          {"lo", number(r.report.lo)},
          {"hi", number(r.report.hi)},
          {"distortion", number(r.report.distortion())},
          {"verdict", to_string(r.verdict)},
          {"seed", r.report.seed},
          {"candidates", r.report.candidate_count},
          {"generators_tried", r.generators_tried},
          {"argmin", numbers(r.report.argmin)},
          {"argmax", numbers(r.report.argmax)}};
}

Json to_json(const ScanTable& t) {
  Json rows = Json::array();
  for (const ScanRow& r : t.rows) {
    Json row = to_json(r.result);
    row["in_interval"] = r.in_interval;
    rows.push_back(row);
  }
  return {{"f_interval", to_json(t.interval)}, {"rows", rows}, {"consistent", t.consistent()}};
}

std::string scan_csv(const ScanTable& t) {
  std::ostringstream os;
  os << "p,in_interval,verdict,lo,hi,distortion,generator\n";
  for (const ScanRow& r : t.rows) {
    os << format_number(r.p) << ',' << (r.in_interval ? "true" : "false") << ','
       << to_string(r.result.verdict) << ',' << format_number(r.result.report.lo) << ','
       << format_number(r.result.report.hi) << ',' << format_number(r.result.report.distortion())
       << ',' << csv_field(r.result.system.generator_name) << '\n';
  }
  return os.str();
}

std::string indices_csv(const SpaceIndices& idx) {
  std::ostringstream os;
  os << "estimate,n,value,running_inf\n";
  for (const auto& [name, e] : idx.estimates) {
    for (const IndexSample& s : e.per_n) {
      os << name << ',' << s.n << ',' << format_number(s.value) << ','
         << format_number(s.running_inf) << '\n';
    }
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace symfun
