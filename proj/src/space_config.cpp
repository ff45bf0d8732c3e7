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

#include "symfun/space_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>

namespace symfun {

ParseError::ParseError(std::string field, std::size_t position, const std::string& message)
    : std::invalid_argument("field '" + field + "' at offset " + std::to_string(position) +
                            ": " + message),
      field_(std::move(field)),
      position_(position) {}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, const std::string& field) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ParseError(field, 0, "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

namespace {

// One parsed key=value; nested values keep their own parameter lists.
struct Node;
using Params = std::map<std::string, Node>;

struct Node {
  std::string scalar;  // raw text for plain values
  std::string family;  // name for nested family values
  std::shared_ptr<Params> params;
  std::size_t position = 0;
};

const std::map<std::string, std::set<std::string>>& space_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"lp", {"p", "domain"}},
      {"orlicz", {"n", "domain"}},
      {"lorentz", {"q", "psi", "domain"}},
      {"x1", {"inner"}},
  };
  return keys;
}

const std::map<std::string, std::set<std::string>>& family_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"power", {"p", "r"}},
      {"powerlog", {"p", "a"}},
      {"piecewise", {"p_low", "p_high", "knot"}},
      {"powersum", {"r1", "r2"}},
      {"plog", {"start", "blocks"}},
  };
  return keys;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node space(const std::string& field) {
    Node node;
    node.position = pos_;
    node.family = identifier(field);
    const auto it = space_keys().find(node.family);
    if (it == space_keys().end()) {
      throw ParseError(field, node.position, "unknown space kind '" + node.family + "'");
    }
    expect(':', field);
    node.params = std::make_shared<Params>(params(it->second, false, field));
    return node;
  }

  void finish() {
    if (pos_ != text_.size()) {
      throw ParseError("space", pos_, "unexpected trailing text '" +
                                          std::string(text_.substr(pos_)) + "'");
    }
  }

 private:
  Params params(const std::set<std::string>& allowed, bool absorbing, const std::string& owner) {
    Params out;
    while (true) {
      const std::size_t start = pos_;
      const std::string key = identifier(owner);
      if (!allowed.count(key)) {
        if (absorbing && !out.empty()) {
          pos_ = start - 1;  // hand the comma back to the enclosing list
          return out;
        }
        throw ParseError(key, start, "unknown key for '" + owner + "'");
      }
      if (out.count(key)) throw ParseError(key, start, "duplicate key");
      expect('=', key);
      out[key] = value(key);
      if (peek() != ',') return out;
      ++pos_;
    }
  }

  Node value(const std::string& key) {
    Node node;
    node.position = pos_;
    if (key == "inner") {
      if (peek() == '(') {
        ++pos_;
        node = space(key);
        expect(')', key);
      } else {
        node = space(key);
      }
      return node;
    }
    if (key == "n" || key == "psi") {
      node.family = identifier(key);
      const auto it = family_keys().find(node.family);
      if (it == family_keys().end()) {
        throw ParseError(key, node.position, "unknown family '" + node.family + "'");
      }
      if (peek() == '(') {
        ++pos_;
        node.params = std::make_shared<Params>(params(it->second, false, node.family));
        expect(')', key);
      } else {
        expect(':', key);
        node.params = std::make_shared<Params>(params(it->second, true, node.family));
      }
      return node;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
    node.scalar = std::string(text_.substr(start, pos_ - start));
    if (node.scalar.empty()) throw ParseError(key, start, "missing value");
    return node;
  }

  std::string identifier(const std::string& field) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError(field, start, "expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c, const std::string& field) {
    if (peek() != c) {
      throw ParseError(field, pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const Node& required(const Params& p, const std::string& key, const std::string& owner) {
  const auto it = p.find(key);
  if (it == p.end()) throw ParseError(key, 0, "missing required key for '" + owner + "'");
  return it->second;
}

double number(const Params& p, const std::string& key, const std::string& owner) {
  const Node& n = required(p, key, owner);
  if (n.scalar.empty()) throw ParseError(key, n.position, "expected a number");
  try {
    return parse_number(n.scalar, key);
  } catch (const ParseError& e) {
    throw ParseError(key, n.position, "expected a number, got '" + n.scalar + "'");
  }
}

Domain domain_of(const Params& p) {
  const auto it = p.find("domain");
  if (it == p.end()) return Domain::Unit;
  if (it->second.scalar == "unit") return Domain::Unit;
  if (it->second.scalar == "halfline") return Domain::HalfLine;
  throw ParseError("domain", it->second.position, "expected unit or halfline");
}

template <typename F>
auto guarded(const std::string& field, std::size_t position, F make) {
  try {
    return make();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(field, position, e.what());
  }
}

std::vector<SlopeBlock> parse_blocks(const Node& n) {
  std::vector<SlopeBlock> out;
  std::string_view rest = n.scalar;
  while (!rest.empty()) {
    const std::size_t slash = rest.find('/');
    const std::string_view item = rest.substr(0, slash);
    const std::size_t x = item.find('x');
    if (x == std::string_view::npos) {
      throw ParseError("blocks", n.position, "expected exponent x octaves, got '" +
                                                 std::string(item) + "'");
    }
    SlopeBlock b;
    b.exponent = parse_number(item.substr(0, x), "blocks");
    const std::string_view count = item.substr(x + 1);
    const auto res = std::from_chars(count.data(), count.data() + count.size(), b.octaves);
    if (res.ec != std::errc() || res.ptr != count.data() + count.size()) {
      throw ParseError("blocks", n.position, "bad octave count '" + std::string(count) + "'");
    }
    out.push_back(b);
    rest = slash == std::string_view::npos ? std::string_view() : rest.substr(slash + 1);
  }
  return out;
}

int parse_int(const Node& n, const std::string& key) {
  int v = 0;
  const auto res = std::from_chars(n.scalar.data(), n.scalar.data() + n.scalar.size(), v);
  if (res.ec != std::errc() || res.ptr != n.scalar.data() + n.scalar.size()) {
    throw ParseError(key, n.position, "expected an integer, got '" + n.scalar + "'");
  }
  return v;
}

OrliczFunction build_orlicz(const Node& n) {
  const Params& p = *n.params;
  return guarded("n", n.position, [&] {
    if (n.family == "power") return OrliczFunction::power(number(p, "p", n.family));
    if (n.family == "powerlog") {
      return OrliczFunction::power_log(number(p, "p", n.family), number(p, "a", n.family));
    }
    if (n.family == "piecewise") {
      return OrliczFunction::piecewise_power(number(p, "p_low", n.family),
                                             number(p, "p_high", n.family),
                                             number(p, "knot", n.family));
    }
    throw ParseError("n", n.position, "family '" + n.family + "' is not an Orlicz family");
  });
}

ConcaveWeight build_weight(const Node& n) {
  const Params& p = *n.params;
  return guarded("psi", n.position, [&] {
    if (n.family == "power") return ConcaveWeight::power(number(p, "r", n.family));
    if (n.family == "powersum") {
      return ConcaveWeight::power_sum(number(p, "r1", n.family), number(p, "r2", n.family));
    }
    if (n.family == "plog") {
      return ConcaveWeight::piecewise_linear_log(parse_int(required(p, "start", "plog"), "start"),
                                                 parse_blocks(required(p, "blocks", "plog")));
    }
    throw ParseError("psi", n.position, "family '" + n.family + "' is not a weight family");
  });
}

SpaceDescriptor build_space(const Node& n) {
  const Params& p = *n.params;
  if (n.family == "lp") {
    const double exponent = number(p, "p", "lp");
    return guarded("p", required(p, "p", "lp").position,
                   [&] { return SpaceDescriptor::lp(exponent, domain_of(p)); });
  }
  if (n.family == "orlicz") {
    OrliczFunction f = build_orlicz(required(p, "n", "orlicz"));
    return SpaceDescriptor::orlicz(std::move(f), domain_of(p));
  }
  if (n.family == "lorentz") {
    const double q = number(p, "q", "lorentz");
    ConcaveWeight w = build_weight(required(p, "psi", "lorentz"));
    return guarded("q", required(p, "q", "lorentz").position,
                   [&] { return SpaceDescriptor::lorentz(q, std::move(w), domain_of(p)); });
  }
  const Node& inner = required(p, "inner", "x1");
  SpaceDescriptor in = build_space(inner);
  return guarded("inner", inner.position, [&] { return SpaceDescriptor::x1(std::move(in)); });
}

std::string format_orlicz(const OrliczFunction& n) {
  switch (n.family()) {
    case OrliczFunction::Family::Power:
      return "power(p=" + format_number(n.p()) + ")";
    case OrliczFunction::Family::PowerLog:
      return "powerlog(p=" + format_number(n.p()) + ",a=" + format_number(n.a()) + ")";
    case OrliczFunction::Family::PiecewisePower:
      return "piecewise(p_low=" + format_number(n.p()) + ",p_high=" + format_number(n.p_high()) +
             ",knot=" + format_number(n.knot()) + ")";
  }
  return {};
}

std::string format_weight(const ConcaveWeight& w) {
  switch (w.family()) {
    case ConcaveWeight::Family::Power:
      return "power(r=" + format_number(w.r1()) + ")";
    case ConcaveWeight::Family::PowerSum:
      return "powersum(r1=" + format_number(w.r1()) + ",r2=" + format_number(w.r2()) + ")";
    case ConcaveWeight::Family::PiecewiseLinearLog: {
      std::string blocks;
      for (const SlopeBlock& b : w.blocks()) {
        if (!blocks.empty()) blocks += '/';
        blocks += format_number(b.exponent) + "x" + std::to_string(b.octaves);
      }
      return "plog(start=" + std::to_string(w.start()) + ",blocks=" + blocks + ")";
    }
  }
  return {};
}

}  // namespace

SpaceDescriptor parse_space(std::string_view text) {
  Parser parser(text);
  const Node root = parser.space("space");
  parser.finish();
  return build_space(root);
}

std::string format_space(const SpaceDescriptor& s) {
  const std::string domain = ",domain=" + to_string(s.domain());
  switch (s.kind()) {
    case SpaceDescriptor::Kind::Lp:
      return "lp:p=" + format_number(s.p()) + domain;
    case SpaceDescriptor::Kind::Orlicz:
      return "orlicz:n=" + format_orlicz(s.orlicz_function()) + domain;
    case SpaceDescriptor::Kind::Lorentz:
      return "lorentz:q=" + format_number(s.q()) + ",psi=" + format_weight(s.weight()) + domain;
    case SpaceDescriptor::Kind::X1:
      return "x1:inner=(" + format_space(s.inner()) + ")";
  }
  return {};
}

}  // namespace symfun
