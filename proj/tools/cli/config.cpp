// Copyright 2026 The dzeta Authors
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

#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "dzeta/errors.hpp"

namespace dzeta::cli {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

double number(const json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_real(v.get<std::string>(), what);
  throw PreconditionError(what + " is a number", fmt::format("got {}", v.dump()));
}

}  // namespace

double parse_real(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw PreconditionError(what + " is a number", fmt::format("cannot parse '{}'", text));
  }
  return x;
}

Complex parse_complex(const json& value, const std::string& what) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array()) {
    if (value.size() != 2) {
      throw PreconditionError(what + " is [re, im]", fmt::format("got {}", value.dump()));
    }
    return {number(value[0], what), number(value[1], what)};
  }
  if (value.is_string()) {
    const auto parts = split(value.get<std::string>(), ',');
    if (parts.size() == 1) return {parse_real(parts[0], what), 0.0};
    if (parts.size() == 2) return {parse_real(parts[0], what), parse_real(parts[1], what)};
  }
  throw PreconditionError(what + " is re or re,im", fmt::format("got {}", value.dump()));
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("config file readable", path);
  std::stringstream buf;
  buf << in.rdbuf();
  RunConfig c;
  try {
    c.doc_ = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw PreconditionError("config file is JSON", fmt::format("{}: {}", path, e.what()));
  }
  if (!c.doc_.is_object()) throw PreconditionError("config file is a JSON object", path);
  for (const char* group : {"quad", "limits"}) {
    if (c.doc_.contains(group) && c.doc_[group].is_object()) {
      for (const auto& [k, v] : c.doc_[group].items()) {
        if (!c.doc_.contains(k)) c.doc_[k] = v;
      }
    }
  }
  return c;
}

void RunConfig::set(const std::string& key, const std::string& text) { doc_[key] = text; }

bool RunConfig::has(const std::string& key) const { return doc_.contains(key); }

const json& RunConfig::raw(const std::string& key) const {
  if (!doc_.contains(key)) throw PreconditionError(key + " given", "missing parameter");
  return doc_.at(key);
}

double RunConfig::real(const std::string& key) const {
  const double x = number(raw(key), key);
  if (!std::isfinite(x)) throw PreconditionError(key + " finite", fmt::format("{}", x));
  return x;
}

double RunConfig::real_or(const std::string& key, double fallback) const {
  return has(key) ? real(key) : fallback;
}

std::int64_t RunConfig::integer(const std::string& key) const {
  const double x = real(key);
  if (x != std::floor(x) || std::abs(x) > 9.0e15) {
    throw PreconditionError(key + " is an integer", fmt::format("{}", x));
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t RunConfig::integer_or(const std::string& key, std::int64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::string RunConfig::text_or(const std::string& key, const std::string& fallback) const {
  if (!has(key)) return fallback;
  const json& v = raw(key);
  if (!v.is_string()) throw PreconditionError(key + " is text", v.dump());
  return v.get<std::string>();
}

Complex RunConfig::complex(const std::string& key) const {
  const Complex z = parse_complex(raw(key), key);
  require_finite(z, key);
  return z;
}

std::vector<double> RunConfig::real_list(const std::string& key) const {
  const json& v = raw(key);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(number(x, key));
  } else if (v.is_string()) {
    for (const auto& part : split(v.get<std::string>(), ',')) out.push_back(parse_real(part, key));
  } else {
    out.push_back(number(v, key));
  }
  return out;
}

QuadratureSpec RunConfig::quadrature() const {
  QuadratureSpec q;
  if (has("rule")) q.rule = quadrature_rule_from_string(text_or("rule", ""));
  q.panels = static_cast<int>(integer_or("panels", q.panels));
  q.nodes_per_panel = static_cast<int>(integer_or("nodes_per_panel", q.nodes_per_panel));
  q.abs_tol = real_or("abs_tol", q.abs_tol);
  q.max_evaluations = integer_or("max_evaluations", q.max_evaluations);
  q.validate();
  return q;
}

SeriesLimits RunConfig::limits(const SeriesLimits& defaults) const {
  SeriesLimits l = defaults;
  l.max_outer = integer_or("max_outer", l.max_outer);
  l.max_terms = integer_or("max_terms", l.max_terms);
  l.extrapolation_levels = static_cast<int>(integer_or("extrapolation_levels", l.extrapolation_levels));
  if (l.max_outer < 2 || l.max_terms < 1 || l.extrapolation_levels < 1) {
    throw PreconditionError("max_outer >= 2, max_terms >= 1, extrapolation_levels >= 1",
                            fmt::format("{}, {}, {}", l.max_outer, l.max_terms,
                                        l.extrapolation_levels));
  }
  return l;
}

}  // namespace dzeta::cli
