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

#include "dzeta/report_io.hpp"

#include <fmt/format.h>

#include "dzeta/errors.hpp"
#include "json.hpp"

namespace dzeta {
namespace {

using nlohmann::ordered_json;

ordered_json regime_json(const RegimeClassification& r) {
  ordered_json j;
  j["theorem"] = std::string(to_string(r.theorem));
  j["target"] = std::string(to_string(r.target));
  j["error_exponent"] = r.error_exponent;
  j["log_power"] = r.log_power;
  j["log_inside_root"] = r.log_inside_root;
  ordered_json alternates = ordered_json::array();
  for (Theorem t : r.alternates) alternates.push_back(std::string(to_string(t)));
  j["alternates"] = alternates;
  ordered_json checks = ordered_json::array();
  for (const InequalityCheck& c : r.checks) {
    checks.push_back({{"theorem", c.theorem},
                      {"inequality", c.inequality},
                      {"margin", c.margin},
                      {"holds", c.holds}});
  }
  j["checks"] = checks;
  return j;
}

RegimeClassification regime_from(const ordered_json& j) {
  RegimeClassification r;
  r.theorem = theorem_from_string(j.at("theorem").get<std::string>());
  r.target = target_from_string(j.at("target").get<std::string>());
  r.error_exponent = j.at("error_exponent").get<double>();
  r.log_power = j.at("log_power").get<int>();
  r.log_inside_root = j.at("log_inside_root").get<bool>();
  for (const auto& t : j.at("alternates")) r.alternates.push_back(theorem_from_string(t.get<std::string>()));
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("theorem").get<std::string>(), c.at("inequality").get<std::string>(),
                        c.at("margin").get<double>(), c.at("holds").get<bool>()});
  }
  return r;
}

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw PreconditionError("well-formed JSON", e.what());
  }
}

ordered_json cell_json(const Cell& c) {
  if (const double* x = std::get_if<double>(&c)) return *x;
  return std::get<std::string>(c);
}

std::string csv_field(const Cell& c) {
  if (const double* x = std::get_if<double>(&c)) return format_real(*x);
  const std::string& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_field(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table, bool single_object) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
      obj[table.header[i]] = cell_json(row[i]);
    }
    rows.push_back(obj);
  }
  if (single_object && rows.size() == 1) return rows[0].dump(2) + '\n';
  return rows.dump(2) + '\n';
}

Table eval_table(const ApproxValue& v, std::string_view route, double elapsed_ms) {
  Table t;
  t.header = {"value_re", "value_im", "error_bound", "rigor", "route", "elapsed_ms"};
  t.rows.push_back({v.value.real(), v.value.imag(), v.error_bound,
                    std::string(to_string(v.rigor)), std::string(route), elapsed_ms});
  return t;
}

Table mean_square_table(const MeanSquareReport& report) {
  Table t;
  t.header = {"T", "I", "I_over_T", "zeta_sq_ref", "residual"};
  for (std::size_t i = 0; i < report.I_values.size(); ++i) {
    const auto [T, I] = report.I_values[i];
    t.rows.push_back({T, I, report.coefficient_estimates[i], report.zeta_sq_ref,
                      report.residuals[i]});
  }
  return t;
}

std::string report_to_json(const MeanSquareReport& report) {
  ordered_json j;
  ordered_json values = ordered_json::array();
  for (const auto& [T, I] : report.I_values) values.push_back({T, I});
  j["I_values"] = values;
  j["zeta_sq_ref"] = report.zeta_sq_ref;
  j["zeta_sq_error"] = report.zeta_sq_error;
  j["coefficient_estimates"] = report.coefficient_estimates;
  j["residuals"] = report.residuals;
  j["fitted_exponent"] =
      report.fitted_exponent ? ordered_json(*report.fitted_exponent) : ordered_json(nullptr);
  j["fitted_exponent_stderr"] = report.fitted_exponent_stderr
                                    ? ordered_json(*report.fitted_exponent_stderr)
                                    : ordered_json(nullptr);
  j["fit_dropped"] = report.fit_dropped;
  j["regime"] = regime_json(report.regime);
  ordered_json manifest;
  manifest["library_version"] = report.run_manifest.library_version;
  manifest["constants_version"] = report.run_manifest.constants_version;
  manifest["constants_sha256"] = report.run_manifest.constants_sha256;
  ordered_json inputs = ordered_json::array();
  for (const auto& [k, v] : report.run_manifest.inputs) inputs.push_back({k, v});
  manifest["inputs"] = inputs;
  j["run_manifest"] = manifest;
  return j.dump(2) + '\n';
}

MeanSquareReport report_from_json(std::string_view text) {
  const ordered_json j = parse(text);
  MeanSquareReport r;
  try {
    for (const auto& p : j.at("I_values")) r.I_values.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    r.zeta_sq_ref = j.at("zeta_sq_ref").get<double>();
    r.zeta_sq_error = j.at("zeta_sq_error").get<double>();
    r.coefficient_estimates = j.at("coefficient_estimates").get<std::vector<double>>();
    r.residuals = j.at("residuals").get<std::vector<double>>();
    if (!j.at("fitted_exponent").is_null()) r.fitted_exponent = j["fitted_exponent"].get<double>();
    if (!j.at("fitted_exponent_stderr").is_null()) {
      r.fitted_exponent_stderr = j["fitted_exponent_stderr"].get<double>();
    }
    r.fit_dropped = j.at("fit_dropped").get<int>();
    r.regime = regime_from(j.at("regime"));
    const ordered_json& m = j.at("run_manifest");
    r.run_manifest.library_version = m.at("library_version").get<std::string>();
    r.run_manifest.constants_version = m.at("constants_version").get<std::string>();
    r.run_manifest.constants_sha256 = m.at("constants_sha256").get<std::string>();
    for (const auto& p : m.at("inputs")) {
      r.run_manifest.inputs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    }
  } catch (const ordered_json::exception& e) {
    throw PreconditionError("mean-square report schema", e.what());
  }
  return r;
}

std::string regime_to_json(const RegimeClassification& r) { return regime_json(r).dump(2) + '\n'; }

RegimeClassification regime_from_json(std::string_view text) {
  try {
    return regime_from(parse(text));
  } catch (const ordered_json::exception& e) {
    throw PreconditionError("regime schema", e.what());
  }
}

std::string regime_to_text(const RegimeClassification& r) {
  std::string out = fmt::format("target: {}\ntheorem: {}\n", to_string(r.target), to_string(r.theorem));
  if (r.theorem != Theorem::none) {
    if (r.log_inside_root) {
      out += fmt::format("error: (T log T)^{}\n", format_real(r.error_exponent));
    } else {
      out += fmt::format("error: T^{}{}\n", format_real(r.error_exponent),
                         r.log_power > 0 ? fmt::format(" (log T)^{}", r.log_power) : "");
    }
    out += fmt::format("error_exponent: {}\nlog_power: {}\n", format_real(r.error_exponent),
                       r.log_power);
  }
  for (Theorem t : r.alternates) out += fmt::format("alternate: {}\n", to_string(t));
  for (const InequalityCheck& c : r.checks) {
    out += fmt::format("  [{}] {:<36} margin {:>+.6g}  {}\n", c.theorem, c.inequality, c.margin,
                       c.holds ? "holds" : "fails");
  }
  return out;
}

}  // namespace dzeta
