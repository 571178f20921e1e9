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

#include "dzeta/constants.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "builtin_constants.hpp"
#include "dzeta/errors.hpp"
#include "json.hpp"

namespace dzeta {
namespace {

using nlohmann::json;

double positive_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw PreconditionError(fmt::format("constants.{} present", key), "missing or not a number");
  }
  const double v = j.at(key).get<double>();
  if (!(v > 0.0)) {
    throw PreconditionError(fmt::format("constants.{} > 0", key), fmt::format("value {}", v));
  }
  return v;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw NumericalError("SHA-256 computation failed");
  }
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

Constants Constants::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw PreconditionError("constants file is valid JSON", e.what());
  }
  Constants c;
  if (!doc.contains("version") || !doc.at("version").is_string()) {
    throw PreconditionError("constants.version present", "missing or not a string");
  }
  c.version = doc.at("version").get<std::string>();
  if (!doc.contains("heuristic") || !doc.at("heuristic").is_object()) {
    throw PreconditionError("constants.heuristic present", "missing or not an object");
  }
  const json& h = doc.at("heuristic");
  c.first_approx = positive_field(h, "first_approx");
  c.second_approx = positive_field(h, "second_approx");
  c.mt_approx = positive_field(h, "mt_approx");
  c.mv_kappa = positive_field(doc, "mv_kappa");
  c.standoff = positive_field(doc, "standoff");
  c.safety_factor = positive_field(doc, "safety_factor");
  c.canonical_json = doc.dump();
  c.sha256 = sha256_hex(c.canonical_json);
  return c;
}

Constants Constants::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PreconditionError("constants file readable", "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Constants& builtin_constants() {
  static const Constants c = Constants::parse(detail::kBuiltinConstantsJson);
  return c;
}

std::string_view library_version() { return DZETA_VERSION; }

}  // namespace dzeta
