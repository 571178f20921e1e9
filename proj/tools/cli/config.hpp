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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dzeta/quadrature.hpp"
#include "dzeta/series.hpp"
#include "dzeta/types.hpp"
#include "json.hpp"

namespace dzeta::cli {

// Parameters of one run: the --config document with command-line values
// layered on top. Every accessor throws PreconditionError naming the key
// when a value is missing or malformed.
class RunConfig {
 public:
  static RunConfig from_file(const std::string& path);

  // Command-line values arrive as text and replace config entries.
  void set(const std::string& key, const std::string& text);
  bool has(const std::string& key) const;

  double real(const std::string& key) const;
  double real_or(const std::string& key, double fallback) const;
  std::int64_t integer(const std::string& key) const;
  std::int64_t integer_or(const std::string& key, std::int64_t fallback) const;
  std::string text_or(const std::string& key, const std::string& fallback) const;
  // A number, "re,im" text, or a [re, im] array.
  Complex complex(const std::string& key) const;
  std::vector<double> real_list(const std::string& key) const;

  const nlohmann::json& raw(const std::string& key) const;
  QuadratureSpec quadrature() const;
  SeriesLimits limits(const SeriesLimits& defaults = {}) const;

 private:
  nlohmann::json doc_ = nlohmann::json::object();
};

double parse_real(const std::string& text, const std::string& what);
Complex parse_complex(const nlohmann::json& value, const std::string& what);

}  // namespace dzeta::cli
