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

#include <string>
#include <string_view>

namespace dzeta {

// Calibrated constants of the heuristic error models, versioned and hashed
// so every report can name the exact set it used.
struct Constants {
  std::string version;
  // Multipliers of the O-term shapes of the three approximation formulas.
  double first_approx = 1.0;
  double second_approx = 1.0;
  double mt_approx = 1.0;
  // |lhs - main| <= mv_kappa * sum n |a_n|^2 in mv_check.
  double mv_kappa = 2.0;
  // Minimum distance kept from singular hyperplanes along mean-square paths.
  double standoff = 1e-3;
  // Factor applied to the largest calibration ratio when freezing constants.
  double safety_factor = 2.0;
  // Canonical JSON text and its SHA-256 (lower-case hex).
  std::string canonical_json;
  std::string sha256;

  // Parses and validates a constants document; throws PreconditionError on a
  // missing or non-positive field.
  static Constants parse(std::string_view json_text);
  static Constants load(const std::string& path);
};

// The constants compiled in from data/constants.json.
const Constants& builtin_constants();

std::string sha256_hex(std::string_view bytes);

// Version of the library, e.g. "0.1.0".
std::string_view library_version();

}  // namespace dzeta
