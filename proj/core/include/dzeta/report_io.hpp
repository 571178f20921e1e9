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
#include <variant>
#include <vector>

#include "dzeta/meanlab.hpp"
#include "dzeta/types.hpp"

namespace dzeta {

// Reals print with 17 significant digits and '.' as decimal separator,
// independent of the global locale.
std::string format_real(double x);

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

// Header line plus one line per row, '\n' terminated.
std::string to_csv(const Table& table);
// An array of row objects; a single-row table gives a bare object when
// `single_object` is set.
std::string to_json(const Table& table, bool single_object = false);

Table eval_table(const ApproxValue& v, std::string_view route, double elapsed_ms);
// Columns T, I, I_over_T, zeta_sq_ref, residual.
Table mean_square_table(const MeanSquareReport& report);

std::string report_to_json(const MeanSquareReport& report);
MeanSquareReport report_from_json(std::string_view text);

std::string regime_to_json(const RegimeClassification& r);
RegimeClassification regime_from_json(std::string_view text);
// Theorem id, exponent, log flag and every checked inequality with its margin.
std::string regime_to_text(const RegimeClassification& r);

}  // namespace dzeta
