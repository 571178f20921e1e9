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

// Runs the calibration sweeps and writes a constants file.
//   dzeta_calibrate --out data/constants.json

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "calibration/calibration.hpp"
#include "dzeta/report_io.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
namespace cal = dzeta::calibration;

struct Sweep {
  double max_ratio = 0.0;
  double max_reference_error_ratio = 0.0;
  int points = 0;
};

template <class Points, class F>
Sweep run(const char* name, const Points& points, F&& ratio_of) {
  Sweep s;
  for (const auto& p : points) {
    const cal::Ratio r = ratio_of(p);
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    s.max_reference_error_ratio =
        std::max(s.max_reference_error_ratio, r.reference_error / std::max(r.difference, 1e-300));
    ++s.points;
  }
  std::cerr << fmt::format("{:<14} points {:>3}  max ratio {:.6g}\n", name, s.points, s.max_ratio);
  return s;
}

ordered_json sweep_json(const Sweep& s) {
  return {{"points", s.points},
          {"max_ratio", s.max_ratio},
          {"max_reference_error_over_difference", s.max_reference_error_ratio}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dzeta_calibrate: freeze the heuristic error constants"};
  std::string out_path;
  std::string version = "1";
  double safety = 2.0;
  int overlap_points = 30, mt_points = 20, first_points = 30, mv_points = 50;
  app.add_option("--out", out_path, "constants file to write")->required();
  app.add_option("--version", version, "version label of the constants set");
  app.add_option("--safety", safety, "factor applied to the largest ratio")->check(CLI::Range(1.0, 100.0));
  app.add_option("--overlap-points", overlap_points);
  app.add_option("--mt-points", mt_points);
  app.add_option("--first-points", first_points);
  app.add_option("--mv-points", mv_points);
  CLI11_PARSE(app, argc, argv);

  const Sweep second = run("second_approx", cal::overlap_grid(cal::kTrainSeed, overlap_points, false),
                           [](const dzeta::ZetaArgs& a) { return cal::second_approx_ratio(a); });
  const Sweep mt = run("mt_approx", cal::overlap_grid(cal::kTrainSeed, mt_points, true),
                       [](const dzeta::ZetaArgs& a) { return cal::mt_approx_ratio(a); });
  const Sweep first = run("first_approx", cal::first_approx_grid(cal::kTrainSeed, first_points),
                          [](const cal::FirstApproxPoint& p) { return cal::first_approx_ratio(p); });

  Sweep mv;
  for (const auto& m : cal::mv_instances(cal::kTrainSeed, mv_points)) {
    mv.max_ratio = std::max(mv.max_ratio, cal::mv_ratio(m));
    ++mv.points;
  }
  // The single-term polynomial {(1, 1)} has |lhs - main| = 2 exactly.
  mv.max_ratio = std::max(mv.max_ratio, 2.0);
  std::cerr << fmt::format("{:<14} points {:>3}  max ratio {:.6g}\n", "mv_kappa", mv.points,
                           mv.max_ratio);

  ordered_json doc;
  doc["version"] = version;
  doc["heuristic"] = {{"first_approx", safety * first.max_ratio},
                      {"second_approx", safety * second.max_ratio},
                      {"mt_approx", safety * mt.max_ratio}};
  doc["mv_kappa"] = safety * mv.max_ratio;
  doc["standoff"] = 1e-3;
  doc["safety_factor"] = safety;
  doc["calibration"] = {{"seed", cal::kTrainSeed},
                        {"first_approx", sweep_json(first)},
                        {"second_approx", sweep_json(second)},
                        {"mt_approx", sweep_json(mt)},
                        {"mv_kappa", {{"instances", mv.points}, {"max_ratio", mv.max_ratio}}}};
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::cerr << "cannot write " << out_path << '\n';
    return 2;
  }
  f << doc.dump(2) << '\n';
  return f ? 0 : 1;
}
