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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <utility>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "config.hpp"
#include "dzeta/constants.hpp"
#include "dzeta/continuation.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/kernel.hpp"
#include "dzeta/meanlab.hpp"
#include "dzeta/parallel.hpp"
#include "dzeta/report_io.hpp"
#include "dzeta/series.hpp"

namespace dzeta::cli {
namespace {

struct Globals {
  std::string config;
  std::string out;
  std::string format;
  std::string constants;
  unsigned threads = 0;
};

// Relation checks sum three double series per point; this cap keeps a
// point under a second while leaving cutoffs far beyond the diagonal tail
// that decides the residual.
constexpr std::int64_t kRelationMaxTerms = 200'000'000;

class Output {
 public:
  Output(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  std::string format(const std::string& fallback) const {
    const std::string f = g_.format.empty() ? fallback : g_.format;
    if (f != "csv" && f != "json" && f != "text") {
      throw PreconditionError("format in {csv, json}", f);
    }
    return f;
  }

  void write(const std::string& text) const { write_to(g_.out, text); }

  void write_to(const std::string& path, const std::string& text) const {
    if (path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw PreconditionError("output path writable", path);
    f << text;
    if (!f) throw NumericalError("failed writing " + path);
  }

  const std::string& path() const { return g_.out; }

 private:
  const Globals& g_;
  std::ostream& out_;
};

ZetaArgs args3(const RunConfig& c) { return {c.complex("s1"), c.complex("s2"), c.complex("s3")}; }

std::optional<Truncation> truncation(const RunConfig& c, double eps) {
  if (!c.has("cutoff")) return std::nullopt;
  Truncation t{c.integer("cutoff"), eps};
  t.validate();
  return t;
}

void cmd_eval(const std::string& target, const RunConfig& c, const Constants& k,
              const Output& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const double eps = c.real_or("eps", 1e-10);
  const SeriesLimits limits = c.limits();
  ApproxValue v;
  std::string route = "direct";
  if (target == "av2-direct" || target == "mt2-direct") {
    const ZetaArgs a = args3(c);
    const bool av = target == "av2-direct";
    if (const auto t = truncation(c, eps)) {
      v = av ? av2_direct(a, *t) : mt2_direct(a, *t);
    } else {
      v = av ? av2_direct(a, eps, limits) : mt2_direct(a, eps, limits);
    }
  } else if (target == "av2-first") {
    FirstApproxParams p;
    p.x = c.real("x");
    p.y = c.real_or("y", p.x);
    p.C = c.real_or("C", p.C);
    v = av2_approx_first(args3(c), p, c.quadrature(), k);
    route = "first_approx";
  } else if (target == "av2-second") {
    v = av2_approx_second(args3(c), k);
    route = "second_approx";
  } else if (target == "mt2-approx") {
    v = mt2_approx(args3(c), k);
    route = "mt_approx";
  } else if (target == "av2-sq" || target == "mt2-sq") {
    const Complex s1 = c.complex("s1"), s2 = c.complex("s2");
    const double sigma = c.real("sigma");
    const bool av = target == "av2-sq";
    if (const auto t = truncation(c, eps)) {
      v = av ? av2_sq(s1, s2, sigma, *t) : mt2_sq(s1, s2, sigma, *t);
    } else {
      v = av ? av2_sq(s1, s2, sigma, eps, limits) : mt2_sq(s1, s2, sigma, eps, limits);
    }
  } else if (target == "zeta") {
    v = riemann_zeta(c.complex("s"));
    route = "euler_maclaurin";
  } else {
    throw PreconditionError(
        "target in {av2-direct, mt2-direct, av2-first, av2-second, mt2-approx, av2-sq, "
        "mt2-sq, zeta}",
        target);
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const Table t = eval_table(v, route, ms);
  o.write(o.format("csv") == "json" ? to_json(t, true) : to_csv(t));
}

MeanSquarePlan plan_from(const RunConfig& c) {
  MeanSquarePlan p;
  p.target = target_from_string(c.text_or("target", "AV"));
  p.s1 = c.complex("s1");
  p.s2 = c.complex("s2");
  p.sigma3 = c.real("sigma3");
  p.T_samples = c.real_list("T");
  p.evaluator = evaluator_from_string(c.text_or("evaluator", "direct"));
  p.quad = c.quadrature();
  p.eps = c.real_or("eps", p.eps);
  p.refinement = c.real_or("refinement", p.refinement);
  p.limits = c.limits();
  return p;
}

void cmd_mean_square(const RunConfig& c, const Constants& k, const Output& o) {
  const MeanSquarePlan plan = plan_from(c);
  const MeanSquareReport r = mean_square(plan, k);
  if (o.format("csv") == "json") {
    o.write(report_to_json(r));
    return;
  }
  o.write(to_csv(mean_square_table(r)));
  if (!o.path().empty()) o.write_to(o.path() + ".json", report_to_json(r));
}

void cmd_regime(const RunConfig& c, const Output& o) {
  const RegimeClassification r =
      classify_regime(target_from_string(c.text_or("target", "AV")), c.complex("s1"),
                      c.complex("s2"), c.real("sigma3"));
  const std::string f = o.format("text");
  if (f == "json") {
    o.write(regime_to_json(r));
  } else if (f == "csv") {
    Table t;
    t.header = {"theorem", "target", "error_exponent", "log_power", "log_inside_root"};
    t.rows.push_back({std::string(to_string(r.theorem)), std::string(to_string(r.target)),
                      r.error_exponent, static_cast<double>(r.log_power),
                      std::string(r.log_inside_root ? "true" : "false")});
    o.write(to_csv(t));
  } else {
    o.write(regime_to_text(r));
  }
}

std::vector<ZetaArgs> relation_points(const RunConfig& c) {
  if (!c.has("points")) return {args3(c)};
  const auto& pts = c.raw("points");
  if (!pts.is_array()) throw PreconditionError("points is an array", pts.dump());
  std::vector<ZetaArgs> out;
  for (const auto& p : pts) {
    if (!p.is_array() || p.size() != 3) {
      throw PreconditionError("each point is [s1, s2, s3]", p.dump());
    }
    out.push_back({parse_complex(p[0], "s1"), parse_complex(p[1], "s2"),
                   parse_complex(p[2], "s3")});
  }
  return out;
}

void cmd_relation_check(const RunConfig& c, const Constants& k, const Output& o) {
  const double eps = c.real_or("eps", 1e-10);
  const Route route = route_from_string(c.text_or("route", "direct"));
  SeriesLimits defaults;
  defaults.max_terms = kRelationMaxTerms;
  const SeriesLimits limits = c.limits(defaults);
  Table t;
  t.header = {"s1_re", "s1_im", "s2_re", "s2_im", "s3_re", "s3_im",
              "residual_abs", "budget", "rigor", "cutoff", "pass"};
  for (const ZetaArgs& a : relation_points(c)) {
    const RelationResidual r = functional_relation_residual(a, eps, route, limits, k);
    const double res = std::abs(r.residual);
    t.rows.push_back({a.sigma1(), a.t1(), a.sigma2(), a.t2(), a.sigma3(), a.t3(), res, r.budget,
                      std::string(to_string(r.rigor)), static_cast<double>(r.cutoff),
                      std::string(res <= r.budget ? "true" : "false")});
  }
  o.write(o.format("csv") == "json" ? to_json(t) : to_csv(t));
}

DirichletPoly poly_from(const RunConfig& c) {
  DirichletPoly p;
  if (!c.has("poly")) return p;
  const auto& terms = c.raw("poly");
  if (!terms.is_array()) throw PreconditionError("poly is an array", terms.dump());
  for (const auto& term : terms) {
    if (!term.is_array() || term.size() < 2 || term.size() > 3 || !term[0].is_number_integer()) {
      throw PreconditionError("each poly term is [n, re] or [n, re, im]", term.dump());
    }
    const double re = term[1].get<double>();
    const double im = term.size() == 3 ? term[2].get<double>() : 0.0;
    p.coefficients.emplace_back(term[0].get<std::int64_t>(), Complex(re, im));
  }
  return p;
}

void cmd_mv_test(const RunConfig& c, const Constants& k, const Output& o) {
  const DirichletPoly poly = poly_from(c);
  const double T = c.real("T");
  const double kappa = c.real_or("kappa", k.mv_kappa);
  const MvCheck r = mv_check(poly, T, c.quadrature());
  const double deviation = std::abs(r.lhs - r.main);
  Table t;
  t.header = {"T", "terms", "lhs", "main", "budget", "kappa", "deviation", "pass"};
  t.rows.push_back({T, static_cast<double>(poly.coefficients.size()), r.lhs, r.main, r.budget,
                    kappa, deviation, std::string(deviation <= kappa * r.budget ? "true" : "false")});
  o.write(o.format("csv") == "json" ? to_json(t) : to_csv(t));
}

using KeyOptions = std::vector<std::pair<CLI::Option*, std::string>>;

void add_keys(CLI::App* sub, std::map<std::string, std::string>& values, KeyOptions& opts,
              std::initializer_list<std::pair<const char*, const char*>> keys) {
  for (const auto& [key, help] : keys) {
    std::string flag = std::string("--") + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    CLI::Option* opt = sub->add_option(flag, values[key], help);
    opts.emplace_back(opt, key);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dzeta: double zeta values, approximations and mean squares"};
  app.name("dzeta");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "JSON file with the command parameters");
  app.add_option("--out", g.out, "output file (default: standard output)");
  app.add_option("--format", g.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--threads", g.threads, "worker threads (default: all cores)")
      ->check(CLI::Range(1u, 4096u));
  app.add_option("--constants", g.constants, "constants file (default: built in)");

  std::map<std::string, std::string> values;
  KeyOptions opts;
  const std::initializer_list<std::pair<const char*, const char*>> quad_keys = {
      {"rule", "composite-simpson, gauss-legendre-panels or double-exponential-tail"},
      {"panels", "minimum panel count"},
      {"nodes_per_panel", "quadrature nodes per panel"},
      {"abs_tol", "absolute tolerance of tail integrals"},
  };
  const std::initializer_list<std::pair<const char*, const char*>> limit_keys = {
      {"max_outer", "cap on the outer cutoff"},
      {"max_terms", "cap on terms per evaluation"},
  };

  std::string eval_target;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one value");
  eval->add_option("target", eval_target,
                   "av2-direct, mt2-direct, av2-first, av2-second, mt2-approx, av2-sq, mt2-sq, zeta")
      ->required();
  add_keys(eval, values, opts,
           {{"s1", "s1 as re or re,im"}, {"s2", "s2"}, {"s3", "s3"}, {"s", "zeta argument"},
            {"sigma", "real exponent of the square series"}, {"eps", "requested error"},
            {"cutoff", "explicit cutoff"}, {"x", "first approximation: x"},
            {"y", "first approximation: y"}, {"C", "first approximation: C"}});
  add_keys(eval, values, opts, quad_keys);
  add_keys(eval, values, opts, limit_keys);

  CLI::App* ms = app.add_subcommand("mean-square", "integrate |zeta|^2 along t3");
  add_keys(ms, values, opts,
           {{"target", "AV or MT"}, {"s1", "s1"}, {"s2", "s2"}, {"sigma3", "sigma3"},
            {"T", "comma-separated T samples"}, {"evaluator", "direct or second_approx"},
            {"eps", "series accuracy"}, {"refinement", "node density multiplier"}});
  add_keys(ms, values, opts, quad_keys);
  add_keys(ms, values, opts, limit_keys);

  CLI::App* regime = app.add_subcommand("regime", "classify the mean-square regime");
  add_keys(regime, values, opts,
           {{"target", "AV or MT"}, {"s1", "s1"}, {"s2", "s2"}, {"sigma3", "sigma3"}});

  CLI::App* rel = app.add_subcommand("relation-check", "residual of the MT = AV + AV + zeta relation");
  add_keys(rel, values, opts,
           {{"s1", "s1"}, {"s2", "s2"}, {"s3", "s3"}, {"eps", "series accuracy"},
            {"route", "direct or approx"}});
  add_keys(rel, values, opts, limit_keys);

  CLI::App* mv = app.add_subcommand("mv-test", "mean value of a Dirichlet polynomial");
  add_keys(mv, values, opts, {{"T", "upper limit"}, {"kappa", "override of the constant"}});
  add_keys(mv, values, opts, quad_keys);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    RunConfig config = g.config.empty() ? RunConfig{} : RunConfig::from_file(g.config);
    for (const auto& [opt, key] : opts) {
      if (opt->count() > 0) config.set(key, values[key]);
    }
    const Constants constants =
        g.constants.empty() ? builtin_constants() : Constants::load(g.constants);
    if (g.threads > 0) set_thread_count(g.threads);
    const Output o(g, out);

    if (eval->parsed()) {
      cmd_eval(eval_target, config, constants, o);
    } else if (ms->parsed()) {
      cmd_mean_square(config, constants, o);
    } else if (regime->parsed()) {
      cmd_regime(config, o);
    } else if (rel->parsed()) {
      cmd_relation_check(config, constants, o);
    } else if (mv->parsed()) {
      cmd_mv_test(config, constants, o);
    }
  } catch (const PreconditionError& e) {
    err << "dzeta: " << e.what() << '\n';
    return kPrecondition;
  } catch (const DomainError& e) {
    err << "dzeta: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InsufficientDataError& e) {
    err << "dzeta: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "dzeta: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace dzeta::cli
