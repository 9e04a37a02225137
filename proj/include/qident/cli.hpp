// Copyright 2026 The qident Authors
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

// Command-line front end. Exit codes: 0 pass, 1 computational failure,
// 2 usage error.

#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qident/io.hpp"
#include "qident/reproduce.hpp"

namespace qident {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string target;  // example name or objective name
  int d = 0;
  int n = 0;
  std::string family;
  std::string strategy_path;
  std::optional<double> eps;
  std::optional<double> delta;
  std::uint64_t rounds = 100000;
  std::uint64_t seed = 1;
  double resolution = 0.005;
  std::string format = "csv";
  std::string output_path;
  int jobs = 1;
  bool raw = false;
};

// Thrown for flag combinations that parse but do not make sense together.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace cli {

inline const std::vector<std::string> kFamilies = {
    "trine",   "trine-fixed",  "trine-delta", "eq8",        "eps-floor-d3", "eq14", "eps-floor-d4",
    "mub-d4",  "large-d",      "qutrit-d4",   "prop2",      "basis-plus",   "sigma-y"};

inline const std::vector<std::string> kObjectives = {"eps-d3", "eps-d4", "avg-given-eps",
                                                     "prop3-sup", "average-sup"};

// Writes to --output when given, otherwise to `out`.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output_path);
  if (!file) throw Error("cannot write " + cfg.output_path);
  file << text;
}

inline void print_rows(std::ostream& out, const std::string& example,
                       const std::vector<ClaimRow>& rows) {
  for (const ClaimRow& r : rows) {
    out << std::left << std::setw(10) << example << ' ' << std::setw(46) << r.claim << std::right
        << std::setprecision(10) << " expected " << std::setw(14) << r.expected << " computed "
        << std::setw(14) << r.computed << (r.check == ClaimRow::Check::within ? " |d| " : " <=+ ")
        << std::setw(9) << std::setprecision(3) << r.tolerance << "  "
        << (r.pass() ? "PASS" : "FAIL") << '\n';
  }
}

inline json rows_json(const std::string& example, const std::vector<ClaimRow>& rows) {
  json arr = json::array();
  for (const ClaimRow& r : rows) {
    arr.push_back({{"example", example},
                   {"claim", r.claim},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"tolerance", r.tolerance},
                   {"check", r.check == ClaimRow::Check::within ? "within" : "at_most"},
                   {"pass", r.pass()}});
  }
  return arr;
}

inline int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  const auto& registry = reproduce_registry();
  std::vector<std::string> names;
  if (cfg.target == "all") {
    for (const auto& [name, fn] : registry) names.push_back(name);
  } else if (registry.count(cfg.target)) {
    names.push_back(cfg.target);
  } else {
    throw UsageError("unknown example '" + cfg.target + "'");
  }
  const ReproduceOptions opts{cfg.resolution, cfg.jobs};
  bool ok = true;
  std::ostringstream text;
  json all = json::array();
  for (const auto& name : names) {
    const auto rows = registry.at(name)(opts);
    for (const auto& r : rows) ok = ok && r.pass();
    if (cfg.format == "json") {
      for (auto& r : rows_json(name, rows)) all.push_back(std::move(r));
    } else {
      print_rows(text, name, rows);
    }
  }
  if (cfg.format == "json") text << all.dump(2) << '\n';
  emit(cfg, out, text.str());
  return ok ? kExitOk : kExitFailure;
}

struct Simulation {
  GameSpec spec;
  std::optional<QuantumStrategy> quantum;
  std::optional<ClassicalStrategy> classical;
  std::optional<SuccessReport> expected;
};

inline Simulation build_simulation(const RunConfig& cfg) {
  if (!cfg.strategy_path.empty()) {
    StrategyFile file = load_strategy(cfg.strategy_path);
    Simulation sim{file.spec, {}, {}, {}};
    if (file.is_quantum()) {
      sim.quantum = std::get<QuantumStrategy>(std::move(file.strategy));
    } else {
      sim.classical = std::get<ClassicalStrategy>(std::move(file.strategy));
    }
    return sim;
  }
  const std::string& fam = cfg.family;
  if (fam == "trine-fixed") {
    const auto t = trine_states();
    return Simulation{GameSpec::make(3, 2), trine_fixed_strategy(), {}, t.expected};
  }
  FamilyInstance f;
  if (fam == "trine") {
    f = trine_states();
  } else if (fam == "trine-delta") {
    f = trine_family(cfg.delta.value_or(0.25));
  } else if (fam == "eq8" || fam == "eps-floor-d3") {
    f = eps_floor_d3(cfg.eps.value_or(0.1));
  } else if (fam == "eq14" || fam == "eps-floor-d4") {
    f = eps_floor_d4(cfg.eps.value_or(0.1));
  } else if (fam == "mub-d4") {
    f = mub_states_d4();
  } else if (fam == "large-d") {
    f = large_d_encoding(cfg.d > 0 ? cfg.d : 7);
  } else if (fam == "qutrit-d4") {
    f = qutrit_d4_encoding();
  } else if (fam == "prop2" || fam == "basis-plus") {
    f = basis_plus_states();
  } else if (fam == "sigma-y") {
    f = sigma_y_extension(cfg.d > 0 ? cfg.d : 5);
  } else {
    throw UsageError("unknown family '" + fam + "'");
  }
  return Simulation{f.game(), f.strategy(), {}, f.expected};
}

inline int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.family.empty() == cfg.strategy_path.empty()) {
    throw UsageError("simulate needs exactly one of --family or --strategy");
  }
  Simulation sim;
  try {
    sim = build_simulation(cfg);
  } catch (const InvalidParameterError& e) {
    throw UsageError(e.what());
  }

  SimStats stats;
  bool claims_win = false;
  if (sim.quantum) {
    claims_win = wins_quantum(sim.spec, *sim.quantum);
    stats = run_rounds(sim.spec, *sim.quantum, cfg.rounds, cfg.seed, cfg.jobs);
  } else {
    claims_win = wins_classical(sim.spec, *sim.classical);
    stats = run_classical(sim.spec, *sim.classical, cfg.rounds, cfg.seed, cfg.jobs);
  }

  std::ostringstream data;
  if (cfg.format == "json") {
    data << stats_json(stats).dump(2) << '\n';
  } else {
    write_stats_csv(data, stats);
  }
  emit(cfg, out, data.str());

  err << "strategy " << stats.strategy_name << " on (" << stats.d << "," << stats.n << "): "
      << stats.rounds << " rounds, " << stats.correct() << " correct, " << stats.conclusive_wrong
      << " wrong, " << stats.inconclusive << " inconclusive; wins=" << (claims_win ? "yes" : "no");
  if (sim.expected) err << "; max deviation " << max_deviation_sigmas(stats, *sim.expected) << " sigma";
  err << '\n';
  return claims_win && stats.conclusive_wrong > 0 ? kExitFailure : kExitOk;
}

inline int cmd_optimize(const RunConfig& cfg, std::ostream& out) {
  OptimizationResult r;
  try {
    detail::require_resolution(cfg.resolution);
  } catch (const InvalidParameterError& e) {
    throw UsageError(e.what());
  }
  if (cfg.target == "eps-d3") {
    r = maximize_epsilon_d3(cfg.resolution, cfg.jobs);
  } else if (cfg.target == "eps-d4") {
    r = maximize_epsilon_d4(cfg.resolution, cfg.jobs);
  } else if (cfg.target == "avg-given-eps") {
    r = maximize_avg_given_epsilon(cfg.eps.value_or(0.1), cfg.resolution, cfg.jobs);
  } else if (cfg.target == "prop3-sup" || cfg.target == "average-sup") {
    r = verify_average_sup(cfg.resolution, cfg.jobs);
  } else {
    throw UsageError("unknown objective '" + cfg.target + "'");
  }
  emit(cfg, out, optimization_json(r).dump(2) + "\n");
  return kExitOk;
}

inline int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  GameSpec spec;
  try {
    spec = GameSpec::make(cfg.d, cfg.n);
  } catch (const InvalidGameError& e) {
    throw UsageError(e.what());
  }
  const auto cert = exhaustive_no_win(spec, SearchOptions{cfg.raw, cfg.jobs});
  json j = certificate_json(cert);
  if (spec.n == 2 && spec.d <= kClassicalAvgMaxD) j["classical_average"] = classical_avg_json(best_classical_avg(spec));
  emit(cfg, out, j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Unambiguous identification game toolkit", "qident"};
  app.require_subcommand(1);

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--output", cfg.output_path, "write results to this file");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* reproduce = app.add_subcommand("reproduce", "expected-vs-computed tables");
  reproduce->add_option("example", cfg.target, "example name or 'all'")->required();
  reproduce->add_option("--resolution", cfg.resolution, "grid step as a fraction of pi");
  add_common(reproduce);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo rounds of a strategy");
  simulate->add_option("--family", cfg.family, "built-in encoding family")
      ->check(CLI::IsMember(cli::kFamilies));
  simulate->add_option("--strategy", cfg.strategy_path, "strategy JSON file");
  simulate->add_option("--eps", cfg.eps, "pairwise floor for the eps-floor families");
  simulate->add_option("--delta", cfg.delta, "trine-delta parameter");
  simulate->add_option("--d", cfg.d, "number of values (large-d, sigma-y)");
  simulate->add_option("--rounds", cfg.rounds, "rounds to play")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed, "random seed");
  add_common(simulate);

  auto* optimize = app.add_subcommand("optimize", "numerical maximization");
  optimize->add_option("objective", cfg.target, "objective to maximize")
      ->required()
      ->check(CLI::IsMember(cli::kObjectives));
  optimize->add_option("--resolution", cfg.resolution, "grid step as a fraction of pi");
  optimize->add_option("--eps", cfg.eps, "pairwise floor for avg-given-eps");
  add_common(optimize);

  auto* certify = app.add_subcommand("certify", "exhaustive classical search");
  certify->add_option("--d", cfg.d, "number of values")->required();
  certify->add_option("--n", cfg.n, "message size")->required();
  certify->add_flag("--raw", cfg.raw, "enumerate decoder rows instead of the injectivity test");
  add_common(certify);

  std::vector<const char*> argv{"qident"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (reproduce->parsed()) return cli::cmd_reproduce(cfg, out);
    if (simulate->parsed()) return cli::cmd_simulate(cfg, out, err);
    if (optimize->parsed()) return cli::cmd_optimize(cfg, out);
    if (certify->parsed()) return cli::cmd_certify(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qident
