// Copyright 2026 The aerts-machines Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/app.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "aerts/bell.hpp"
#include "aerts/error.hpp"
#include "aerts/kernels.hpp"
#include "aerts/quantum.hpp"
#include "aerts/sqm.hpp"

namespace aerts::cli {

namespace {

using nlohmann::json;

constexpr const char* kUsage =
    "usage: aerts-machines {sqm|epsilon|quantum|bell|lhv} [--gamma G|START:STOP:STEPS] "
    "[--epsilon E] [--scenario NAME] [--trials N] [--seed S] [--format table|csv|json] "
    "[--out PATH] [--threads T]";

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!text.empty() && text.front() != '-') v = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return v;
}

json num(double v) { return round12(v); }

UnitVector3 particle_at(double gamma) { return UnitVector3::from_polar(gamma, 0.0); }

// Shared body of the sqm / epsilon / quantum sweeps. `analytic` gives p_plus
// for a particle at angle gamma from z-hat; `sample` the Monte Carlo estimate.
template <class Analytic, class Sample>
Report probability_sweep(const RunConfig& cfg, Analytic&& analytic, Sample&& sample) {
  Report r;
  r.command = cfg.command;
  const bool mc = cfg.trials > 0;
  r.columns = {"gamma"};
  if (cfg.epsilon) r.columns.push_back("epsilon");
  r.columns.push_back("p_plus_analytic");
  if (mc) {
    r.columns.push_back("p_plus_empirical");
    r.columns.push_back("std_err");
  }
  r.columns.push_back("trials");
  r.columns.push_back("seed");

  for (std::size_t k = 0; k < cfg.gammas.size(); ++k) {
    const double gamma = cfg.gammas[k];
    const sqm::Probabilities p = analytic(particle_at(gamma));
    std::vector<Cell> row{gamma};
    json item{{"gamma", num(gamma)},
              {"p_plus_analytic", num(p.plus)},
              {"p_minus_analytic", num(p.minus)},
              {"trials", cfg.trials}};
    if (cfg.epsilon) {
      row.emplace_back(*cfg.epsilon);
      item["epsilon"] = num(*cfg.epsilon);
    }
    row.emplace_back(p.plus);
    if (mc) {
      const stats::FrequencyEstimate f = sample(particle_at(gamma), derive_seed(cfg.seed, k));
      row.emplace_back(f.p_hat);
      row.emplace_back(f.std_err);
      item["p_plus_empirical"] = num(f.p_hat);
      item["std_err"] = num(f.std_err);
    }
    row.emplace_back(static_cast<std::int64_t>(cfg.trials));
    row.emplace_back(std::to_string(cfg.seed));
    r.rows.push_back(std::move(row));
    r.results.push_back(std::move(item));
  }
  return r;
}

Report run_bell(const RunConfig& cfg) {
  const std::optional<bell::Scenario> scenario = bell::scenario_from_name(cfg.scenario);
  if (!scenario) throw UsageError("unknown scenario '" + cfg.scenario + "'");

  const bool mc = cfg.trials > 0;
  const bell::ChshReport exact = bell::chsh_scenario(*scenario, 0, cfg.seed);
  const bell::ChshReport sampled = mc ? bell::chsh_scenario(*scenario, cfg.trials, cfg.seed) : exact;

  Report r;
  r.command = cfg.command;
  r.columns = mc ? std::vector<std::string>{"setting", "analytic", "empirical", "std_err", "trials", "seed"}
                 : std::vector<std::string>{"setting", "analytic", "trials", "seed"};

  const std::array<std::pair<const char*, const stats::ExpectationEstimate*>, 4> exact_e{
      {{"ab", &exact.e_ab}, {"ab'", &exact.e_ab_prime}, {"a'b'", &exact.e_a_prime_b_prime},
       {"a'b", &exact.e_a_prime_b}}};
  const std::array<const stats::ExpectationEstimate*, 4> sampled_e{
      &sampled.e_ab, &sampled.e_ab_prime, &sampled.e_a_prime_b_prime, &sampled.e_a_prime_b};

  json expectations = json::array();
  auto add_row = [&](const std::string& setting, double analytic, double empirical, double se) {
    std::vector<Cell> row{setting, analytic};
    if (mc) {
      row.emplace_back(empirical);
      row.emplace_back(se);
    }
    row.emplace_back(static_cast<std::int64_t>(cfg.trials));
    row.emplace_back(std::to_string(cfg.seed));
    r.rows.push_back(std::move(row));
  };
  for (std::size_t k = 0; k < exact_e.size(); ++k) {
    const auto& [label, e] = exact_e[k];
    json item{{"setting", label}, {"analytic", num(e->value)}, {"trials", cfg.trials}};
    if (mc) {
      item["empirical"] = num(sampled_e[k]->value);
      item["std_err"] = num(sampled_e[k]->standard_error);
    }
    expectations.push_back(std::move(item));
    add_row(label, e->value, sampled_e[k]->value, sampled_e[k]->standard_error);
  }
  add_row("S", exact.s_value, sampled.s_value, sampled.combined_standard_error());

  json result{{"scenario", cfg.scenario}, {"expectations", expectations}, {"s_value", num(sampled.s_value)}};
  if (mc) {
    result["s_value_analytic"] = num(exact.s_value);
    result["s_std_err"] = num(sampled.combined_standard_error());
  }
  r.results.push_back(std::move(result));
  r.notes.push_back("S = " + format_number(sampled.s_value) + " (local bound 2, quantum bound " +
                    format_number(2.0 * std::numbers::sqrt2) + ")");
  return r;
}

Report run_lhv(const RunConfig& cfg) {
  Report r;
  r.command = cfg.command;
  r.columns = {"o_a", "o_a_prime", "o_b", "o_b_prime", "s_value"};
  json strategies = json::array();
  for (const bell::LhvStrategy& s : bell::all_lhv_strategies()) {
    const double sv = bell::lhv_s_value(s);
    r.rows.push_back({std::int64_t{value(s.a)}, std::int64_t{value(s.a_prime)},
                      std::int64_t{value(s.b)}, std::int64_t{value(s.b_prime)}, sv});
    strategies.push_back({{"o_a", value(s.a)},
                          {"o_a_prime", value(s.a_prime)},
                          {"o_b", value(s.b)},
                          {"o_b_prime", value(s.b_prime)},
                          {"s_value", num(sv)}});
  }
  const double max_s = bell::lhv_maximum();
  r.results.push_back(
      {{"max_s", num(max_s)}, {"strategy_count", strategies.size()}, {"strategies", strategies}});
  r.notes.push_back("max_s = " + format_number(max_s) + " over " +
                    std::to_string(strategies.size()) + " strategies");
  return r;
}

json config_json(const RunConfig& cfg) {
  json c = json::object();
  if (cfg.command == "lhv") return c;
  c["trials"] = cfg.trials;
  c["seed"] = cfg.seed;
  if (cfg.command == "bell") {
    c["scenario"] = cfg.scenario;
  } else {
    c["gamma"] = cfg.gamma_spec;
  }
  if (cfg.epsilon) c["epsilon"] = num(*cfg.epsilon);
  return c;
}

}  // namespace

std::vector<double> parse_gamma(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (!spec.empty() && spec.back() == ':') parts.emplace_back();

  if (parts.size() == 1) return {parse_double(parts[0], "gamma")};
  if (parts.size() != 3) throw UsageError("gamma must be a number or START:STOP:STEPS");

  const double start = parse_double(parts[0], "gamma start");
  const double stop = parse_double(parts[1], "gamma stop");
  const std::uint64_t steps = parse_u64(parts[2], "gamma steps");
  if (steps > 1000000) throw UsageError("gamma sweep has too many steps");
  std::vector<double> out;
  out.reserve(steps);
  for (std::uint64_t k = 0; k < steps; ++k) {
    out.push_back(steps == 1 ? start
                             : start + (stop - start) * static_cast<double>(k) /
                                           static_cast<double>(steps - 1));
  }
  return out;
}

Report build_report(const RunConfig& cfg) {
  Report r;
  const UnitVector3 axis = UnitVector3::z_axis();

  if (cfg.command == "sqm") {
    r = probability_sweep(
        cfg,
        [&](const UnitVector3& v) { return sqm::analytic_probability({v}, axis); },
        [&](const UnitVector3& v, std::uint64_t seed) {
          return kernels::sqm_plus_frequency(v, axis, sqm::Uniform{}, cfg.trials, seed);
        });
  } else if (cfg.command == "epsilon") {
    if (!cfg.epsilon) throw UsageError("epsilon command requires --epsilon");
    const double eps = *cfg.epsilon;
    if (!(eps >= 0.0 && eps <= 1.0)) {
      throw UsageError("epsilon " + format_number(eps) + " outside [0, 1]");
    }
    const sqm::BreakProfile profile = sqm::epsilon_profile(eps);
    r = probability_sweep(
        cfg,
        [&](const UnitVector3& v) { return sqm::analytic_epsilon_probability({v}, axis, eps); },
        [&](const UnitVector3& v, std::uint64_t seed) {
          return kernels::sqm_plus_frequency(v, axis, profile, cfg.trials, seed);
        });
  } else if (cfg.command == "quantum") {
    r = probability_sweep(
        cfg,
        [&](const UnitVector3& v) {
          const double p = born_probability(state_from_direction(v), axis);
          return sqm::Probabilities{p, born_probability(state_from_direction(v), -axis)};
        },
        [&](const UnitVector3& v, std::uint64_t seed) {
          return kernels::born_plus_frequency(v, axis, cfg.trials, seed);
        });
  } else if (cfg.command == "bell") {
    r = run_bell(cfg);
  } else if (cfg.command == "lhv") {
    r = run_lhv(cfg);
  } else {
    throw UsageError("unknown command '" + cfg.command + "'");
  }
  r.config = config_json(cfg);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed) {
  CLI::App app{"Sphere and elastic-band hidden-measurement machines", "aerts-machines"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format_name = "table";
  std::string gamma_spec;
  std::optional<std::string> seed_text;
  std::string out_path;
  double epsilon = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", out_path, "write the report to this file");
    sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);
  };
  auto sampling = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials per setting (0 = analytic only)");
    sub->add_option("--seed", seed_text, "master seed (overrides AERTS_MACHINES_SEED)");
  };

  CLI::App* sqm_cmd = app.add_subcommand("sqm", "uniform elastic sphere machine");
  CLI::App* eps_cmd = app.add_subcommand("epsilon", "elastic breakable only in [-eps, eps]");
  CLI::App* quantum_cmd = app.add_subcommand("quantum", "spin-1/2 Born rule oracle");
  CLI::App* bell_cmd = app.add_subcommand("bell", "CHSH value of a coincidence scenario");
  CLI::App* lhv_cmd = app.add_subcommand("lhv", "enumerate deterministic local strategies");
  for (CLI::App* sub : {sqm_cmd, eps_cmd, quantum_cmd}) {
    sampling(sub);
    sub->add_option("--gamma", gamma_spec, "angle in radians or START:STOP:STEPS");
  }
  eps_cmd->add_option("--epsilon", epsilon, "breakable half-width in [0, 1]")->required();
  sampling(bell_cmd);
  bell_cmd->add_option("--scenario", cfg.scenario,
                       "uniform-band, fixed-break-band, pre-broken-band or quantum-singlet")
      ->required();
  common(lhv_cmd);

  std::vector<const char*> argv{"aerts-machines"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kUsage << "\n";
    return 2;
  }

  std::string rendered;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = *format_from_name(format_name);
    if (cfg.command == "epsilon") cfg.epsilon = epsilon;
    if (seed_text) {
      cfg.seed = parse_u64(*seed_text, "seed");
    } else if (env_seed) {
      cfg.seed = parse_u64(*env_seed, std::string(kSeedEnvVar) + " value");
    }
    if (cfg.command == "sqm" || cfg.command == "epsilon" || cfg.command == "quantum") {
      if (gamma_spec.empty()) {
        gamma_spec = "0:" + format_number(std::numbers::pi) + ":9";
      }
      cfg.gammas = parse_gamma(gamma_spec);
      cfg.gamma_spec = gamma_spec;
    }
    if (!out_path.empty()) cfg.output_path = out_path;

    kernels::set_thread_count(cfg.threads);
    rendered = render(build_report(cfg), cfg.format);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const aerts::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    file << rendered;
    file.flush();
    if (!file) {
      err << "error: cannot write " << *cfg.output_path << "\n";
      return 1;
    }
  } else {
    out << rendered;
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const char* env = std::getenv(kSeedEnvVar);
  return run(args, out, err, env ? std::optional<std::string>(env) : std::nullopt);
}

}  // namespace aerts::cli
