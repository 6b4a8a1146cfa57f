// Copyright 2026 The Possibly Authors
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

#include "cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "possibly/csv.h"
#include "possibly/possibility.h"
#include "possibly/probability.h"

namespace possibly::cli {

namespace {

struct FlagInfo {
  const char* name;
  const char* help;
};

constexpr FlagInfo kSimFlags[] = {
    {"agents", "number of agents k"},
    {"states", "number of states n"},
    {"evidence-rate", "evidence rate rho in [0, 1]"},
    {"noise", "noise standard deviation sigma >= 0"},
    {"theta", "Frank parameter: nonzero number or product|min|lukasiewicz"},
    {"steps", "time steps per run"},
    {"runs", "runs per sweep point"},
    {"seed", "64-bit base seed"},
    {"model", "possibilistic|probabilistic"},
    {"fusion", "pairwise fusion on|off"},
    {"fusion-adoption", "both|random-one"},
    {"workers", "worker threads (0 = all cores)"},
    {"out", "output directory (default $POSSIBLY_OUT or .)"},
    {"sweep-param", "swept parameter: theta|noise|evidence-rate|agents|steps"},
    {"grid", "comma-separated sweep values"},
};

using Values = std::map<std::string, std::string>;

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool IsKnownKey(const std::string& key) {
  for (const FlagInfo& f : kSimFlags) {
    if (key == f.name) return true;
  }
  return false;
}

// Flat "key = value" lines; '#' starts a comment line.
Values ReadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("--config: cannot read '" + path + "'");
  Values values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw CliError("--config: expected 'key = value' at " + path + ":" +
                     std::to_string(number));
    }
    std::string key = Trim(trimmed.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (!IsKnownKey(key)) {
      throw CliError("--config: unknown key '" + key + "' at " + path + ":" +
                     std::to_string(number));
    }
    values[key] = Trim(trimmed.substr(eq + 1));
  }
  return values;
}

template <typename Int>
Int ToInteger(const std::string& flag, const std::string& text) {
  Int value{};
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc() || ptr != last) {
    throw CliError("--" + flag + ": expected an integer, got '" + text + "'");
  }
  return value;
}

double ToDouble(const std::string& flag, const std::string& text) {
  try {
    return ParseDouble(text);
  } catch (const std::invalid_argument&) {
    throw CliError("--" + flag + ": expected a number, got '" + text + "'");
  }
}

std::vector<double> ToGrid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) grid.push_back(ToDouble("grid", Trim(item)));
  if (grid.empty()) throw CliError("--grid: no values given");
  return grid;
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw CliError(message);
}

SimParams ResolveParams(const Values& v) {
  SimParams p;
  const auto has = [&](const char* key) { return v.count(key) > 0; };
  if (has("agents")) p.agents = ToInteger<int>("agents", v.at("agents"));
  Require(p.agents >= 2, "--agents: must be >= 2");
  if (has("states")) p.states = ToInteger<int>("states", v.at("states"));
  Require(p.states >= 2, "--states: must be >= 2");
  if (has("evidence-rate")) {
    p.evidence_rate = ToDouble("evidence-rate", v.at("evidence-rate"));
  }
  Require(p.evidence_rate >= 0.0 && p.evidence_rate <= 1.0,
          "--evidence-rate: must lie in [0, 1]");
  if (has("noise")) p.noise = ToDouble("noise", v.at("noise"));
  Require(p.noise >= 0.0 && std::isfinite(p.noise), "--noise: must be >= 0");
  if (has("theta")) {
    try {
      p.theta = FrankParameter::Parse(v.at("theta"));
    } catch (const std::invalid_argument& e) {
      throw CliError(std::string("--theta: ") + e.what());
    }
  }
  if (has("steps")) p.steps = ToInteger<int>("steps", v.at("steps"));
  Require(p.steps >= 0, "--steps: must be >= 0");
  if (has("seed")) p.seed = ToInteger<std::uint64_t>("seed", v.at("seed"));
  try {
    if (has("model")) p.model = ParseBeliefModel(v.at("model"));
  } catch (const std::invalid_argument& e) {
    throw CliError(std::string("--model: ") + e.what());
  }
  if (has("fusion")) {
    const std::string& f = v.at("fusion");
    Require(f == "on" || f == "off",
            "--fusion: expected on|off, got '" + f + "'");
    p.fusion_enabled = f == "on";
  }
  try {
    if (has("fusion-adoption")) {
      p.adoption = ParseFusionAdoption(v.at("fusion-adoption"));
    }
  } catch (const std::invalid_argument& e) {
    throw CliError(std::string("--fusion-adoption: ") + e.what());
  }
  return p;
}

std::string Join(std::span<const double> values) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i];
  }
  return out.str();
}

std::string SubsetName(const StateSubset& subset) {
  std::string name = "{";
  bool first = true;
  for (std::size_t m : subset.members()) {
    if (!first) name += ",";
    name += "s" + std::to_string(m + 1);
    first = false;
  }
  return name + "}";
}

}  // namespace

CliConfig ParseArgs(const std::vector<std::string>& args) {
  CLI::App app{"Possibilistic and probabilistic best-of-n simulator",
               "possibly"};
  app.require_subcommand(1, 1);

  Values flag_values;
  std::string config_path;
  std::string preset_id;
  std::vector<std::pair<CLI::App*, std::vector<std::pair<std::string, CLI::Option*>>>>
      registered;

  const auto add_sim_flags = [&](CLI::App* sub) {
    std::vector<std::pair<std::string, CLI::Option*>> options;
    for (const FlagInfo& f : kSimFlags) {
      options.emplace_back(
          f.name, sub->add_option(std::string("--") + f.name,
                                  flag_values[f.name], f.help));
    }
    sub->add_option("--config", config_path, "flat key = value config file");
    registered.emplace_back(sub, std::move(options));
  };

  CLI::App* run = app.add_subcommand("run", "run one simulation");
  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter");
  CLI::App* preset = app.add_subcommand("preset", "reproduce a figure preset");
  CLI::App* example = app.add_subcommand("example", "print the worked example");
  add_sim_flags(run);
  add_sim_flags(sweep);
  add_sim_flags(preset);
  preset->add_option("id", preset_id, "preset id")->required();
  (void)example;

  CliConfig config;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    config.help = app.help();
    return config;
  } catch (const CLI::ParseError& e) {
    throw CliError(e.what());
  }

  if (example->parsed()) {
    config.command = Command::kExample;
    return config;
  }
  config.command = run->parsed()     ? Command::kRun
                   : sweep->parsed() ? Command::kSweep
                                     : Command::kPreset;

  Values values;
  if (!config_path.empty()) values = ReadConfigFile(config_path);
  for (const auto& [sub, options] : registered) {
    if (!sub->parsed()) continue;
    for (const auto& [name, option] : options) {
      if (option->count() > 0) values[name] = flag_values[name];
    }
  }

  config.params = ResolveParams(values);
  config.seed_set = values.count("seed") > 0;
  if (values.count("runs")) {
    config.runs = ToInteger<int>("runs", values.at("runs"));
    config.runs_set = true;
  }
  Require(config.runs >= 1, "--runs: must be >= 1");
  if (values.count("workers")) {
    config.workers = ToInteger<unsigned>("workers", values.at("workers"));
  }
  if (values.count("out")) {
    config.out_dir = values.at("out");
  } else if (const char* env = std::getenv("POSSIBLY_OUT")) {
    config.out_dir = env;
  }

  switch (config.command) {
    case Command::kRun:
    case Command::kSweep: {
      const std::string name = config.command == Command::kRun ? "run" : "sweep";
      Require(config.seed_set, "--seed: required for '" + name + "'");
      break;
    }
    default:
      break;
  }

  if (config.command == Command::kSweep) {
    Require(values.count("sweep-param") > 0,
            "--sweep-param: required for 'sweep'");
    Require(values.count("grid") > 0, "--grid: required for 'sweep'");
    try {
      config.sweep_parameter = ParseSweepParameter(values.at("sweep-param"));
    } catch (const std::invalid_argument& e) {
      throw CliError(std::string("--sweep-param: ") + e.what());
    }
    config.grid = ToGrid(values.at("grid"));
    for (double x : config.grid) {
      try {
        WithParameter(config.params, config.sweep_parameter, x).Validate();
      } catch (const std::invalid_argument& e) {
        throw CliError("--grid: value " + FormatDouble(x) + ": " + e.what());
      }
    }
  }

  if (config.command == Command::kPreset) {
    try {
      GetPreset(preset_id);
    } catch (const std::invalid_argument& e) {
      throw CliError(std::string("preset: ") + e.what());
    }
    config.preset = preset_id;
  }
  return config;
}

std::string FormatWorkedExample() {
  const PossibilityDistribution pi{1.0, 0.8, 0.7};
  const PossibilityDistribution other{0.4, 0.9, 1.0};
  const FrankParameter theta(10.0);
  const std::size_t n = pi.size();

  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  out << "pi = " << Join(pi.values()) << "\n\n";

  const std::vector<StateSubset> subsets = {
      StateSubset(n, {0, 1, 2}), StateSubset(n, {0, 1}),
      StateSubset(n, {0, 2}),    StateSubset(n, {1, 2}),
      StateSubset(n, {0}),       StateSubset(n, {1}),
      StateSubset(n, {2})};
  out << "possibility measures\n";
  for (const StateSubset& a : subsets) {
    out << "  Pi(" << SubsetName(a) << ") = " << PossibilityMeasure(pi, a)
        << "\n";
  }
  out << "necessity measures\n";
  for (const StateSubset& a : subsets) {
    out << "  N(" << SubsetName(a) << ") = " << NecessityMeasure(pi, a)
        << "\n";
  }

  std::vector<double> ignorance(n);
  for (std::size_t i = 0; i < n; ++i) {
    ignorance[i] = PossibilityOf(pi, i) - NecessityOf(pi, i);
  }
  out << "ignorance: " << Join(ignorance) << "\n";
  out << "pignistic: " << Join(Pignistic(pi).values()) << "\n\n";

  std::vector<double> tnorm(n);
  for (std::size_t i = 0; i < n; ++i) tnorm[i] = FrankTNorm(theta, pi[i], other[i]);
  out << "pi' = " << Join(other.values()) << "\n";
  out << "theta = " << theta.ToString() << "\n";
  out << "t-norm: " << Join(tnorm) << "\n";
  out << "normaliser: " << 1.0 - Consistency(theta, pi, other) << "\n";
  out << "fused: " << Join(Fuse(theta, pi, other).values()) << "\n";
  return out.str();
}

int Execute(const CliConfig& config, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!config.help.empty()) {
    out << config.help;
    return 0;
  }
  try {
    switch (config.command) {
      case Command::kExample:
        out << FormatWorkedExample();
        return 0;
      case Command::kRun: {
        // One run unless --runs is given; run r uses run index r.
        const int runs = config.runs_set ? config.runs : 1;
        std::vector<RunResult> results;
        for (int r = 0; r < runs; ++r) {
          results.push_back(
              Run(config.params, {static_cast<std::uint64_t>(r)}));
        }
        fs::create_directories(config.out_dir);
        const std::string path =
            (fs::path(config.out_dir) / "run_trajectory.csv").string();
        EmitTrajectoryCsv(results, config.params.model, path);
        out << "step " << results.front().records.back().step;
        std::uint64_t degenerate = 0;
        for (const RunResult& r : results) degenerate += r.degenerate_fusions;
        for (const std::string& m : MetricNames(config.params.model)) {
          double sum = 0.0;
          for (const RunResult& r : results) {
            sum += MetricValue(r.records.back(), m);
          }
          out << " " << m << "=" << FormatDouble(sum / runs);
        }
        out << "\n";
        if (degenerate > 0) out << "degenerate fusions: " << degenerate << "\n";
        out << "wrote " << path << "\n";
        return 0;
      }
      case Command::kSweep: {
        SweepSpec spec;
        spec.base = config.params;
        spec.parameter = config.sweep_parameter;
        spec.grid = config.grid;
        spec.runs = config.runs;
        const SweepResult result = Sweep(spec, config.workers);
        fs::create_directories(config.out_dir);
        const std::string path =
            (fs::path(config.out_dir) / "sweep_aggregate.csv").string();
        EmitAggregateCsv(result.aggregates, path);
        if (result.degenerate_fusions > 0) {
          out << "degenerate fusions: " << result.degenerate_fusions << "\n";
        }
        out << "wrote " << path << "\n";
        return 0;
      }
      case Command::kPreset: {
        Preset preset = config.seed_set
                            ? GetPreset(config.preset, config.params.seed)
                            : GetPreset(config.preset);
        if (config.runs_set) {
          for (Experiment& e : preset.experiments) e.spec.runs = config.runs;
        }
        for (const std::string& path :
             RunPreset(preset, config.out_dir, config.workers)) {
          out << "wrote " << path << "\n";
        }
        return 0;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int Main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return Execute(ParseArgs(args), std::cout, std::cerr);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace possibly::cli
