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

#ifndef POSSIBLY_TOOLS_CLI_H_
#define POSSIBLY_TOOLS_CLI_H_

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "possibly/harness.h"
#include "possibly/simulation.h"

namespace possibly::cli {

// A usage error; what() is a single line naming the offending flag.
class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kRun, kSweep, kPreset, kExample };

struct CliConfig {
  Command command = Command::kExample;
  SimParams params;
  int runs = 100;
  bool runs_set = false;
  bool seed_set = false;
  SweepParameter sweep_parameter = SweepParameter::kNone;
  std::vector<double> grid;
  std::string preset;
  std::string out_dir = ".";
  unsigned workers = 0;
  // Set when --help was requested; holds the help text.
  std::string help;
};

// Parses arguments (without the program name). Precedence is flag, then
// config file, then defaults; --seed is required for run and sweep.
CliConfig ParseArgs(const std::vector<std::string>& args);

// Runs a parsed command. Diagnostics go to `err`; returns the exit code.
int Execute(const CliConfig& config, std::ostream& out, std::ostream& err);

// The three-state worked example computed live.
std::string FormatWorkedExample();

int Main(int argc, const char* const* argv);

}  // namespace possibly::cli

#endif  // POSSIBLY_TOOLS_CLI_H_
