// Copyright 2026 The Holonomy Simulator Authors
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

#pragma once

// Command implementations behind the holosim front end. Omega is fixed to 1
// (natural units); only gamma/omega is exposed.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "holo/experiments.hpp"

namespace holo::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitConfigError = 2,
  kExitDegenerate = 3,
};

enum class Command { kFig1a, kFig1b, kFig2, kPhase, kGate, kPrep, kTwoQubit, kVerify };
enum class OutputFormat { kDefault, kCsv, kJson };

const char* to_string(Command c);

struct RunConfig {
  Command command = Command::kVerify;
  std::optional<double> theta;          // phase, gate; target angle for prep
  std::vector<double> gamma_ratios;     // fig2 blocks; first entry for single-point commands
  std::optional<int> theta_grid;        // default 50 (fig1a/b) or 200 (fig2)
  int ratio_grid = 50;
  int steps = 20000;
  std::string out;                      // empty: stdout
  OutputFormat format = OutputFormat::kDefault;  // csv for grids, json for single points
  bool matching = true;
  RampShape ramp = RampShape::kLinear;
  double duration = 1.0;
  PrepSystem system = PrepSystem::kAbelian;
  TwoQubitDriveParams drive{1.0, 1.0, 0.0, 0.0};
  int threads = 0;                      // 0: hardware concurrency
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigError on out-of-range settings.
void validate(const RunConfig& cfg);

struct CommandOutput {
  int exit_code = kExitOk;
  std::string body;     // file / stdout content
  std::string message;  // diagnostics for stderr
};

/// Runs a validated command and returns its output without touching the
/// filesystem. Maps holo::Error kinds to exit codes.
CommandOutput execute(const RunConfig& cfg);

/// validate + execute, then writes the body to cfg.out (or `out`) and
/// diagnostics to `err`. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace holo::app
