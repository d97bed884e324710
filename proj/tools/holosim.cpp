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

// holosim: figure data, single-point reports and the cross-validation suite.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "holo/app/commands.hpp"
#include "holo/errors.hpp"
#include "holo/kernels.hpp"

namespace {

using holo::app::Command;

const std::map<std::string, Command> kCommands = {
    {"fig1a", Command::kFig1a}, {"fig1b", Command::kFig1b}, {"fig2", Command::kFig2},
    {"phase", Command::kPhase}, {"gate", Command::kGate},   {"prep", Command::kPrep},
    {"twoqubit", Command::kTwoQubit}, {"verify", Command::kVerify},
};

const std::map<std::string, const char*> kHelp = {
    {"fig1a", "overlap eta over theta in (0, pi/2) x gamma/omega in [0, 1] (CSV)"},
    {"fig1b", "cyclic phase over theta in [0, pi] x gamma/omega in [0, 1] (CSV)"},
    {"fig2", "non-abelian dark-space populations vs 1 - cos(theta) (CSV)"},
    {"phase", "abelian loop at one point: roots, eta, phase (JSON)"},
    {"gate", "non-abelian gate at one point: projected holonomy, fidelity (JSON)"},
    {"prep", "dark-state preparation along a ramp (JSON)"},
    {"twoqubit", "two-qubit controlled-phase gate (JSON)"},
    {"verify", "run every closed-form vs oracle cross-check"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomic gate simulator for four-level Lambda systems (omega = 1)"};
  app.require_subcommand(1);
  app.fallthrough();

  holo::app::RunConfig cfg;
  double theta = 0.0;
  int theta_grid = 0;
  std::string format = "auto";
  std::string matching = "on";
  std::string ramp = "linear";
  std::string system = "abelian";
  std::string kernels = "auto";

  auto* theta_opt = app.add_option("--theta", theta, "mixing angle (rad); target angle for prep");
  app.add_option("--gamma-ratio", cfg.gamma_ratios, "gamma/omega (fig2 accepts several)")->delimiter(',');
  auto* grid_opt = app.add_option("--theta-grid", theta_grid, "number of theta points");
  app.add_option("--ratio-grid", cfg.ratio_grid, "number of gamma/omega points for fig1a/fig1b")
      ->capture_default_str();
  app.add_option("--steps", cfg.steps, "RK4 steps (per period or per ramp)")->capture_default_str();
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"auto", "csv", "json"}));
  app.add_option("--matching", matching, "on | off")->check(CLI::IsMember({"on", "off"}));
  app.add_option("--ramp", ramp, "linear | smoothstep")->check(CLI::IsMember({"linear", "smoothstep"}));
  app.add_option("--duration", cfg.duration, "ramp duration (omega t)")->capture_default_str();
  app.add_option("--system", system, "prep system: abelian | nonabelian")
      ->check(CLI::IsMember({"abelian", "nonabelian"}));
  app.add_option("--amp1", cfg.drive.amp1, "two-qubit |Omega_1|")->capture_default_str();
  app.add_option("--amp2", cfg.drive.amp2, "two-qubit |Omega_2|")->capture_default_str();
  app.add_option("--phi1", cfg.drive.phi1, "two-qubit phase phi_1")->capture_default_str();
  app.add_option("--phi2", cfg.drive.phi2, "two-qubit phase phi_2")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--kernels", kernels, "RK4 kernels: auto | scalar | avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  for (const auto& [name, cmd] : kCommands) app.add_subcommand(name, kHelp.at(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : holo::app::kExitConfigError;
  }

  cfg.command = kCommands.at(app.get_subcommands().front()->get_name());
  if (*theta_opt) cfg.theta = theta;
  if (*grid_opt) cfg.theta_grid = theta_grid;
  if (format == "csv") cfg.format = holo::app::OutputFormat::kCsv;
  if (format == "json") cfg.format = holo::app::OutputFormat::kJson;
  cfg.matching = matching == "on";
  cfg.ramp = ramp == "linear" ? holo::RampShape::kLinear : holo::RampShape::kSmoothstep;
  cfg.system = system == "abelian" ? holo::PrepSystem::kAbelian : holo::PrepSystem::kNonAbelian;

  try {
    if (kernels == "auto") {
      holo::kernels::select_auto();
    } else {
      holo::kernels::select(holo::kernels::parse_backend(kernels));
    }
  } catch (const holo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return holo::app::kExitConfigError;
  }

  return holo::app::run(cfg, std::cout, std::cerr);
}
