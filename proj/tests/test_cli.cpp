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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "holo/abelian.hpp"
#include "holo/app/commands.hpp"
#include "holo/app/format.hpp"
#include "holo/app/grids.hpp"

namespace holo::app {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(std::stod(f));
  return v;
}

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(NAN), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(Format, CsvFlagColumnOnlyWhenNeeded) {
  CsvTable t({"a", "b"});
  t.add_row({1.0, 2.5});
  EXPECT_FALSE(t.has_flags());
  EXPECT_EQ(t.str(), "a,b\n1,2.5\n");
  t.add_row({NAN, NAN}, true);
  EXPECT_EQ(t.str(), "a,b,flag\n1,2.5,0\nnan,nan,1\n");
  EXPECT_EQ(t.rows(), 2u);
}

TEST(Grids, LinspaceAndInterior) {
  const auto l = linspace(0.0, 1.0, 5);
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l.front(), 0.0);
  EXPECT_EQ(l.back(), 1.0);
  EXPECT_EQ(l[2], 0.5);
  const auto i = interior(0.0, 1.0, 3);
  ASSERT_EQ(i.size(), 3u);
  EXPECT_EQ(i[0], 0.25);
  EXPECT_EQ(i[2], 0.75);
}

TEST(Fig1a, HeaderRowsAndValues) {
  RunConfig cfg;
  cfg.command = Command::kFig1a;
  cfg.theta_grid = 3;
  cfg.ratio_grid = 6;
  cfg.threads = 2;
  const Result r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u + 18u);
  EXPECT_EQ(ls[0], "theta,gamma_ratio,eta");
  // Row (theta = pi/4, g = 0.2): theta index 1, ratio index 1.
  const auto row = fields(ls[1 + 6 + 1]);
  ASSERT_EQ(row.size(), 3u);
  EXPECT_NEAR(row[0], kPi / 4, 1e-11);
  EXPECT_NEAR(row[1], 0.2, 1e-12);
  EXPECT_NEAR(row[2], leakage_overlap(AbelianParams{1.0, kPi / 4, 0.2}), 1e-11);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Fig1b, DefaultGridAndPhases) {
  RunConfig cfg;
  cfg.command = Command::kFig1b;
  cfg.ratio_grid = 2;
  const Result r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u + 100u);
  EXPECT_EQ(ls[0], "theta,gamma_ratio,phi_total,phi_adiabatic_ref");
  const auto last = fields(ls.back());
  EXPECT_NEAR(last[0], kPi, 1e-11);
  EXPECT_EQ(last[1], 1.0);
}

TEST(Fig2, BlocksAndFlags) {
  RunConfig cfg;
  cfg.command = Command::kFig2;
  cfg.theta_grid = 5;
  cfg.gamma_ratios = {0.0, 0.5};
  const Result r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitOk);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 11u);
  EXPECT_EQ(ls[0], "gamma_ratio,one_minus_cos_theta,pop_d1,pop_d2,eta,flag");
  EXPECT_EQ(ls[1], "0,0,nan,nan,nan,1");
  const auto mid = fields(ls[8]);
  EXPECT_EQ(mid[0], 0.5);
  EXPECT_EQ(mid[1], 0.5);
  EXPECT_NEAR(mid[2] + mid[3], mid[4], 1e-11);
  EXPECT_EQ(mid[5], 0.0);

  cfg.gamma_ratios = {};
  cfg.theta_grid = std::nullopt;
  const auto def = lines(run_cfg(cfg).out);
  EXPECT_EQ(def.size(), 1u + 4u * 200u);
  EXPECT_EQ(def[0], "gamma_ratio,one_minus_cos_theta,pop_d1,pop_d2,eta");
}

TEST(Phase, JsonKeysAndValues) {
  RunConfig cfg;
  cfg.command = Command::kPhase;
  const Result r = run_cfg(cfg);
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j.begin().key(), "command");
  EXPECT_EQ(j["command"], "phase");
  EXPECT_NEAR(j["theta"].get<double>(), kPi / 4, 1e-15);
  EXPECT_NEAR(j["gamma_ratio"].get<double>(), 0.2, 1e-15);
  EXPECT_NEAR(j["phi_total"].get<double>(), -3.1104907942572956, 1e-12);
  EXPECT_NEAR(j["phi_total_oracle"].get<double>(), j["phi_total"].get<double>(), 1e-6);
  EXPECT_NEAR(j["eta"].get<double>(), 0.9900048609634333, 1e-12);
  EXPECT_EQ(j["roots"].size(), 3u);

  cfg.gamma_ratios = {0.0};
  const auto z = nlohmann::json::parse(run_cfg(cfg).out);
  EXPECT_TRUE(z["period"].is_null());
  EXPECT_TRUE(z["phi_total_oracle"].is_null());
  EXPECT_EQ(z["eta"].get<double>(), 1.0);
}

TEST(Gate, JsonAndCsv) {
  RunConfig cfg;
  cfg.command = Command::kGate;
  cfg.theta = 0.7;
  cfg.gamma_ratios = {0.2};
  const auto j = nlohmann::json::parse(run_cfg(cfg).out);
  EXPECT_NEAR(j["pop_d1"].get<double>(), 0.97841988421658012, 1e-11);
  EXPECT_NEAR(j["fidelity"].get<double>(), 0.99052324945611744, 1e-11);
  cfg.format = OutputFormat::kCsv;
  const auto ls = lines(run_cfg(cfg).out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0].rfind("command,omega,theta,gamma_ratio,", 0), 0u);
  EXPECT_EQ(ls[1].rfind("gate,1,0.7,0.2,", 0), 0u);
}

TEST(Prep, DefaultsAndSystems) {
  RunConfig cfg;
  cfg.command = Command::kPrep;
  cfg.steps = 2000;
  for (PrepSystem s : {PrepSystem::kAbelian, PrepSystem::kNonAbelian}) {
    cfg.system = s;
    const auto j = nlohmann::json::parse(run_cfg(cfg).out);
    EXPECT_EQ(j["system"], to_string(s));
    EXPECT_NEAR(j["theta_end"].get<double>(), kPi / 3, 1e-15);
    EXPECT_LT(j["final_infidelity"].get<double>(), 1e-10);
    EXPECT_FALSE(j["failed"].get<bool>());
  }
  cfg.matching = false;
  cfg.system = PrepSystem::kAbelian;
  const auto j = nlohmann::json::parse(run_cfg(cfg).out);
  EXPECT_GT(j["final_infidelity"].get<double>(), 1e-3);
}

TEST(TwoQubit, GateOutput) {
  RunConfig cfg;
  cfg.command = Command::kTwoQubit;
  cfg.gamma_ratios = {0.3};
  const auto j = nlohmann::json::parse(run_cfg(cfg).out);
  EXPECT_NEAR(j["kappa"].get<double>(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(j["theta_eff"].get<double>(), -kPi / 4, 1e-15);
  const double phi = j["phase_on_11"].get<double>();
  EXPECT_NEAR(phi, total_phase(AbelianParams{std::sqrt(2.0), kPi / 4, 0.3}), 1e-12);
  EXPECT_NEAR(j["gate_diagonal"]["re"][3].get<double>(), std::cos(phi), 1e-15);
  EXPECT_NEAR(j["leakage_from_11"].get<double>() + j["eta"].get<double>(), 1.0, 1e-15);
}

TEST(ExitCodes, ConfigAndDegenerate) {
  RunConfig cfg;
  cfg.command = Command::kPhase;
  cfg.gamma_ratios = {1.5};
  Result r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());

  cfg.gamma_ratios = {0.2};
  cfg.steps = 10;
  EXPECT_EQ(run_cfg(cfg).code, kExitConfigError);

  cfg = RunConfig{};
  cfg.command = Command::kFig1a;
  cfg.ratio_grid = 0;
  EXPECT_EQ(run_cfg(cfg).code, kExitConfigError);

  cfg = RunConfig{};
  cfg.command = Command::kGate;
  cfg.gamma_ratios = {0.0};
  EXPECT_EQ(run_cfg(cfg).code, kExitConfigError);

  cfg = RunConfig{};
  cfg.command = Command::kTwoQubit;
  cfg.gamma_ratios = {0.3};
  cfg.drive = {0.0, 0.0, 0.0, 0.0};
  r = run_cfg(cfg);
  EXPECT_EQ(r.code, kExitDegenerate);
  EXPECT_NE(r.err.find("DegenerateDrive"), std::string::npos);
}

TEST(Determinism, ThreadCountDoesNotChangeBytes) {
  for (Command c : {Command::kFig1a, Command::kFig1b, Command::kFig2}) {
    RunConfig cfg;
    cfg.command = c;
    cfg.theta_grid = 17;
    cfg.ratio_grid = 13;
    cfg.threads = 1;
    const std::string a = run_cfg(cfg).out;
    cfg.threads = 8;
    const std::string b = run_cfg(cfg).out;
    EXPECT_EQ(a, b) << to_string(c);
    EXPECT_FALSE(a.empty());
  }
}

}  // namespace
}  // namespace holo::app
