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

// Cross-checks between the closed-form solvers and the RK4 oracle.

#include <string>
#include <vector>

namespace holo::app {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct InfoLine {
  std::string name;
  std::string text;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<InfoLine> info;

  bool all_passed() const;
};

struct VerificationOptions {
  int steps = 20000;  // RK4 steps per period (or per ramp)
  int threads = 1;
};

VerificationReport run_verification(const VerificationOptions& opts);

/// One line per check ("PASS name  measured=... tol=...  detail") and per
/// info entry ("INFO name  text").
std::string format_text(const VerificationReport& report);
std::string format_json(const VerificationReport& report);

}  // namespace holo::app
