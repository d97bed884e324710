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

// Composed studies: dark-state preparation along a mixing-angle ramp, the
// invariant identity behind the matching interaction, and the two-qubit
// controlled-phase gate.

#include "holo/abelian.hpp"
#include "holo/oracle.hpp"

namespace holo {

enum class PrepSystem { kAbelian, kNonAbelian };

const char* to_string(PrepSystem s);

struct PrepOptions {
  int steps = 20000;
  double omega = 1.0;
  double unitarity_tolerance = kDefaultTolerances.unitarity;
  bool strict = true;
};

struct PrepReport {
  RampProfile ramp;
  PrepSystem system = PrepSystem::kAbelian;
  bool with_matching = false;
  int steps = 0;
  double final_infidelity = 0.0;  // 1 - |<D(theta_end)|psi(t1)>|^2
  double state_error = 0.0;       // || psi(t1) - D(theta_end) ||
  double norm_drift = 0.0;
};

/// Starts in |g2> (theta_start must be 0) and integrates the ramp over
/// [0, duration], with or without the matching term. Target |D(theta_end)>.
PrepReport prepare_dark_state(const RampProfile& ramp, bool with_matching, const PrepOptions& opts = {});

/// Four-level version: starts in |g1>, target |D1(theta_end)>.
PrepReport prepare_dark_state_nonabelian(const RampProfile& ramp, bool with_matching,
                                         const PrepOptions& opts = {});

PrepReport prepare(PrepSystem system, const RampProfile& ramp, bool with_matching, const PrepOptions& opts = {});

/// max over interior sample times of || dH/dt - i [H, H + H_ad] ||, with dH/dt
/// from a five-point central difference.
double invariant_identity_check(const RampProfile& ramp, int samples, PrepSystem system, double omega = 1.0);

struct TwoQubitGateReport {
  EffectiveParams effective;
  AbelianParams mapped;         // (kappa, |theta_eff|, gamma / kappa)
  double phase_on_11 = 0.0;     // Phi of the mapped loop
  double eta = 1.0;             // overlap of the mapped loop
  double leakage_from_11 = 0.0; // 1 - eta
  CMatrix gate{4};              // diag(1, 1, 1, e^{i Phi}) on (|00>, |01>, |10>, |11>)
};

/// Throws kDegenerateDrive if both amplitudes vanish and kNonCyclic if gamma = 0.
TwoQubitGateReport two_qubit_gate(const TwoQubitDriveParams& drive, double gamma);

}  // namespace holo
