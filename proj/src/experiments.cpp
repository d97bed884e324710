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

#include "holo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

namespace {

void check_ramp(const RampProfile& ramp) {
  if (ramp.theta_start != 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "preparation ramps must start at theta = 0");
  }
  if (!(ramp.duration > 0.0) || !std::isfinite(ramp.duration) || !std::isfinite(ramp.theta_end)) {
    throw Error(ErrorKind::kInvalidArgument, "ramp needs a finite positive duration and finite theta_end");
  }
}

HamiltonianFn ramp_hamiltonian(PrepSystem system, const RampProfile& ramp, bool with_matching, double omega) {
  if (system == PrepSystem::kAbelian) {
    if (with_matching) return [=](double t) { return h_matching_abelian(ramp, t, omega); };
    return [=](double t) { return h_ramp_abelian(ramp, t, omega); };
  }
  if (with_matching) return [=](double t) { return h_matching_nonabelian(ramp, t, omega); };
  return [=](double t) { return h_ramp_nonabelian(ramp, t, omega); };
}

}  // namespace

const char* to_string(PrepSystem s) { return s == PrepSystem::kAbelian ? "abelian" : "nonabelian"; }

PrepReport prepare(PrepSystem system, const RampProfile& ramp, bool with_matching, const PrepOptions& opts) {
  check_ramp(ramp);
  StateVector psi0(system == PrepSystem::kAbelian ? level3::kDim : level4::kDim);
  StateVector target = psi0;
  if (system == PrepSystem::kAbelian) {
    psi0 = StateVector::basis(level3::kDim, level3::kG2);
    target = dark_state_abelian(ramp.theta_end, 0.0);
  } else {
    psi0 = StateVector::basis(level4::kDim, level4::kG1);
    target = dark_states_nonabelian(ramp.theta_end).first;
  }

  IntegrationSpec spec;
  spec.t_start = 0.0;
  spec.t_end = ramp.duration;
  spec.steps = opts.steps;
  spec.sample_stride = 0;
  spec.unitarity_tolerance = opts.unitarity_tolerance;
  spec.strict = opts.strict;
  const Trajectory traj = integrate(ramp_hamiltonian(system, ramp, with_matching, opts.omega), psi0, spec);
  const StateVector& out = traj.final_state();

  PrepReport r;
  r.ramp = ramp;
  r.system = system;
  r.with_matching = with_matching;
  r.steps = opts.steps;
  r.final_infidelity = std::clamp(1.0 - std::norm(inner(target, out)), 0.0, 1.0);
  r.state_error = distance(out, target);
  r.norm_drift = traj.max_norm_drift;
  return r;
}

PrepReport prepare_dark_state(const RampProfile& ramp, bool with_matching, const PrepOptions& opts) {
  return prepare(PrepSystem::kAbelian, ramp, with_matching, opts);
}

PrepReport prepare_dark_state_nonabelian(const RampProfile& ramp, bool with_matching, const PrepOptions& opts) {
  return prepare(PrepSystem::kNonAbelian, ramp, with_matching, opts);
}

double invariant_identity_check(const RampProfile& ramp, int samples, PrepSystem system, double omega) {
  if (samples < 1) throw Error(ErrorKind::kInvalidArgument, "need at least one sample");
  if (!(ramp.duration > 0.0)) throw Error(ErrorKind::kInvalidArgument, "ramp duration must be positive");
  const HamiltonianFn h = ramp_hamiltonian(system, ramp, false, omega);
  const HamiltonianFn h_tot = ramp_hamiltonian(system, ramp, true, omega);
  // Samples sit at cell midpoints, so the stencil never leaves [0, duration].
  const double delta = 1e-3 * ramp.duration / samples;
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = ramp.duration * (k + 0.5) / samples;
    const CMatrix dh = (1.0 / (12.0 * delta)) *
                       (h(t - 2 * delta) - 8.0 * h(t - delta) + 8.0 * h(t + delta) - h(t + 2 * delta));
    const CMatrix ht = h(t);
    const CMatrix residual = dh - cplx(0.0, 1.0) * commutator(ht, h_tot(t));
    worst = std::max(worst, spectral_norm(residual));
  }
  return worst;
}

TwoQubitGateReport two_qubit_gate(const TwoQubitDriveParams& drive, double gamma) {
  TwoQubitGateReport r;
  r.effective = two_qubit_effective(drive).params;
  if (!(gamma > 0.0)) throw Error(ErrorKind::kNonCyclic, "two-qubit loop needs gamma > 0");
  // The enclosed space depends on theta_eff only through sin^2, so the loop
  // is the abelian one at (kappa, |theta_eff|, gamma / kappa).
  r.mapped = AbelianParams::from_gamma(r.effective.kappa, std::abs(r.effective.theta), gamma);
  r.phase_on_11 = total_phase(r.mapped);
  r.eta = leakage_overlap(r.mapped);
  r.leakage_from_11 = std::clamp(1.0 - r.eta, 0.0, 1.0);
  r.gate = CMatrix::identity(4);
  r.gate(3, 3) = std::polar(1.0, r.phase_on_11);
  return r;
}

}  // namespace holo
