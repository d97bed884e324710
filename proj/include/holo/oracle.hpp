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

// Brute-force referee: fixed-step RK4 integration of i d/dt |Psi> = H(t)|Psi>.
// It shares no code with the closed-form solvers beyond the matrix types and
// the Hamiltonian builders.

#include <functional>
#include <vector>

#include "holo/models.hpp"

namespace holo {

using HamiltonianFn = std::function<CMatrix(double)>;

struct IntegrationSpec {
  double t_start = 0.0;
  double t_end = 1.0;
  int steps = 1000;
  double unitarity_tolerance = kDefaultTolerances.unitarity;
  // Record every n-th step (plus the end point); 0 records only the end points.
  int sample_stride = 1;
  // Throw kNormDriftExceeded on excess drift; otherwise only mark the run failed.
  bool strict = true;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  // sum_k arg <psi(t_k)|psi(t_k+1)> over every step: the dynamical phase
  // -integral <H> dt of the trajectory.
  double accumulated_phase = 0.0;
  double max_norm_drift = 0.0;
  bool failed = false;

  const StateVector& final_state() const { return states.back(); }
};

/// RK4 without renormalisation; norm drift is the error signal.
/// Throws kNonHermitianInput if H(t) is not Hermitian at an evaluated time.
Trajectory integrate(const HamiltonianFn& hamiltonian, const StateVector& psi0, const IntegrationSpec& spec);

struct PropagatorOptions {
  double unitarity_tolerance = kDefaultTolerances.unitarity;
  bool estimate_error = true;  // also run 2x steps and report ||U(n) - U(2n)||
  bool strict = true;
};

struct PropagatorEstimate {
  CMatrix u{2};
  double error_estimate = 0.0;    // spectral norm ||U(steps) - U(2 steps)||, 0 if not estimated
  double unitarity_defect = 0.0;  // ||U^dagger U - 1||
  bool failed = false;
};

/// Propagator over [0, period], all basis columns integrated together.
PropagatorEstimate numeric_propagator(const HamiltonianFn& hamiltonian, double period, int steps,
                                      const PropagatorOptions& opts = {});

struct CyclicPhaseOptions {
  int steps = 20000;
  bool strict = true;
};

/// Evolves the middle eigenvector of I(0) over one period under h_abelian and
/// returns the unwrapped argument of <chi(t)|Psi(t)>, where
/// chi(t) = e^{i gamma t sigma_33}|Psi(0)> is the cranked reference loop
/// (chi(T) = Psi(0)). Throws kNonCyclic for g = 0.
double cyclic_phase_numeric(const AbelianParams& p, const CyclicPhaseOptions& opts = {});

}  // namespace holo
