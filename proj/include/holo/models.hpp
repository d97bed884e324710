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

// Level bases, loop parameters and every Hamiltonian / dark state of the
// four-level Lambda scheme.

#include <utility>

#include "holo/numerics.hpp"

namespace holo {

/// Full basis (g1, g2, g3, e).
namespace level4 {
inline constexpr int kDim = 4;
inline constexpr int kG1 = 0;
inline constexpr int kG2 = 1;
inline constexpr int kG3 = 2;
inline constexpr int kE = 3;
}  // namespace level4

/// Reduced basis (g2, g3, e) for the abelian loop, where g1 is decoupled.
/// The two-qubit enclosed space (g2g2, g3g3, ee) uses the same indices.
namespace level3 {
inline constexpr int kDim = 3;
inline constexpr int kG2 = 0;
inline constexpr int kG3 = 1;
inline constexpr int kE = 2;
}  // namespace level3

/// Loop parameters: Rabi strength omega (> 0), mixing angle theta and the
/// ratio g = gamma / omega of the loop frequency to the Rabi strength. The
/// ratio is the stored quantity; gamma and the period are derived from it.
template <class Tag>
struct LoopParams {
  double omega = 1.0;
  double theta = 0.0;
  double ratio = 0.0;

  static LoopParams from_gamma(double omega, double theta, double gamma) {
    return LoopParams{omega, theta, gamma / omega};
  }

  double gamma() const { return ratio * omega; }
  /// T = 2 pi / gamma; infinite for a static loop.
  double period() const { return kTwoPi / gamma(); }
  bool cyclic() const { return ratio > 0.0; }
};

using AbelianParams = LoopParams<struct AbelianLoopTag>;
using NonAbelianParams = LoopParams<struct NonAbelianLoopTag>;

/// Throws kInvalidArgument unless omega > 0, ratio >= 0 and all fields are finite.
template <class Tag>
void validate(const LoopParams<Tag>& p);

enum class RampShape { kLinear, kSmoothstep };

/// Mixing-angle ramp theta(t) from theta_start to theta_end over [0, duration].
struct RampProfile {
  RampShape shape = RampShape::kLinear;
  double theta_start = 0.0;
  double theta_end = 0.0;
  double duration = 1.0;

  double theta(double t) const;
  double theta_dot(double t) const;
};

const char* to_string(RampShape s);

struct TwoQubitDriveParams {
  double amp1 = 0.0;  // |Omega_1|
  double amp2 = 0.0;  // |Omega_2|
  double phi1 = 0.0;
  double phi2 = 0.0;
};

/// Effective loop parameters of the two-qubit enclosed space:
/// kappa sin(theta) = -|Omega_1|^2, kappa cos(theta) = |Omega_2|^2,
/// phi = 2 (phi1 - phi2). The branch sin <= 0, cos >= 0 is used.
struct EffectiveParams {
  double kappa = 0.0;
  double sin_theta = 0.0;
  double cos_theta = 1.0;
  double theta = 0.0;  // atan2(sin_theta, cos_theta), in [-pi/2, 0]
  double phi = 0.0;
};

struct TwoQubitEffective {
  CMatrix h{3};  // basis (g2g2, g3g3, ee)
  EffectiveParams params;
};

// --- abelian loop, basis (g2, g3, e) -------------------------------------

CMatrix h_abelian(const AbelianParams& p, double t);
/// Static core of the cranked Hamiltonian (h_abelian at t = 0).
CMatrix h0_abelian(const AbelianParams& p);
/// I(t) = H(t) + gamma sigma_33.
CMatrix invariant_abelian(const AbelianParams& p, double t);
/// |D> = cos(theta)|g2> - sin(theta) e^{i phase}|g3>
StateVector dark_state_abelian(double theta, double phase);

// --- non-abelian loop, basis (g1, g2, g3, e) -----------------------------

CMatrix h_nonabelian(const NonAbelianParams& p, double t);
/// |D1> = cos(theta)|g1> - sin(theta)|g3>, |D2> = |g2>
std::pair<StateVector, StateVector> dark_states_nonabelian(double theta);

// --- ramps with and without the matching term (phi = 0) -----------------

/// H(theta(t), phi = 0) on (g2, g3, e).
CMatrix h_ramp_abelian(const RampProfile& ramp, double t, double omega);
/// H(theta(t)) + i theta_dot (sigma_23 - sigma_32); throws kTimeOutOfRange outside [0, duration].
CMatrix h_matching_abelian(const RampProfile& ramp, double t, double omega);
/// Non-abelian H(theta(t), phi = 0) on (g1, g2, g3, e).
CMatrix h_ramp_nonabelian(const RampProfile& ramp, double t, double omega);
/// H(theta(t)) + i theta_dot (sigma_13 - sigma_31); throws kTimeOutOfRange outside [0, duration].
CMatrix h_matching_nonabelian(const RampProfile& ramp, double t, double omega);

// --- two-qubit enclosed space --------------------------------------------

/// Builds the effective Hamiltonian on (g2g2, g3g3, ee) from the drive and
/// its loop parameters. Throws kDegenerateDrive when both amplitudes vanish.
TwoQubitEffective two_qubit_effective(const TwoQubitDriveParams& d);
/// The same Hamiltonian assembled from effective parameters and the su(3)
/// generators carrying e^{i 2 phi1}.
CMatrix effective_hamiltonian(const EffectiveParams& e, double phi1);
/// Inverse of two_qubit_effective's parameter map. phi is wrapped to (-pi, pi].
EffectiveParams extract_effective_params(const CMatrix& h);

/// Embeds an operator on (g2, g3, e) into (g1, g2, g3, e), putting `g1_entry`
/// on the decoupled g1 diagonal (0 for Hamiltonians, 1 for propagators).
CMatrix lift_to_four_level(const CMatrix& m3, cplx g1_entry);

}  // namespace holo
