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

#include "holo/models.hpp"

#include <cmath>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

template <class Tag>
void validate(const LoopParams<Tag>& p) {
  if (!std::isfinite(p.omega) || !std::isfinite(p.theta) || !std::isfinite(p.ratio)) {
    throw Error(ErrorKind::kInvalidArgument, "loop parameters must be finite");
  }
  if (!(p.omega > 0.0)) throw Error(ErrorKind::kInvalidArgument, "omega must be > 0");
  if (p.ratio < 0.0) throw Error(ErrorKind::kInvalidArgument, "gamma/omega must be >= 0");
}

template void validate(const AbelianParams&);
template void validate(const NonAbelianParams&);

// ---------------------------------------------------------------------------
// Ramps

namespace {

double normalized_time(const RampProfile& r, double t) {
  if (!(r.duration > 0.0)) throw Error(ErrorKind::kInvalidArgument, "ramp duration must be > 0");
  return t / r.duration;
}

void check_ramp_time(const RampProfile& r, double t) {
  // Integrators land on the end point through t0 + k h; allow that rounding.
  const double slack = 1e-12 * r.duration;
  if (!(t >= -slack && t <= r.duration + slack)) {
    std::ostringstream msg;
    msg << "t = " << t << " outside [0, " << r.duration << "]";
    throw Error(ErrorKind::kTimeOutOfRange, msg.str());
  }
}

CMatrix lambda_coupling(int dim, int bright_a, int bright_b, int excited, double omega, double theta) {
  CMatrix h(dim);
  const double a = omega * std::sin(theta);
  const double b = omega * std::cos(theta);
  h(bright_a, excited) = a;
  h(excited, bright_a) = a;
  h(bright_b, excited) = b;
  h(excited, bright_b) = b;
  return h;
}

}  // namespace

double RampProfile::theta(double t) const {
  const double tau = normalized_time(*this, t);
  const double u = shape == RampShape::kLinear ? tau : tau * tau * (3.0 - 2.0 * tau);
  return theta_start + (theta_end - theta_start) * u;
}

double RampProfile::theta_dot(double t) const {
  const double tau = normalized_time(*this, t);
  const double du = shape == RampShape::kLinear ? 1.0 : 6.0 * tau * (1.0 - tau);
  return (theta_end - theta_start) * du / duration;
}

const char* to_string(RampShape s) { return s == RampShape::kLinear ? "linear" : "smoothstep"; }

// ---------------------------------------------------------------------------
// Abelian loop

CMatrix h_abelian(const AbelianParams& p, double t) {
  using namespace level3;
  CMatrix h(kDim);
  const double a = p.omega * std::sin(p.theta);
  const cplx b = p.omega * std::cos(p.theta) * std::polar(1.0, p.gamma() * t);
  h(kG2, kE) = a;
  h(kE, kG2) = a;
  h(kG3, kE) = b;
  h(kE, kG3) = std::conj(b);
  return h;
}

CMatrix h0_abelian(const AbelianParams& p) {
  using namespace level3;
  return lambda_coupling(kDim, kG2, kG3, kE, p.omega, p.theta);
}

CMatrix invariant_abelian(const AbelianParams& p, double t) {
  CMatrix i = h_abelian(p, t);
  i(level3::kG3, level3::kG3) += p.gamma();
  return i;
}

StateVector dark_state_abelian(double theta, double phase) {
  StateVector d(level3::kDim);
  d[level3::kG2] = std::cos(theta);
  d[level3::kG3] = -std::sin(theta) * std::polar(1.0, phase);
  return d;
}

// ---------------------------------------------------------------------------
// Non-abelian loop

CMatrix h_nonabelian(const NonAbelianParams& p, double t) {
  using namespace level4;
  CMatrix h(kDim);
  const double gt = p.gamma() * t;
  const double s = p.omega * std::sin(p.theta);
  const double c1 = s * std::cos(gt);
  const double c2 = s * std::sin(gt);
  const double c3 = p.omega * std::cos(p.theta);
  h(kG1, kE) = c1;
  h(kE, kG1) = c1;
  h(kG2, kE) = c2;
  h(kE, kG2) = c2;
  h(kG3, kE) = c3;
  h(kE, kG3) = c3;
  return h;
}

std::pair<StateVector, StateVector> dark_states_nonabelian(double theta) {
  using namespace level4;
  StateVector d1(kDim);
  d1[kG1] = std::cos(theta);
  d1[kG3] = -std::sin(theta);
  return {d1, StateVector::basis(kDim, kG2)};
}

// ---------------------------------------------------------------------------
// Ramps with matching terms

CMatrix h_ramp_abelian(const RampProfile& ramp, double t, double omega) {
  using namespace level3;
  check_ramp_time(ramp, t);
  return lambda_coupling(kDim, kG2, kG3, kE, omega, ramp.theta(t));
}

CMatrix h_matching_abelian(const RampProfile& ramp, double t, double omega) {
  using namespace level3;
  CMatrix h = h_ramp_abelian(ramp, t, omega);
  const double td = ramp.theta_dot(t);
  h(kG2, kG3) += cplx(0.0, td);
  h(kG3, kG2) += cplx(0.0, -td);
  return h;
}

CMatrix h_ramp_nonabelian(const RampProfile& ramp, double t, double omega) {
  using namespace level4;
  check_ramp_time(ramp, t);
  return lambda_coupling(kDim, kG1, kG3, kE, omega, ramp.theta(t));
}

CMatrix h_matching_nonabelian(const RampProfile& ramp, double t, double omega) {
  using namespace level4;
  CMatrix h = h_ramp_nonabelian(ramp, t, omega);
  const double td = ramp.theta_dot(t);
  h(kG1, kG3) += cplx(0.0, td);
  h(kG3, kG1) += cplx(0.0, -td);
  return h;
}

// ---------------------------------------------------------------------------
// Two-qubit enclosed space

TwoQubitEffective two_qubit_effective(const TwoQubitDriveParams& d) {
  using namespace level3;
  if (!std::isfinite(d.amp1) || !std::isfinite(d.amp2) || !std::isfinite(d.phi1) ||
      !std::isfinite(d.phi2) || d.amp1 < 0.0 || d.amp2 < 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "drive amplitudes must be finite and >= 0");
  }
  const double w1 = d.amp1 * d.amp1;
  const double w2 = d.amp2 * d.amp2;
  const double kappa = std::hypot(w1, w2);
  if (!(kappa > 0.0)) throw Error(ErrorKind::kDegenerateDrive, "|Omega_1| = |Omega_2| = 0");

  TwoQubitEffective out;
  const cplx to_g2 = -w1 * std::polar(1.0, 2.0 * d.phi1);  // <ee|H|g2g2>
  const cplx to_g3 = w2 * std::polar(1.0, 2.0 * d.phi2);   // <ee|H|g3g3>
  out.h(kE, kG2) = to_g2;
  out.h(kG2, kE) = std::conj(to_g2);
  out.h(kE, kG3) = to_g3;
  out.h(kG3, kE) = std::conj(to_g3);

  EffectiveParams& e = out.params;
  e.kappa = kappa;
  e.sin_theta = -w1 / kappa;
  e.cos_theta = w2 / kappa;
  e.theta = std::atan2(e.sin_theta, e.cos_theta);
  e.phi = 2.0 * (d.phi1 - d.phi2);
  return out;
}

CMatrix effective_hamiltonian(const EffectiveParams& e, double phi1) {
  using namespace level3;
  // A_e2 = e^{i 2 phi1}|ee><g2g2|, A_e3 = e^{i 2 phi1}|ee><g3g3|, A_{mu nu}^dagger = A_{nu mu}
  const cplx carrier = std::polar(1.0, 2.0 * phi1);
  CMatrix a_e2 = carrier * sigma(kDim, kE, kG2);
  CMatrix a_e3 = carrier * sigma(kDim, kE, kG3);
  const cplx loop = std::polar(1.0, e.phi);
  return cplx(e.kappa * e.sin_theta) * (a_e2.adjoint() + a_e2) +
         cplx(e.kappa * e.cos_theta) * (loop * a_e3.adjoint() + std::conj(loop) * a_e3);
}

EffectiveParams extract_effective_params(const CMatrix& h) {
  using namespace level3;
  if (h.dim() != kDim) throw Error(ErrorKind::kInvalidArgument, "expected a 3x3 effective Hamiltonian");
  const cplx to_g2 = h(kE, kG2);
  const cplx to_g3 = h(kE, kG3);
  EffectiveParams e;
  e.kappa = std::hypot(std::abs(to_g2), std::abs(to_g3));
  if (!(e.kappa > 0.0)) throw Error(ErrorKind::kDegenerateDrive, "no coupling to ee");
  e.sin_theta = -std::abs(to_g2) / e.kappa;
  e.cos_theta = std::abs(to_g3) / e.kappa;
  e.theta = std::atan2(e.sin_theta, e.cos_theta);
  // arg <ee|H|g2g2> = 2 phi1 + pi, arg <ee|H|g3g3> = 2 phi2; phi is only
  // defined when both couplings are present.
  if (std::abs(to_g2) > 0.0 && std::abs(to_g3) > 0.0) {
    e.phi = wrap_angle(std::arg(to_g2) - kPi - std::arg(to_g3));
  }
  return e;
}

CMatrix lift_to_four_level(const CMatrix& m3, cplx g1_entry) {
  if (m3.dim() != level3::kDim) throw Error(ErrorKind::kInvalidArgument, "lift expects a 3x3 operator");
  CMatrix m(level4::kDim);
  m(level4::kG1, level4::kG1) = g1_entry;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r + 1, c + 1) = m3(r, c);
  return m;
}

}  // namespace holo
