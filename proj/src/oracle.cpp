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

#include "holo/oracle.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "holo/errors.hpp"
#include "holo/kernels.hpp"

namespace holo {

namespace {

// -i H in the padded interleaved layout the kernels expect.
struct Generator {
  alignas(32) double g[32] = {};
};

Generator make_generator(const CMatrix& h, double t) {
  if (!is_hermitian(h)) {
    std::ostringstream msg;
    msg << "H(t) not Hermitian at t = " << t;
    throw Error(ErrorKind::kNonHermitianInput, msg.str());
  }
  Generator gen;
  const cplx* a = h.data();
  for (int k = 0; k < 16; ++k) {
    gen.g[2 * k] = a[k].imag();
    gen.g[2 * k + 1] = -a[k].real();
  }
  return gen;
}

double time_at(const IntegrationSpec& s, double k) {
  return s.t_start + (s.t_end - s.t_start) * (k / s.steps);
}

void check_spec(const IntegrationSpec& s) {
  if (s.steps < 1) throw Error(ErrorKind::kInvalidArgument, "steps must be >= 1");
  if (!(s.t_end > s.t_start)) throw Error(ErrorKind::kInvalidArgument, "t_end must exceed t_start");
}

StateVector to_state(const double* y, int dim) {
  StateVector s(dim);
  std::memcpy(static_cast<void*>(s.data()), y, sizeof(double) * 2 * dim);
  return s;
}

double padded_norm(const double* y, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += y[i] * y[i];
  return std::sqrt(s);
}

// <a|b> over 4 interleaved complex components.
cplx padded_inner(const double* a, const double* b) {
  cplx s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(cplx(a[2 * i], a[2 * i + 1])) * cplx(b[2 * i], b[2 * i + 1]);
  return s;
}

// Batch RK4 of Y' = -i H(t) Y for a padded 4x4 Y over [0, period].
CMatrix propagate_block(const HamiltonianFn& hamiltonian, int dim, double period, int steps) {
  const auto& k = kernels::active();
  IntegrationSpec s;
  s.t_end = period;
  s.steps = steps;
  check_spec(s);
  const double h = period / steps;

  CMatrix y_mat = CMatrix::identity(dim);
  alignas(32) double y[32];
  alignas(32) double tmp[32];
  alignas(32) double k1[32], k2[32], k3[32], k4[32];
  std::memcpy(y, static_cast<const void*>(y_mat.data()), sizeof(y));

  Generator g0 = make_generator(hamiltonian(0.0), 0.0);
  for (int step = 0; step < steps; ++step) {
    const double tm = time_at(s, step + 0.5);
    const double t1 = time_at(s, step + 1.0);
    const Generator gm = make_generator(hamiltonian(tm), tm);
    const Generator g1 = make_generator(hamiltonian(t1), t1);
    k.gemm4(g0.g, y, k1);
    k.waxpy(tmp, y, 0.5 * h, k1, 32);
    k.gemm4(gm.g, tmp, k2);
    k.waxpy(tmp, y, 0.5 * h, k2, 32);
    k.gemm4(gm.g, tmp, k3);
    k.waxpy(tmp, y, h, k3, 32);
    k.gemm4(g1.g, tmp, k4);
    k.rk4_combine(y, k1, k2, k3, k4, h, 32);
    g0 = g1;
  }
  std::memcpy(static_cast<void*>(y_mat.data()), y, sizeof(y));
  return y_mat;
}

}  // namespace

Trajectory integrate(const HamiltonianFn& hamiltonian, const StateVector& psi0, const IntegrationSpec& spec) {
  check_spec(spec);
  const int dim = psi0.dim();
  const double norm0 = psi0.norm();
  if (std::abs(norm0 - 1.0) > kDefaultTolerances.unit_norm) {
    throw Error(ErrorKind::kInvalidArgument, "initial state must have unit norm");
  }
  const auto& k = kernels::active();
  const double h = (spec.t_end - spec.t_start) / spec.steps;

  alignas(32) double y[8] = {};
  alignas(32) double prev[8];
  alignas(32) double tmp[8];
  alignas(32) double k1[8], k2[8], k3[8], k4[8];
  std::memcpy(y, static_cast<const void*>(psi0.data()), sizeof(double) * 2 * dim);

  Trajectory traj;
  traj.times.push_back(spec.t_start);
  traj.states.push_back(psi0);

  const CMatrix h0 = hamiltonian(spec.t_start);
  if (h0.dim() != dim) throw Error(ErrorKind::kInvalidArgument, "H(t) and psi0 dimensions differ");
  Generator g0 = make_generator(h0, spec.t_start);
  for (int step = 0; step < spec.steps; ++step) {
    const double tm = time_at(spec, step + 0.5);
    const double t1 = step + 1 == spec.steps ? spec.t_end : time_at(spec, step + 1.0);
    const Generator gm = make_generator(hamiltonian(tm), tm);
    const Generator g1 = make_generator(hamiltonian(t1), t1);
    std::memcpy(prev, y, sizeof(y));
    k.gemv4(g0.g, y, k1);
    k.waxpy(tmp, y, 0.5 * h, k1, 8);
    k.gemv4(gm.g, tmp, k2);
    k.waxpy(tmp, y, 0.5 * h, k2, 8);
    k.gemv4(gm.g, tmp, k3);
    k.waxpy(tmp, y, h, k3, 8);
    k.gemv4(g1.g, tmp, k4);
    k.rk4_combine(y, k1, k2, k3, k4, h, 8);
    g0 = g1;

    traj.accumulated_phase += std::arg(padded_inner(prev, y));
    traj.max_norm_drift = std::max(traj.max_norm_drift, std::abs(padded_norm(y, 8) - norm0));

    const bool last = step + 1 == spec.steps;
    if (last || (spec.sample_stride > 0 && (step + 1) % spec.sample_stride == 0)) {
      traj.times.push_back(t1);
      traj.states.push_back(to_state(y, dim));
    }
  }

  if (traj.max_norm_drift > spec.unitarity_tolerance) {
    traj.failed = true;
    if (spec.strict) {
      std::ostringstream msg;
      msg << "norm drift " << traj.max_norm_drift << " exceeds " << spec.unitarity_tolerance;
      throw Error(ErrorKind::kNormDriftExceeded, msg.str());
    }
  }
  return traj;
}

PropagatorEstimate numeric_propagator(const HamiltonianFn& hamiltonian, double period, int steps,
                                      const PropagatorOptions& opts) {
  PropagatorEstimate out;
  const int dim = hamiltonian(0.0).dim();
  if (period == 0.0) {
    out.u = CMatrix::identity(dim);
    return out;
  }
  out.u = propagate_block(hamiltonian, dim, period, steps);
  out.unitarity_defect = unitarity_defect(out.u);
  if (opts.estimate_error) {
    const CMatrix fine = propagate_block(hamiltonian, dim, period, 2 * steps);
    out.error_estimate = spectral_norm(out.u - fine);
  }
  if (out.unitarity_defect > 10.0 * opts.unitarity_tolerance) {
    out.failed = true;
    if (opts.strict) {
      std::ostringstream msg;
      msg << "propagator unitarity defect " << out.unitarity_defect;
      throw Error(ErrorKind::kNormDriftExceeded, msg.str());
    }
  }
  return out;
}

double cyclic_phase_numeric(const AbelianParams& p, const CyclicPhaseOptions& opts) {
  validate(p);
  if (!p.cyclic()) throw Error(ErrorKind::kNonCyclic, "gamma/omega = 0 has no period");
  const StateVector psi0 = hermitian_eigensystem(invariant_abelian(p, 0.0)).vector(1);

  IntegrationSpec spec;
  spec.t_end = p.period();
  spec.steps = opts.steps;
  spec.sample_stride = 1;
  spec.strict = opts.strict;
  const Trajectory traj = integrate([&](double t) { return h_abelian(p, t); }, psi0, spec);

  double total = 0.0;
  double last = 0.0;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    StateVector chi = psi0;
    chi[level3::kG3] *= std::polar(1.0, p.gamma() * traj.times[k]);
    const double a = std::arg(inner(chi, traj.states[k]));
    if (k > 0) total += wrap_angle(a - last);
    last = a;
  }
  return total;
}

}  // namespace holo
