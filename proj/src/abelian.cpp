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

#include "holo/abelian.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "holo/errors.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

void require_ratio_in_unit_interval(const AbelianParams& p) {
  validate(p);
  if (p.ratio > 1.0) {
    std::ostringstream msg;
    msg << "gamma/omega = " << p.ratio << " outside [0, 1]";
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }
}

void require_cyclic(const AbelianParams& p) {
  if (!p.cyclic()) throw Error(ErrorKind::kNonCyclic, "gamma/omega = 0 has no period");
}

// Angle gamma t reduced by whole periods, so t = k T maps to exactly 0.
double loop_angle(const AbelianParams& p, double t) {
  if (!p.cyclic()) return 0.0;
  const double cycles = t * p.gamma() / kTwoPi;
  double frac = cycles - std::round(cycles);
  if (std::abs(frac) < 1e-13) frac = 0.0;
  return kTwoPi * frac;
}

StateVector middle_eigenvector(const AbelianParams& p, const Tolerances& tol) {
  // Validates the spectrum (throws on a degenerate middle root) before
  // picking the middle eigenvector of I(0).
  characteristic_roots(p, tol);
  return hermitian_eigensystem(invariant_abelian(p, 0.0), tol).vector(1);
}

}  // namespace

MonicRealCubic characteristic_cubic(const AbelianParams& p) {
  const double g = p.ratio;
  const double s = std::sin(p.theta);
  return MonicRealCubic{-g, -1.0, g * s * s};
}

InvariantSpectrum characteristic_roots(const AbelianParams& p, const Tolerances& tol) {
  require_ratio_in_unit_interval(p);
  const auto r = solve_monic_real_cubic(characteristic_cubic(p), tol);
  InvariantSpectrum spec{r[0], r[1], r[2], p.omega};

  if (spec.x0 - spec.x_minus < tol.degenerate_root || spec.x_plus - spec.x0 < tol.degenerate_root) {
    std::ostringstream msg;
    msg << "middle root " << spec.x0 << " is degenerate at theta = " << p.theta << ", g = " << p.ratio;
    throw Error(ErrorKind::kDegenerateMiddleRoot, msg.str());
  }
  // The cubic is >= 0 at x = 0 and <= 0 at x = g, so for g in [0, 1] the
  // middle root lies in [0, g], next to its small-g value g sin^2(theta).
  const double slack = 1e-12;
  if (spec.x0 < -slack || spec.x0 > p.ratio + slack) {
    throw std::logic_error("middle invariant root left the bracket [0, g]");
  }
  return spec;
}

StateVector recurrent_basis(const AbelianParams& p, double t, const Tolerances& tol) {
  StateVector psi = middle_eigenvector(p, tol);
  psi[level3::kG3] *= std::polar(1.0, loop_angle(p, t));
  return psi;
}

CMatrix closed_form_propagator(const AbelianParams& p, double t) {
  validate(p);
  CMatrix generator = h0_abelian(p);
  generator(level3::kG3, level3::kG3) += p.gamma();
  CMatrix u = unitary_exp(generator, t);
  if (t == 0.0) return u;
  const cplx frame = std::polar(1.0, p.gamma() * t);
  for (int c = 0; c < level3::kDim; ++c) u(level3::kG3, c) *= frame;
  return u;
}

double leakage_overlap(const AbelianParams& p, const Tolerances& tol) {
  const StateVector psi0 = recurrent_basis(p, 0.0, tol);
  return std::norm(inner(psi0, dark_state_abelian(p.theta, 0.0)));
}

double leakage_overlap_at_period(const AbelianParams& p, const Tolerances& tol) {
  require_cyclic(p);
  const double period = p.period();
  const StateVector psi_t = recurrent_basis(p, period, tol);
  return std::norm(inner(psi_t, dark_state_abelian(p.theta, loop_angle(p, period))));
}

double total_phase(const AbelianParams& p, const Tolerances& tol) {
  require_cyclic(p);
  const InvariantSpectrum spec = characteristic_roots(p, tol);
  // psi_0(t) = e^{-i E0 t} times a loop that closes at T, so the return
  // amplitude accumulates -E0 T = -2 pi x0 / g.
  return -kTwoPi * spec.x0 / p.ratio;
}

int AdiabaticLimit::matching_factor(double tol) const {
  const double d2 = std::abs(extrapolated - ref_two_pi);
  const double d4 = std::abs(extrapolated - ref_four_pi);
  if (d2 <= d4 && d2 < tol) return 2;
  if (d4 < tol) return 4;
  return 0;
}

AdiabaticLimit adiabatic_phase_limit(double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw Error(ErrorKind::kInvalidArgument, "adiabatic limit needs theta in [0, pi]");
  }
  AdiabaticLimit lim;
  lim.theta = theta;
  lim.ratios = {1e-2, 5e-3, 2.5e-3};
  for (int k = 0; k < 3; ++k) {
    const AbelianParams p{1.0, theta, lim.ratios[k]};
    const auto r = solve_monic_real_cubic(characteristic_cubic(p));
    lim.samples[k] = kTwoPi * r[1] / lim.ratios[k];
  }
  // Halving g scales the g^2 error by 1/4 and the g^4 error by 1/16.
  const double r01 = (4.0 * lim.samples[1] - lim.samples[0]) / 3.0;
  const double r12 = (4.0 * lim.samples[2] - lim.samples[1]) / 3.0;
  lim.extrapolated = (16.0 * r12 - r01) / 15.0;
  const double s2 = std::sin(theta) * std::sin(theta);
  lim.ref_two_pi = kTwoPi * s2;
  lim.ref_four_pi = 2.0 * kTwoPi * s2;
  return lim;
}

AbelianCycleResult evaluate_cycle(const AbelianParams& p, const Tolerances& tol) {
  AbelianCycleResult out;
  out.spectrum = characteristic_roots(p, tol);
  out.eta = leakage_overlap(p, tol);
  const double theta_ref = std::abs(wrap_angle(p.theta));
  out.phi_adiabatic_ref = -adiabatic_phase_limit(theta_ref).extrapolated;
  out.phi_total = p.cyclic() ? total_phase(p, tol) : out.phi_adiabatic_ref;
  return out;
}

std::vector<Fig1Row> sweep_fig1(std::span<const double> thetas, std::span<const double> ratios,
                                int threads, double omega) {
  const std::size_t nt = thetas.size();
  const std::size_t ng = ratios.size();

  std::vector<double> limits(nt);
  parallel_for(nt, threads, [&](std::size_t i) {
    limits[i] = -adiabatic_phase_limit(std::abs(wrap_angle(thetas[i]))).extrapolated;
  });

  std::vector<Fig1Row> rows(nt * ng);
  parallel_for(nt * ng, threads, [&](std::size_t k) {
    const std::size_t i = k / ng;
    const std::size_t j = k % ng;
    Fig1Row& row = rows[k];
    row.theta = thetas[i];
    row.ratio = ratios[j];
    row.phi_adiabatic_ref = limits[i];
    const AbelianParams p{omega, thetas[i], ratios[j]};
    try {
      characteristic_roots(p);
      row.eta = leakage_overlap(p);
      row.phi_total = p.cyclic() ? total_phase(p) : limits[i];
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDegenerateMiddleRoot && e.kind() != ErrorKind::kComplexRootsDetected) throw;
      row.degenerate = true;
      row.eta = std::numeric_limits<double>::quiet_NaN();
      row.phi_total = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return rows;
}

}  // namespace holo
