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

// Exact treatment of the abelian loop through its dynamical invariant
// I(t) = H(t) + gamma sigma_33: characteristic roots, recurrent basis,
// closed-form propagator, leakage overlap and the cyclic (Lewis-Riesenfeld)
// phase.

#include <array>
#include <span>
#include <vector>

#include "holo/models.hpp"

namespace holo {

/// Roots of x^3 - g x^2 - x + g sin^2(theta) = 0 and the invariant
/// eigenvalues E_i = omega x_i.
struct InvariantSpectrum {
  double x_minus = 0.0;
  double x0 = 0.0;
  double x_plus = 0.0;
  double omega = 1.0;

  std::array<double, 3> roots() const { return {x_minus, x0, x_plus}; }
  std::array<double, 3> energies() const { return {omega * x_minus, omega * x0, omega * x_plus}; }
  double e0() const { return omega * x0; }
};

/// Characteristic cubic of I(0)/omega.
MonicRealCubic characteristic_cubic(const AbelianParams& p);

/// Requires g in [0, 1]. Throws kDegenerateMiddleRoot if x0 comes within
/// tol.degenerate_root of either outer root.
InvariantSpectrum characteristic_roots(const AbelianParams& p, const Tolerances& tol = kDefaultTolerances);

/// |psi_0(t)> = e^{i gamma t sigma_33}|phi_0>, with |phi_0> the middle
/// eigenvector of I(0). Exactly periodic in t with period T.
StateVector recurrent_basis(const AbelianParams& p, double t, const Tolerances& tol = kDefaultTolerances);

/// U(t) = e^{i gamma t sigma_33} exp(-i (H_0 + gamma sigma_33) t).
CMatrix closed_form_propagator(const AbelianParams& p, double t);

/// eta = |<psi_0(0)|D(0)>|^2.
double leakage_overlap(const AbelianParams& p, const Tolerances& tol = kDefaultTolerances);
/// The same overlap evaluated at t = T.
double leakage_overlap_at_period(const AbelianParams& p, const Tolerances& tol = kDefaultTolerances);

/// Unwrapped cyclic phase Phi = -2 pi x0 / g: the argument of
/// <psi_0(0)|Psi(T)> for |Psi(0)> = |psi_0(0)>, accumulated continuously
/// over the period. Throws kNonCyclic for g = 0.
double total_phase(const AbelianParams& p, const Tolerances& tol = kDefaultTolerances);

struct AdiabaticLimit {
  double theta = 0.0;
  std::array<double, 3> ratios{};   // g samples
  std::array<double, 3> samples{};  // 2 pi x0(g) / g
  double extrapolated = 0.0;        // limit g -> 0
  double ref_two_pi = 0.0;          // 2 pi sin^2(theta)
  double ref_four_pi = 0.0;         // 4 pi sin^2(theta)

  /// The reference (2 pi or 4 pi) closest to the extrapolated value within
  /// `tol`, or 0 if neither matches.
  int matching_factor(double tol = 1e-6) const;
};

/// lim_{g->0} 2 pi x0(g) / g by Richardson extrapolation over
/// g = 1e-2, 5e-3, 2.5e-3 (the ratio is even in g, so the g^2 and g^4 terms
/// are eliminated). Requires theta in [0, pi].
AdiabaticLimit adiabatic_phase_limit(double theta);

struct AbelianCycleResult {
  double eta = 0.0;
  double phi_total = 0.0;          // unwrapped, return-amplitude sign
  double phi_adiabatic_ref = 0.0;  // g -> 0 limit of phi_total, same sign convention
  InvariantSpectrum spectrum;
};

/// eta and Phi at one point; for g = 0, phi_total is the adiabatic limit.
AbelianCycleResult evaluate_cycle(const AbelianParams& p, const Tolerances& tol = kDefaultTolerances);

struct Fig1Row {
  double theta = 0.0;
  double ratio = 0.0;
  double eta = 0.0;
  double phi_total = 0.0;
  double phi_adiabatic_ref = 0.0;
  bool degenerate = false;  // value columns are NaN when set
};

/// Rows in (theta index, g index) order, computed on up to `threads` workers.
/// Degenerate points are flagged, not thrown.
std::vector<Fig1Row> sweep_fig1(std::span<const double> thetas, std::span<const double> ratios,
                                int threads = 1, double omega = 1.0);

}  // namespace holo
