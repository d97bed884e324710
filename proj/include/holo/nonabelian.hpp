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

// Exact treatment of the non-abelian loop through the gauge rotation
// U_g(t) = exp(-gamma t (sigma_12 - sigma_21)), which makes the Hamiltonian
// time independent.

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "holo/models.hpp"

namespace holo {

struct GaugedSystem {
  CMatrix h_g{4};
  double omega_bar = 0.0;      // omega sqrt(1 + g^2)
  double cos_theta_bar = 0.0;  // cos(theta) / (1 + g^2)
  std::array<double, 4> energies{};  // closed form (E1, E2, E3, E4), E2 = -E1, E4 = -E3
  EigenSystem eigen;                 // numerical, ascending
};

/// Rotation by gamma t in the (g1, g2) plane, identity on (g3, e).
CMatrix gauge_rotation(double gamma, double t);

GaugedSystem gauged_hamiltonian(const NonAbelianParams& p);

/// (E1, E2, E3, E4) with |E1| <= |E3|.
std::array<double, 4> eigenvalues_closed_form(const NonAbelianParams& p);

/// U(t) = U_g(t) exp(-i H_g t).
CMatrix exact_propagator(const NonAbelianParams& p, double t);

/// U_C(T) = exp(-i H_g T), using U_g(T) = 1. Throws kNonCyclic for g = 0.
CMatrix cyclic_operator(const NonAbelianParams& p);
/// sum_n e^{-i E_n T} |Psi_n(0)><Psi_n(0)| with closed-form E_n and the
/// numerical eigenvectors of H_g.
CMatrix cyclic_operator_spectral(const NonAbelianParams& p);

/// u_C = exp(i 2 pi cos(theta) D_y) in the (D1, D2) basis, where D_y is the
/// sigma_y-shaped matrix [[0, -i], [i, 0]].
CMatrix holonomy_ideal(double theta);

/// The two zero-energy dynamical bases, phase factors e^{-+ i gamma t cos(theta)} included:
///   |Psi_1(t)> ~ U_g(t)(|D1> - i|D2>)/sqrt2,  |Psi_2(t)> ~ U_g(t)(|D1> + i|D2>)/sqrt2.
std::pair<StateVector, StateVector> dark_dynamical_states(const NonAbelianParams& p, double t);

/// M_ij = <D_i|U|D_j> for a 4x4 operator U.
CMatrix project_to_dark(const CMatrix& u, double theta);

/// Restricted evolution sum_n |Psi_n(T)><Psi_n(0)| projected on (D1, D2).
CMatrix restricted_holonomy(const NonAbelianParams& p);

struct GateReport {
  CMatrix projected{2};                // M
  std::array<double, 2> leakage_by_state{};  // sum_i |<D_i|U|D_j>|^2 for initial D_j
  double fidelity = 0.0;               // |Tr(M^dagger u_C)| / 2
  double pop_d1 = 0.0;                 // |<D1|U|D2>|^2
  double pop_d2 = 0.0;                 // |<D2|U|D2>|^2
  CMatrix ideal{2};                    // u_C
};

/// Throws kNonCyclic for g = 0.
GateReport projected_gate(const NonAbelianParams& p);

/// sum_i |<D_i|U_C(T)|psi0>|^2 for an arbitrary 4-level initial state.
double leakage_projection(const NonAbelianParams& p, const StateVector& psi0);

struct Fig2Row {
  double ratio = 0.0;
  double one_minus_cos_theta = 0.0;
  double pop_d1 = 0.0;
  double pop_d2 = 0.0;
  double eta = 0.0;
  bool flagged = false;
};

/// theta values with 1 - cos(theta) evenly spaced over [0, 1].
std::vector<double> fig2_theta_grid(int n);

/// One block per ratio (in the given order), rows ascending in 1 - cos(theta).
std::vector<Fig2Row> sweep_fig2(std::span<const double> ratios, std::span<const double> thetas,
                                int threads = 1, double omega = 1.0);

}  // namespace holo
