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

#include "holo/nonabelian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "holo/errors.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

void require_cyclic(const NonAbelianParams& p) {
  validate(p);
  if (!p.cyclic()) throw Error(ErrorKind::kNonCyclic, "gamma/omega = 0 has no period");
}

}  // namespace

CMatrix gauge_rotation(double gamma, double t) {
  using namespace level4;
  const double c = std::cos(gamma * t);
  const double s = std::sin(gamma * t);
  CMatrix u = CMatrix::identity(kDim);
  u(kG1, kG1) = c;
  u(kG1, kG2) = -s;
  u(kG2, kG1) = s;
  u(kG2, kG2) = c;
  return u;
}

std::array<double, 4> eigenvalues_closed_form(const NonAbelianParams& p) {
  validate(p);
  const double g2 = p.ratio * p.ratio;
  const double omega_bar = p.omega * std::sqrt(1.0 + g2);
  const double cos_bar = std::cos(p.theta) / (1.0 + g2);
  const double eps = std::min(1.0, 4.0 * g2 * cos_bar * cos_bar);
  const double root = std::sqrt(1.0 - eps);
  // 1 - sqrt(1 - eps) written without cancellation for small g.
  const double lower = eps / (1.0 + root);
  const double upper = 1.0 + root;
  const double e1 = std::sqrt(0.5) * omega_bar * std::sqrt(lower);
  const double e3 = std::sqrt(0.5) * omega_bar * std::sqrt(upper);
  return {e1, -e1, e3, -e3};
}

GaugedSystem gauged_hamiltonian(const NonAbelianParams& p) {
  using namespace level4;
  validate(p);
  GaugedSystem gs;
  const double s = p.omega * std::sin(p.theta);
  const double c = p.omega * std::cos(p.theta);
  const double gamma = p.gamma();
  gs.h_g(kG1, kE) = s;
  gs.h_g(kE, kG1) = s;
  gs.h_g(kG3, kE) = c;
  gs.h_g(kE, kG3) = c;
  gs.h_g(kG1, kG2) = cplx(0.0, gamma);
  gs.h_g(kG2, kG1) = cplx(0.0, -gamma);

  const double g2 = p.ratio * p.ratio;
  gs.omega_bar = p.omega * std::sqrt(1.0 + g2);
  gs.cos_theta_bar = std::cos(p.theta) / (1.0 + g2);
  gs.energies = eigenvalues_closed_form(p);
  gs.eigen = hermitian_eigensystem(gs.h_g);
  return gs;
}

CMatrix exact_propagator(const NonAbelianParams& p, double t) {
  const GaugedSystem gs = gauged_hamiltonian(p);
  return gauge_rotation(p.gamma(), t) * unitary_exp(gs.h_g, t);
}

CMatrix cyclic_operator(const NonAbelianParams& p) {
  require_cyclic(p);
  return unitary_exp(gauged_hamiltonian(p).h_g, p.period());
}

CMatrix cyclic_operator_spectral(const NonAbelianParams& p) {
  require_cyclic(p);
  const GaugedSystem gs = gauged_hamiltonian(p);
  std::array<double, 4> e = gs.energies;
  std::sort(e.begin(), e.end());
  const double period = p.period();
  CMatrix u(level4::kDim);
  for (int n = 0; n < level4::kDim; ++n) {
    const StateVector v = gs.eigen.vector(n);
    u += std::polar(1.0, -e[n] * period) * outer(v, v);
  }
  return u;
}

CMatrix holonomy_ideal(double theta) {
  const double a = kTwoPi * std::cos(theta);
  const double c = std::cos(a);
  const double s = std::sin(a);
  // cos(a) 1 + i sin(a) D_y with D_y = [[0, -i], [i, 0]]
  return CMatrix::from_rows({{c, s}, {-s, c}});
}

std::pair<StateVector, StateVector> dark_dynamical_states(const NonAbelianParams& p, double t) {
  using namespace level4;
  validate(p);
  const double gt = p.gamma() * t;
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const double cg = std::cos(gt);
  const double sg = std::sin(gt);
  const double norm = std::sqrt(0.5);

  StateVector psi1(kDim);
  psi1[kG1] = cplx(ct * cg, sg);
  psi1[kG2] = cplx(ct * sg, -cg);
  psi1[kG3] = -st;
  psi1 *= norm * std::polar(1.0, -gt * ct);

  StateVector psi2(kDim);
  psi2[kG1] = cplx(ct * cg, -sg);
  psi2[kG2] = cplx(ct * sg, cg);
  psi2[kG3] = -st;
  psi2 *= norm * std::polar(1.0, gt * ct);
  return {psi1, psi2};
}

CMatrix project_to_dark(const CMatrix& u, double theta) {
  const auto [d1, d2] = dark_states_nonabelian(theta);
  const StateVector basis[2] = {d1, d2};
  CMatrix m(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = inner(basis[i], u * basis[j]);
  return m;
}

CMatrix restricted_holonomy(const NonAbelianParams& p) {
  require_cyclic(p);
  const auto [a0, b0] = dark_dynamical_states(p, 0.0);
  const auto [a1, b1] = dark_dynamical_states(p, p.period());
  return project_to_dark(outer(a1, a0) + outer(b1, b0), p.theta);
}

GateReport projected_gate(const NonAbelianParams& p) {
  const CMatrix uc = cyclic_operator(p);
  GateReport r;
  r.projected = project_to_dark(uc, p.theta);
  r.ideal = holonomy_ideal(p.theta);
  const CMatrix& m = r.projected;
  for (int j = 0; j < 2; ++j) r.leakage_by_state[j] = std::norm(m(0, j)) + std::norm(m(1, j));
  r.pop_d1 = std::norm(m(0, 1));
  r.pop_d2 = std::norm(m(1, 1));
  r.fidelity = std::abs((m.adjoint() * r.ideal).trace()) / 2.0;
  return r;
}

double leakage_projection(const NonAbelianParams& p, const StateVector& psi0) {
  const StateVector out = cyclic_operator(p) * psi0;
  const auto [d1, d2] = dark_states_nonabelian(p.theta);
  return std::norm(inner(d1, out)) + std::norm(inner(d2, out));
}

std::vector<double> fig2_theta_grid(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "theta grid needs at least one point");
  std::vector<double> thetas(n);
  for (int k = 0; k < n; ++k) {
    const double x = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
    thetas[k] = std::acos(1.0 - x);
  }
  return thetas;
}

std::vector<Fig2Row> sweep_fig2(std::span<const double> ratios, std::span<const double> thetas,
                                int threads, double omega) {
  std::vector<double> sorted(thetas.begin(), thetas.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](double a, double b) { return 1.0 - std::cos(a) < 1.0 - std::cos(b); });
  const std::size_t nt = sorted.size();

  std::vector<Fig2Row> rows(ratios.size() * nt);
  parallel_for(rows.size(), threads, [&](std::size_t k) {
    Fig2Row& row = rows[k];
    const double theta = sorted[k % nt];
    row.ratio = ratios[k / nt];
    row.one_minus_cos_theta = 1.0 - std::cos(theta);
    try {
      const GateReport gate = projected_gate(NonAbelianParams{omega, theta, row.ratio});
      row.pop_d1 = gate.pop_d1;
      row.pop_d2 = gate.pop_d2;
      row.eta = gate.leakage_by_state[1];
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNonCyclic) throw;
      row.flagged = true;
      row.pop_d1 = row.pop_d2 = row.eta = std::numeric_limits<double>::quiet_NaN();
    }
  });
  return rows;
}

}  // namespace holo
