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

#include "holo/app/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "holo/abelian.hpp"
#include "holo/app/format.hpp"
#include "holo/app/grids.hpp"
#include "holo/errors.hpp"
#include "holo/experiments.hpp"
#include "holo/kernels.hpp"
#include "holo/nonabelian.hpp"
#include "holo/oracle.hpp"
#include "holo/parallel.hpp"

namespace holo::app {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CheckResult check(std::string name, double measured, double tolerance, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = measured <= tolerance;  // false for NaN
  c.detail = std::move(detail);
  return c;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    m = std::max(m, x);
  }
  return m;
}

std::vector<double> sorted_eigenvalues(const CMatrix& h) {
  const EigenSystem es = hermitian_eigensystem(h);
  return std::vector<double>(es.values.begin(), es.values.begin() + h.dim());
}

// 5 x 5 grid shared by the oracle comparisons.
const std::vector<double>& oracle_thetas() {
  static const std::vector<double> v = interior(0.0, kPi / 2, 5);
  return v;
}
const std::vector<double>& oracle_ratios() {
  static const std::vector<double> v = {0.1, 0.3, 0.5, 0.7, 0.9};
  return v;
}

template <class Fn>
double max_over_oracle_grid(int threads, Fn&& fn) {
  const auto& th = oracle_thetas();
  const auto& gs = oracle_ratios();
  std::vector<double> out(th.size() * gs.size());
  parallel_for(out.size(), threads, [&](std::size_t k) { out[k] = fn(th[k / gs.size()], gs[k % gs.size()]); });
  return max_of(out);
}

PropagatorOptions lenient() {
  PropagatorOptions o;
  o.estimate_error = false;
  o.strict = false;
  return o;
}

CheckResult check_kernels() {
  const kernels::Backend current = kernels::active().backend;
  if (!kernels::available(kernels::Backend::kAvx2)) {
    return check("kernel_backends_bit_identical", 0.0, 0.0, "avx2 unavailable, scalar only");
  }
  const AbelianParams p{1.0, 0.7, 0.3};
  const HamiltonianFn h = [&](double t) { return h_abelian(p, t); };
  kernels::select(kernels::Backend::kScalar);
  const CMatrix a = numeric_propagator(h, p.period(), 2000, lenient()).u;
  kernels::select(kernels::Backend::kAvx2);
  const CMatrix b = numeric_propagator(h, p.period(), 2000, lenient()).u;
  kernels::select(current);
  return check("kernel_backends_bit_identical", max_abs_diff(a, b), 0.0, "scalar vs avx2 propagator");
}

CheckResult check_cubic_vs_eigen(int threads) {
  const auto thetas = interior(0.0, kPi / 2, 20);
  const auto ratios = linspace(0.0, 0.95, 20);
  std::vector<double> dev(thetas.size() * ratios.size());
  parallel_for(dev.size(), threads, [&](std::size_t k) {
    const AbelianParams p{1.0, thetas[k / ratios.size()], ratios[k % ratios.size()]};
    const auto roots = characteristic_roots(p).energies();
    const auto eig = sorted_eigenvalues(invariant_abelian(p, 0.0));
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(roots[i] - eig[i]));
    dev[k] = d;
  });
  double anchor = 0.0;
  const auto r0 = characteristic_roots(AbelianParams{1.0, kPi / 4, 0.0}).roots();
  const auto r1 = characteristic_roots(AbelianParams{1.0, kPi / 2, 0.5}).roots();
  const std::array<double, 3> e0 = {-1.0, 0.0, 1.0};
  const std::array<double, 3> e1 = {-1.0, 0.5, 1.0};
  for (int i = 0; i < 3; ++i) anchor = std::max({anchor, std::abs(r0[i] - e0[i]), std::abs(r1[i] - e1[i])});
  return check("abelian_roots_vs_invariant_spectrum", std::max(max_of(dev), anchor), 1e-9,
               "20x20 grid plus anchors {-1,0,1} and {-1,0.5,1}");
}

CheckResult check_invariant_equation(int threads) {
  const double delta = 1e-3;
  const double worst = max_over_oracle_grid(threads, [&](double theta, double g) {
    const AbelianParams p{1.0, theta, g};
    std::mt19937_64 rng(static_cast<std::uint64_t>(theta * 1e6) ^ static_cast<std::uint64_t>(g * 1e6));
    std::uniform_real_distribution<double> u(0.0, p.period());
    double m = 0.0;
    for (int s = 0; s < 20; ++s) {
      const double t = u(rng);
      const CMatrix di = (1.0 / (12.0 * delta)) * (invariant_abelian(p, t - 2 * delta) -
                                                   8.0 * invariant_abelian(p, t - delta) +
                                                   8.0 * invariant_abelian(p, t + delta) -
                                                   invariant_abelian(p, t + 2 * delta));
      const CMatrix i = invariant_abelian(p, t);
      const CMatrix r = di - cplx(0.0, 1.0) * commutator(i, h_abelian(p, t));
      m = std::max(m, spectral_norm(r));
    }
    return m;
  });
  return check("abelian_invariant_equation", worst, 1e-9, "dI/dt - i[I, H] at 20 random times per point");
}

CheckResult check_abelian_propagator(int steps, int threads) {
  const double worst = max_over_oracle_grid(threads, [&](double theta, double g) {
    const AbelianParams p{1.0, theta, g};
    const auto est = numeric_propagator([&](double t) { return h_abelian(p, t); }, p.period(), steps, lenient());
    if (est.failed) return kInf;
    return spectral_norm(est.u - closed_form_propagator(p, p.period()));
  });
  std::ostringstream d;
  d << "5x5 grid, " << steps << " RK4 steps per period";
  return check("abelian_propagator_vs_oracle", worst, 1e-6, d.str());
}

CheckResult check_cyclic_phase(int steps, int threads) {
  const double worst = max_over_oracle_grid(threads, [&](double theta, double g) {
    const AbelianParams p{1.0, theta, g};
    try {
      return std::abs(total_phase(p) - cyclic_phase_numeric(p, CyclicPhaseOptions{steps, true}));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNormDriftExceeded) throw;
      return kInf;
    }
  });
  return check("cyclic_phase_vs_oracle", worst, 1e-5, "unwrapped, 5x5 grid");
}

CheckResult check_nonabelian_spectrum(int threads) {
  const auto thetas = linspace(0.0, kPi / 2, 20);
  const auto ratios = linspace(0.0, 1.0, 20);
  std::vector<double> dev(thetas.size() * ratios.size());
  parallel_for(dev.size(), threads, [&](std::size_t k) {
    const NonAbelianParams p{1.0, thetas[k / ratios.size()], ratios[k % ratios.size()]};
    const GaugedSystem gs = gauged_hamiltonian(p);
    std::array<double, 4> e = gs.energies;
    std::sort(e.begin(), e.end());
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(e[i] - gs.eigen.values[i]));
    dev[k] = d;
  });
  return check("nonabelian_spectrum_closed_form", max_of(dev), 1e-9, "20x20 grid");
}

CheckResult check_nonabelian_anchors() {
  double worst = 0.0;
  for (double g : {0.2, 0.5, 0.8}) {
    const auto e0 = eigenvalues_closed_form(NonAbelianParams{1.0, 0.0, g});
    worst = std::max({worst, std::abs(e0[0] - g), std::abs(e0[1] + g), std::abs(e0[2] - 1.0), std::abs(e0[3] + 1.0)});
    const auto e1 = eigenvalues_closed_form(NonAbelianParams{1.0, kPi / 2, g});
    const double bar = std::sqrt(1.0 + g * g);
    worst = std::max({worst, std::abs(e1[0]), std::abs(e1[1]), std::abs(e1[2] - bar), std::abs(e1[3] + bar)});
  }
  return check("nonabelian_spectrum_anchors", worst, 1e-12, "theta = 0 and theta = pi/2");
}

CheckResult check_gauge_covariance() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < 50; ++s) {
    const NonAbelianParams p{1.0, kPi * u01(rng), 0.05 + 0.95 * u01(rng)};
    const double t = p.period() * u01(rng);
    const double gamma = p.gamma();
    const CMatrix ug = gauge_rotation(gamma, t);
    CMatrix dug(4);
    const double c = std::cos(gamma * t), sn = std::sin(gamma * t);
    dug(level4::kG1, level4::kG1) = -gamma * sn;
    dug(level4::kG1, level4::kG2) = -gamma * c;
    dug(level4::kG2, level4::kG1) = gamma * c;
    dug(level4::kG2, level4::kG2) = -gamma * sn;
    const CMatrix r = ug.adjoint() * h_nonabelian(p, t) * ug - cplx(0.0, 1.0) * (ug.adjoint() * dug) -
                      gauged_hamiltonian(p).h_g;
    worst = std::max(worst, max_abs_entry(r));
  }
  return check("gauge_covariance", worst, 1e-9, "50 random (theta, g, t)");
}

CheckResult check_nonabelian_propagator(int steps, int threads) {
  const double worst = max_over_oracle_grid(threads, [&](double theta, double g) {
    const NonAbelianParams p{1.0, theta, g};
    const auto est = numeric_propagator([&](double t) { return h_nonabelian(p, t); }, p.period(), steps, lenient());
    if (est.failed) return kInf;
    return spectral_norm(est.u - exact_propagator(p, p.period()));
  });
  std::ostringstream d;
  d << "5x5 grid, " << steps << " RK4 steps per period";
  return check("nonabelian_propagator_vs_oracle", worst, 1e-6, d.str());
}

CheckResult check_unitarity(int threads) {
  const double worst = max_over_oracle_grid(threads, [&](double theta, double g) {
    const AbelianParams a{1.0, theta, g};
    const NonAbelianParams n{1.0, theta, g};
    return std::max({unitarity_defect(closed_form_propagator(a, a.period())),
                     unitarity_defect(closed_form_propagator(a, 0.37 * a.period())),
                     unitarity_defect(exact_propagator(n, 0.37 * n.period())), unitarity_defect(cyclic_operator(n)),
                     unitarity_defect(cyclic_operator_spectral(n))});
  });
  return check("propagator_unitarity", worst, 1e-10, "closed-form propagators on the 5x5 grid");
}

CheckResult check_spectral_cyclic_operator(int threads) {
  const double worst = max_over_oracle_grid(threads, [&](double theta, double g) {
    const NonAbelianParams p{1.0, theta, g};
    return spectral_norm(cyclic_operator(p) - cyclic_operator_spectral(p));
  });
  return check("cyclic_operator_spectral_form", worst, 1e-9, "gauged exponential vs spectral sum");
}

CheckResult check_holonomy_recovery() {
  double worst = 0.0;
  bool ordered = true;
  std::ostringstream d;
  for (double theta : {0.3, 0.7, 1.1, 1.5}) {
    const double slow = spectral_norm(projected_gate(NonAbelianParams{1.0, theta, 0.01}).projected - holonomy_ideal(theta));
    const double fast = spectral_norm(projected_gate(NonAbelianParams{1.0, theta, 0.5}).projected - holonomy_ideal(theta));
    worst = std::max(worst, slow);
    ordered = ordered && slow < fast;
    d << "theta=" << theta << ": " << format_number(slow) << " < " << format_number(fast) << "; ";
  }
  return check("holonomy_recovery", ordered ? worst : kInf, 0.05, d.str());
}

std::vector<CheckResult> check_fig2(int threads) {
  const auto thetas = fig2_theta_grid(200);
  const std::vector<double> slow = {0.01};
  const auto rows = sweep_fig2(slow, thetas, threads);
  double sup = 0.0;
  double min_fid = 1.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double cos_t = 1.0 - rows[k].one_minus_cos_theta;
    const double pred = std::pow(std::sin(kTwoPi * cos_t), 2);
    sup = std::max(sup, std::abs(rows[k].pop_d1 - pred));
  }
  for (double theta : thetas) min_fid = std::min(min_fid, projected_gate(NonAbelianParams{1.0, theta, 0.01}).fidelity);

  const std::vector<double> all = {0.01, 0.2, 0.5, 0.8};
  double sum_dev = 0.0;
  for (const auto& r : sweep_fig2(all, thetas, threads)) sum_dev = std::max(sum_dev, std::abs(r.pop_d1 + r.pop_d2 - r.eta));

  return {check("fig2_adiabatic_population", sup, 0.02, "g = 0.01, sup |pop_d1 - sin^2(2 pi cos theta)|"),
          check("fig2_gate_fidelity", 1.0 - min_fid, 0.01, "g = 0.01, 1 - min fidelity vs u_C"),
          check("fig2_population_sum", sum_dev, 1e-12, "|pop_d1 + pop_d2 - eta| over all blocks")};
}

CheckResult check_nonabelian_adiabatic_energy() {
  double worst = 0.0;
  const double g = 1e-3;
  for (double theta : {0.3, 0.7, 1.1, 1.5}) {
    const auto e = eigenvalues_closed_form(NonAbelianParams{1.0, theta, g});
    worst = std::max(worst, std::abs(e[0] / g - std::cos(theta)));
  }
  return check("nonabelian_adiabatic_energy", worst, 1e-4, "|E1/gamma - cos theta| at g = 1e-3");
}

CheckResult check_leakage_anchors() {
  double worst = 0.0;
  for (double g : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    worst = std::max(worst, std::abs(1.0 - leakage_overlap(AbelianParams{1.0, 0.0, g})));
    worst = std::max(worst, std::abs(1.0 - leakage_overlap(AbelianParams{1.0, 1e-6, g})));
    worst = std::max(worst, std::abs(1.0 - leakage_overlap(AbelianParams{1.0, kPi / 2, g})));
  }
  for (double theta : interior(0.0, kPi / 2, 9)) {
    worst = std::max(worst, std::abs(1.0 - leakage_overlap(AbelianParams{1.0, theta, 0.0})));
  }
  return check("leakage_anchors", worst, 1e-9, "theta -> 0, theta = pi/2, g = 0");
}

std::vector<CheckResult> check_adiabatic_limit(std::vector<InfoLine>& info) {
  const double g = 1e-3;
  double small_g = 0.0;
  double extrap = 0.0;
  for (double theta : {0.3, kPi / 4, 1.1, 1.5}) {
    const double s = std::pow(std::sin(theta), 2);
    const double c2 = 1.0 - s;
    const double x0 = std::abs(total_phase(AbelianParams{1.0, theta, g})) * g / kTwoPi;
    small_g = std::max(small_g, std::abs((x0 - g * s) / (g * g * g) + s * s * c2));

    const AdiabaticLimit lim = adiabatic_phase_limit(theta);
    const double fine = 1e-4;
    const double direct = kTwoPi * characteristic_roots(AbelianParams{1.0, theta, fine}).x0 / fine;
    extrap = std::max(extrap, std::abs(lim.extrapolated - direct));

    std::ostringstream t;
    t << "theta=" << format_number(theta) << " extrapolated=" << format_number(lim.extrapolated)
      << " 2pi*sin^2=" << format_number(lim.ref_two_pi) << " 4pi*sin^2=" << format_number(lim.ref_four_pi)
      << " closest=";
    const int f = lim.matching_factor();
    t << (f == 0 ? "neither" : (f == 2 ? "2pi" : "4pi"));
    info.push_back({"adiabatic_limit_factor", t.str()});
  }
  return {check("abelian_small_g_expansion", small_g, 1e-4, "(x0 - g sin^2)/g^3 + sin^4 cos^2 at g = 1e-3"),
          check("abelian_adiabatic_extrapolation", extrap, 1e-6, "Richardson limit vs 2 pi x0(g)/g at g = 1e-4")};
}

std::vector<CheckResult> check_preparation(int steps, int threads) {
  struct Case {
    PrepSystem system;
    RampShape shape;
    double duration;
    bool matching;
  };
  std::vector<Case> cases;
  for (PrepSystem sys : {PrepSystem::kAbelian, PrepSystem::kNonAbelian})
    for (RampShape shape : {RampShape::kLinear, RampShape::kSmoothstep})
      for (double d : {1.0, 10.0, 100.0})
        for (bool m : {true, false}) cases.push_back({sys, shape, d, m});

  PrepOptions opts;
  opts.steps = steps;
  opts.strict = false;
  std::vector<PrepReport> reports(cases.size());
  parallel_for(cases.size(), threads, [&](std::size_t k) {
    const Case& c = cases[k];
    reports[k] = prepare(c.system, RampProfile{c.shape, 0.0, kPi / 3, c.duration}, c.matching, opts);
  });

  double exact = 0.0;
  double drift = 0.0;
  bool trend = true;
  std::ostringstream trend_detail;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    if (cases[k].matching) {
      exact = std::max(exact, reports[k].final_infidelity);
      drift = std::max(drift, reports[k].norm_drift);
    }
  }
  for (std::size_t k = 0; k < cases.size(); ++k) {
    if (cases[k].matching || cases[k].duration != 1.0) continue;
    // The case with the same system and shape at duration 100 sits 4 entries later.
    const double short_ramp = reports[k].final_infidelity;
    const double long_ramp = reports[k + 4].final_infidelity;
    trend = trend && short_ramp > long_ramp;
    trend_detail << to_string(cases[k].system) << "/" << to_string(cases[k].shape) << ": "
                 << format_number(short_ramp) << " > " << format_number(long_ramp) << "; ";
  }

  // Step halving at coarse resolution, where the RK4 error is far above roundoff.
  double worst_ratio_dev = 0.0;
  std::ostringstream conv;
  for (PrepSystem sys : {PrepSystem::kAbelian, PrepSystem::kNonAbelian}) {
    for (double d : {1.0, 10.0, 100.0}) {
      const RampProfile ramp{RampShape::kLinear, 0.0, kPi / 3, d};
      PrepOptions coarse;
      coarse.strict = false;
      coarse.steps = static_cast<int>(25 * d);
      const double e1 = prepare(sys, ramp, true, coarse).state_error;
      coarse.steps *= 2;
      const double e2 = prepare(sys, ramp, true, coarse).state_error;
      const double ratio = e1 / e2;
      worst_ratio_dev = std::max(worst_ratio_dev, std::abs(std::log2(ratio) - 4.0));
      conv << to_string(sys) << " t1=" << format_number(d) << ": " << format_number(ratio) << "; ";
    }
  }

  std::ostringstream exact_detail;
  exact_detail << "durations 1, 10, 100, both systems and shapes, max norm drift " << format_number(drift);
  return {check("matching_preparation_exact", exact, 1e-8, exact_detail.str()),
          check("matching_step_halving", worst_ratio_dev, 1.0, "|log2(error ratio) - 4|: " + conv.str()),
          check("no_matching_adiabatic_trend", trend ? 0.0 : kInf, 0.0, trend_detail.str())};
}

CheckResult check_identity() {
  double worst = 0.0;
  for (PrepSystem sys : {PrepSystem::kAbelian, PrepSystem::kNonAbelian})
    for (RampShape shape : {RampShape::kLinear, RampShape::kSmoothstep})
      for (double d : {1.0, 10.0})
        worst = std::max(worst, invariant_identity_check(RampProfile{shape, 0.0, kPi / 3, d}, 50, sys));
  return check("matching_invariant_identity", worst, 1e-8, "||dH/dt - i[H, H + H_ad]||");
}

std::vector<CheckResult> check_two_qubit() {
  const double ratio = 0.2;
  TwoQubitDriveParams d{1.0, 1.0, 0.3, -0.2};
  const double kappa = std::hypot(d.amp1 * d.amp1, d.amp2 * d.amp2);
  const TwoQubitGateReport r = two_qubit_gate(d, ratio * kappa);
  const AbelianParams ref{1.0, kPi / 4, ratio};
  const double dev = std::max(std::abs(r.phase_on_11 - total_phase(ref)),
                              std::abs(r.leakage_from_11 - (1.0 - leakage_overlap(ref))));

  double gate_dev = unitarity_defect(r.gate);
  for (int i = 0; i < 3; ++i) gate_dev = std::max(gate_dev, std::abs(r.gate(i, i) - 1.0));

  // Spectrum of H_eff + gamma on |g3g3> against kappa times the invariant roots.
  const TwoQubitEffective eff = two_qubit_effective(d);
  CMatrix inv = eff.h;
  inv(level3::kG3, level3::kG3) += ratio * kappa;
  const auto eig = sorted_eigenvalues(inv);
  const auto roots = characteristic_roots(AbelianParams{kappa, std::abs(eff.params.theta), ratio}).energies();
  double spec_dev = 0.0;
  for (int i = 0; i < 3; ++i) spec_dev = std::max(spec_dev, std::abs(eig[i] - roots[i]));

  return {check("two_qubit_isomorphism", dev, 1e-10, "|Omega1| = |Omega2|, gamma/kappa = 0.2 vs abelian (pi/4, 0.2)"),
          check("two_qubit_gate_assembly", gate_dev, 1e-10, "unitarity and exact unit entries"),
          check("two_qubit_invariant_spectrum", spec_dev, 1e-9, "reduced H + gamma sigma_33 vs kappa * roots")};
}

CheckResult check_dark_state_oracle(int steps) {
  const AbelianParams p{1.0, kPi / 4, 0.01};
  IntegrationSpec spec;
  spec.t_end = p.period();
  // The period is 100x longer than at g = 1, so keep the step size of the grid runs.
  spec.steps = 10 * steps;
  spec.sample_stride = 0;
  spec.strict = false;
  const StateVector d0 = dark_state_abelian(p.theta, 0.0);
  const Trajectory traj = integrate([&](double t) { return h_abelian(p, t); }, d0, spec);
  const StateVector target = std::polar(1.0, total_phase(p)) * d0;
  const double fid = std::norm(inner(target, traj.final_state()));
  return check("dark_state_return_fidelity", traj.failed ? kInf : 1.0 - fid, 1e-3,
               "g = 0.01, theta = pi/4, oracle over one period");
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport run_verification(const VerificationOptions& opts) {
  VerificationReport rep;
  auto add = [&](CheckResult c) { rep.checks.push_back(std::move(c)); };
  auto add_all = [&](std::vector<CheckResult> cs) {
    for (auto& c : cs) rep.checks.push_back(std::move(c));
  };
  const int threads = opts.threads;
  add(check_kernels());
  add(check_cubic_vs_eigen(threads));
  add(check_invariant_equation(threads));
  add(check_abelian_propagator(opts.steps, threads));
  add(check_cyclic_phase(opts.steps, threads));
  add(check_leakage_anchors());
  add_all(check_adiabatic_limit(rep.info));
  add(check_dark_state_oracle(opts.steps));
  add(check_nonabelian_spectrum(threads));
  add(check_nonabelian_anchors());
  add(check_gauge_covariance());
  add(check_nonabelian_propagator(opts.steps, threads));
  add(check_unitarity(threads));
  add(check_spectral_cyclic_operator(threads));
  add(check_holonomy_recovery());
  add(check_nonabelian_adiabatic_energy());
  add_all(check_fig2(threads));
  add_all(check_preparation(opts.steps, threads));
  add(check_identity());
  add_all(check_two_qubit());
  return rep;
}

std::string format_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << format_number(c.measured)
        << " tol=" << format_number(c.tolerance);
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  for (const auto& i : report.info) out << "INFO " << i.name << "  " << i.text << '\n';
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return !c.passed; });
  out << (failed == 0 ? "ALL PASS" : "FAILED") << " (" << report.checks.size() - failed << "/"
      << report.checks.size() << ")\n";
  return out.str();
}

std::string format_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["passed"] = report.all_passed();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (std::isfinite(c.measured)) {
      e["measured"] = c.measured;
    } else {
      e["measured"] = nullptr;
    }
    e["tolerance"] = c.tolerance;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json info = nlohmann::ordered_json::array();
  for (const auto& i : report.info) info.push_back({{"name", i.name}, {"text", i.text}});
  j["info"] = std::move(info);
  return j.dump(2) + "\n";
}

}  // namespace holo::app
