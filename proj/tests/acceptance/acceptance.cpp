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

// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "holo/abelian.hpp"
#include "holo/app/grids.hpp"
#include "holo/experiments.hpp"
#include "holo/nonabelian.hpp"
#include "holo/oracle.hpp"
#include "support/oracles.hpp"

#ifndef HOLOSIM_PATH
#error "HOLOSIM_PATH must point at the holosim executable"
#endif

namespace {

using namespace holo;
using app::interior;
using app::linspace;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// 1. Characteristic-cubic consistency.
Outcome criterion1() {
  double worst = 0.0;
  for (double theta : interior(0.0, kPi / 2, 20)) {
    for (double g : linspace(0.0, 0.95, 20)) {
      const AbelianParams p{1.0, theta, g};
      const auto e = characteristic_roots(p).energies();
      const EigenSystem es = hermitian_eigensystem(invariant_abelian(p, 0.0));
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(e[i] - es.values[i]));
    }
  }
  double anchor = 0.0;
  for (double theta : {0.2, 0.9, 1.4}) {
    const auto r = characteristic_roots(AbelianParams{1.0, theta, 0.0}).roots();
    anchor = std::max({anchor, std::abs(r[0] + 1.0), std::abs(r[1]), std::abs(r[2] - 1.0)});
  }
  const auto r = characteristic_roots(AbelianParams{1.0, kPi / 2, 0.5}).roots();
  anchor = std::max({anchor, std::abs(r[0] + 1.0), std::abs(r[1] - 0.5), std::abs(r[2] - 1.0)});
  return {worst <= 1e-9 && anchor <= 1e-9, "grid max " + fmt(worst) + ", anchors " + fmt(anchor) + ", tol 1e-9"};
}

// 2. Closed-form vs RK4 propagators at t = T.
Outcome criterion2() {
  PropagatorOptions opts;
  opts.estimate_error = false;
  double ab = 0.0, na = 0.0;
  for (double theta : interior(0.0, kPi / 2, 5)) {
    for (double g : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const AbelianParams pa{1.0, theta, g};
      const auto ua = numeric_propagator([&](double t) { return h_abelian(pa, t); }, pa.period(), 20000, opts);
      ab = std::max(ab, spectral_norm(ua.u - closed_form_propagator(pa, pa.period())));
      const NonAbelianParams pn{1.0, theta, g};
      const auto un = numeric_propagator([&](double t) { return h_nonabelian(pn, t); }, pn.period(), 20000, opts);
      na = std::max(na, spectral_norm(un.u - exact_propagator(pn, pn.period())));
    }
  }
  return {ab <= 1e-6 && na <= 1e-6, "abelian " + fmt(ab) + ", non-abelian " + fmt(na) + ", tol 1e-6"};
}

// 3. Gauged spectrum.
Outcome criterion3() {
  double worst = 0.0;
  for (double theta : interior(0.0, kPi / 2, 20)) {
    for (double g : linspace(0.0, 0.95, 20)) {
      const NonAbelianParams p{1.0, theta, g};
      auto e = eigenvalues_closed_form(p);
      std::sort(e.begin(), e.end());
      const EigenSystem es = hermitian_eigensystem(gauged_hamiltonian(p).h_g);
      for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(e[i] - es.values[i]));
    }
  }
  double anchor = 0.0;
  for (double g : {0.1, 0.5, 0.9}) {
    const auto e0 = eigenvalues_closed_form(NonAbelianParams{1.0, 0.0, g});
    anchor = std::max({anchor, std::abs(std::abs(e0[0]) - g), std::abs(e0[0] + e0[1]), std::abs(std::abs(e0[2]) - 1.0),
                       std::abs(e0[2] + e0[3])});
    const auto e1 = eigenvalues_closed_form(NonAbelianParams{1.0, kPi / 2, g});
    const double wbar = std::sqrt(1.0 + g * g);
    anchor = std::max({anchor, std::abs(e1[0]), std::abs(e1[1]), std::abs(std::abs(e1[2]) - wbar),
                       std::abs(e1[2] + e1[3])});
  }
  return {worst <= 1e-9 && anchor <= 1e-12,
          "grid max " + fmt(worst) + " (tol 1e-9), anchors " + fmt(anchor) + " (tol 1e-12)"};
}

// 4. Abelian adiabatic limit.
Outcome criterion4(std::vector<std::string>& info) {
  const double g = 1e-3;
  double lead = 0.0, cubic = 0.0, extrap = 0.0;
  for (double theta : {0.3, 0.7, 1.1, 1.5}) {
    const double s = std::pow(std::sin(theta), 2), c = std::pow(std::cos(theta), 2);
    const double x0 = -total_phase(AbelianParams{1.0, theta, g}) * g / kTwoPi;
    lead = std::max(lead, std::abs(x0 - g * s) / (g * g * g));
    cubic = std::max(cubic, std::abs(x0 - (g * s - s * s * c * g * g * g)));
    const AdiabaticLimit lim = adiabatic_phase_limit(theta);
    const long double gs = 1e-7L;
    const double ref = static_cast<double>(2.0L * 3.14159265358979323846264338327950288L *
                                           testing::abelian_middle_root(gs, static_cast<long double>(s)) / gs);
    extrap = std::max(extrap, std::abs(lim.extrapolated - ref));
    std::ostringstream line;
    line << "INFO C4 theta=" << theta << "  extrapolated=" << lim.extrapolated << "  2pi*sin^2=" << lim.ref_two_pi
         << "  4pi*sin^2=" << lim.ref_four_pi << "  closer to "
         << (std::abs(lim.extrapolated - lim.ref_two_pi) < std::abs(lim.extrapolated - lim.ref_four_pi) ? "2pi" : "4pi");
    info.push_back(line.str());
  }
  // |x0 - g s| / g^3 stays O(1) and the cubic term leaves an O(g^5) residual.
  const bool ok = lead <= 1.0 && cubic <= 1e-13 && extrap <= 1e-6;
  return {ok, "max |x0 - g s|/g^3 " + fmt(lead) + " (<= 1), cubic residual " + fmt(cubic) +
                  " (<= 1e-13), extrapolation vs oracle " + fmt(extrap) + " (tol 1e-6)"};
}

// 5. Non-abelian adiabatic limit.
Outcome criterion5() {
  double energy = 0.0;
  for (double theta : {0.3, 0.7, 1.1, 1.5}) {
    const double g = 1e-3;
    const auto e = eigenvalues_closed_form(NonAbelianParams{1.0, theta, g});
    energy = std::max(energy, std::abs(std::abs(e[0]) / g - std::cos(theta)));
  }
  double sup = 0.0, min_fid = 1.0;
  for (double theta : fig2_theta_grid(200)) {
    const GateReport r = projected_gate(NonAbelianParams{1.0, theta, 0.01});
    sup = std::max(sup, std::abs(r.pop_d1 - std::pow(std::sin(kTwoPi * std::cos(theta)), 2)));
    min_fid = std::min(min_fid, r.fidelity);
  }
  return {energy < 1e-4 && sup <= 0.02 && min_fid > 0.99,
          "|E1/gamma - cos| " + fmt(energy) + " (< 1e-4), pop_D1 sup dev " + fmt(sup) + " (<= 0.02), min fidelity " +
              fmt(min_fid) + " (> 0.99)"};
}

// 6. Leakage anchors.
Outcome criterion6() {
  double worst = 0.0;
  for (double g : linspace(0.0, 0.95, 20)) {
    worst = std::max(worst, std::abs(leakage_overlap(AbelianParams{1.0, 1e-6, g}) - 1.0));
    worst = std::max(worst, std::abs(leakage_overlap(AbelianParams{1.0, kPi / 2, g}) - 1.0));
  }
  for (double theta : linspace(0.0, kPi / 2, 20))
    worst = std::max(worst, std::abs(leakage_overlap(AbelianParams{1.0, theta, 0.0}) - 1.0));
  return {worst <= 1e-9, "max |eta - 1| " + fmt(worst) + ", tol 1e-9"};
}

// 7. Matching-interaction exactness.
Outcome criterion7() {
  double exact = 0.0;
  double worst_order = 0.0;
  std::string orders;
  for (double d : {1.0, 10.0, 100.0}) {
    const RampProfile r{RampShape::kLinear, 0.0, kPi / 3, d};
    exact = std::max(exact, prepare_dark_state(r, true, PrepOptions{20000}).final_infidelity);
    PrepOptions coarse{static_cast<int>(25 * d)}, fine{static_cast<int>(50 * d)};
    coarse.strict = fine.strict = false;
    const double e1 = prepare_dark_state(r, true, coarse).state_error;
    const double e2 = prepare_dark_state(r, true, fine).state_error;
    const double order = std::log2(e1 / e2);
    worst_order = std::max(worst_order, std::abs(order - 4.0));
    orders += (orders.empty() ? "" : "/") + fmt(e1 / e2);
  }
  const double off1 = prepare_dark_state(RampProfile{RampShape::kLinear, 0.0, kPi / 3, 1.0}, false).final_infidelity;
  const double off100 = prepare_dark_state(RampProfile{RampShape::kLinear, 0.0, kPi / 3, 100.0}, false).final_infidelity;
  return {exact < 1e-8 && worst_order <= 1.0 && off1 > off100,
          "infidelity " + fmt(exact) + " (< 1e-8), halving ratios " + orders + " (~16), off: " + fmt(off1) + " > " +
              fmt(off100)};
}

// 8. Two-qubit isomorphism.
Outcome criterion8() {
  double worst = 0.0;
  for (double amp : {0.5, 1.0, 2.0}) {
    const TwoQubitDriveParams d{amp, amp, 0.3, 0.1};
    const double kappa = std::sqrt(2.0) * amp * amp;
    const TwoQubitGateReport rep = two_qubit_gate(d, 0.2 * kappa);
    const AbelianParams ref{1.0, kPi / 4, 0.2};
    worst = std::max({worst, std::abs(rep.phase_on_11 - total_phase(ref)),
                      std::abs(rep.leakage_from_11 - (1.0 - leakage_overlap(ref)))});
  }
  return {worst <= 1e-10, "max deviation " + fmt(worst) + ", tol 1e-10"};
}

bool read_file(const std::filesystem::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

// 9. Determinism of the grid commands.
Outcome criterion9() {
  const auto dir = std::filesystem::temp_directory_path() / ("holo_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  bool ok = true;
  std::string detail;
  for (const char* cmd : {"fig1a", "fig1b", "fig2"}) {
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
      const auto file = dir / (std::string(cmd) + "_" + std::to_string(run) + ".csv");
      const std::string line =
          std::string("\"") + HOLOSIM_PATH + "\" " + cmd + " --threads 4 --out \"" + file.string() + "\"";
      if (std::system(line.c_str()) != 0 || !read_file(file, bytes[run])) {
        ok = false;
        bytes[run] = "<run failed " + std::to_string(run) + ">";
      }
    }
    const bool same = bytes[0] == bytes[1] && !bytes[0].empty();
    ok = ok && same;
    detail += std::string(detail.empty() ? "" : ", ") + cmd + (same ? " identical" : " DIFFER") + " (" +
              std::to_string(bytes[0].size()) + " bytes)";
  }
  std::filesystem::remove_all(dir);
  return {ok, detail};
}

}  // namespace

int main() {
  std::vector<std::string> info;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"C1 characteristic-cubic consistency", criterion1},
      {"C2 closed-form vs oracle propagators", criterion2},
      {"C3 gauged spectrum", criterion3},
      {"C4 abelian adiabatic limit", [&] { return criterion4(info); }},
      {"C5 non-abelian adiabatic limit", criterion5},
      {"C6 leakage anchors", criterion6},
      {"C7 matching-interaction exactness", criterion7},
      {"C8 two-qubit isomorphism", criterion8},
      {"C9 determinism", criterion9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  for (const auto& l : info) std::printf("%s\n", l.c_str());
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
