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

#include "holo/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "holo/abelian.hpp"
#include "holo/app/format.hpp"
#include "holo/app/grids.hpp"
#include "holo/app/verification.hpp"
#include "holo/errors.hpp"
#include "holo/nonabelian.hpp"

namespace holo::app {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kOmega = 1.0;
constexpr int kMaxGrid = 100000;

const std::vector<double>& fig2_default_ratios() {
  static const std::vector<double> v = {0.01, 0.2, 0.5, 0.8};
  return v;
}

bool is_grid(Command c) { return c == Command::kFig1a || c == Command::kFig1b || c == Command::kFig2; }

double ratio_or(const RunConfig& cfg, double fallback) {
  return cfg.gamma_ratios.empty() ? fallback : cfg.gamma_ratios.front();
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// -0 prints as 0 and non-finite values as null, matching the CSV output.
void normalize(Json& j) {
  if (j.is_structured()) {
    for (auto& v : j) normalize(v);
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    j = v == 0.0 ? Json(0.0) : number(v);
  }
}

std::string dump(Json j) {
  normalize(j);
  return j.dump(2) + "\n";
}

Json matrix_json(const CMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (int c = 0; c < m.dim(); ++c) {
      rr.push_back(number(m(r, c).real()));
      ri.push_back(number(m(r, c).imag()));
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

// A grid result, rendered as CSV or as a JSON array of row objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<bool> flags;

  void add(std::vector<double> row, bool flagged) {
    rows.push_back(std::move(row));
    flags.push_back(flagged);
  }

  std::string render(OutputFormat f) const {
    if (f == OutputFormat::kJson) {
      const bool any = std::find(flags.begin(), flags.end(), true) != flags.end();
      Json arr = Json::array();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        Json o;
        for (std::size_t c = 0; c < header.size(); ++c) o[header[c]] = number(rows[r][c]);
        if (any) o["flag"] = static_cast<bool>(flags[r]);
        arr.push_back(std::move(o));
      }
      return dump(std::move(arr));
    }
    CsvTable t(header);
    for (std::size_t r = 0; r < rows.size(); ++r) t.add_row(rows[r], flags[r]);
    return t.str();
  }
};

void flatten(const Json& j, const std::string& prefix, std::vector<std::string>& keys,
             std::vector<std::string>& values) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "_" + k, keys, values);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "_" + std::to_string(i), keys, values);
  } else {
    keys.push_back(prefix);
    if (j.is_null()) {
      values.push_back("nan");
    } else if (j.is_boolean()) {
      values.push_back(j.get<bool>() ? "1" : "0");
    } else if (j.is_number()) {
      values.push_back(format_number(j.get<double>()));
    } else {
      values.push_back(j.get<std::string>());
    }
  }
}

std::string render_point(const Json& j, OutputFormat f) {
  if (f != OutputFormat::kCsv) return dump(j);
  std::vector<std::string> keys, values;
  flatten(j, "", keys, values);
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
  out += '\n';
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
  out += '\n';
  return out;
}

std::string cmd_fig1(const RunConfig& cfg) {
  const bool overlap = cfg.command == Command::kFig1a;
  const int nt = cfg.theta_grid.value_or(50);
  const auto thetas = overlap ? interior(0.0, kPi / 2, nt) : linspace(0.0, kPi, nt);
  const auto ratios = linspace(0.0, 1.0, cfg.ratio_grid);
  const auto rows = sweep_fig1(thetas, ratios, cfg.threads, kOmega);
  Table t;
  t.header = overlap ? std::vector<std::string>{"theta", "gamma_ratio", "eta"}
                     : std::vector<std::string>{"theta", "gamma_ratio", "phi_total", "phi_adiabatic_ref"};
  for (const auto& r : rows) {
    if (overlap) {
      t.add({r.theta, r.ratio, r.eta}, r.degenerate);
    } else {
      t.add({r.theta, r.ratio, r.phi_total, r.phi_adiabatic_ref}, r.degenerate);
    }
  }
  return t.render(cfg.format);
}

std::string cmd_fig2(const RunConfig& cfg) {
  const auto& ratios = cfg.gamma_ratios.empty() ? fig2_default_ratios() : cfg.gamma_ratios;
  const auto thetas = fig2_theta_grid(cfg.theta_grid.value_or(200));
  const auto rows = sweep_fig2(ratios, thetas, cfg.threads, kOmega);
  Table t;
  t.header = {"gamma_ratio", "one_minus_cos_theta", "pop_d1", "pop_d2", "eta"};
  for (const auto& r : rows) t.add({r.ratio, r.one_minus_cos_theta, r.pop_d1, r.pop_d2, r.eta}, r.flagged);
  return t.render(cfg.format);
}

std::string cmd_phase(const RunConfig& cfg) {
  const AbelianParams p{kOmega, cfg.theta.value_or(kPi / 4), ratio_or(cfg, 0.2)};
  const AbelianCycleResult r = evaluate_cycle(p);
  const AdiabaticLimit lim = adiabatic_phase_limit(std::abs(wrap_angle(p.theta)));
  Json j;
  j["command"] = "phase";
  j["omega"] = p.omega;
  j["theta"] = p.theta;
  j["gamma_ratio"] = p.ratio;
  j["period"] = number(p.cyclic() ? p.period() : std::numeric_limits<double>::infinity());
  j["roots"] = Json::array({r.spectrum.x_minus, r.spectrum.x0, r.spectrum.x_plus});
  j["e0"] = r.spectrum.e0();
  j["eta"] = r.eta;
  j["phi_total"] = r.phi_total;
  j["phi_adiabatic_ref"] = r.phi_adiabatic_ref;
  if (p.cyclic()) {
    j["phi_total_oracle"] = cyclic_phase_numeric(p, CyclicPhaseOptions{cfg.steps, false});
  } else {
    j["phi_total_oracle"] = nullptr;
  }
  j["adiabatic_limit"] = Json{{"extrapolated", lim.extrapolated},
                              {"two_pi_sin2_theta", lim.ref_two_pi},
                              {"four_pi_sin2_theta", lim.ref_four_pi}};
  return render_point(j, cfg.format);
}

std::string cmd_gate(const RunConfig& cfg) {
  const NonAbelianParams p{kOmega, cfg.theta.value_or(kPi / 4), ratio_or(cfg, 0.2)};
  const GateReport g = projected_gate(p);
  const auto e = eigenvalues_closed_form(p);
  Json j;
  j["command"] = "gate";
  j["omega"] = p.omega;
  j["theta"] = p.theta;
  j["gamma_ratio"] = p.ratio;
  j["cos_theta"] = std::cos(p.theta);
  j["fidelity"] = g.fidelity;
  j["pop_d1"] = g.pop_d1;
  j["pop_d2"] = g.pop_d2;
  j["eta"] = g.leakage_by_state[1];
  j["leakage_by_state"] = Json::array({g.leakage_by_state[0], g.leakage_by_state[1]});
  j["energies"] = Json::array({e[0], e[1], e[2], e[3]});
  j["projected"] = matrix_json(g.projected);
  j["ideal"] = matrix_json(g.ideal);
  return render_point(j, cfg.format);
}

std::string cmd_prep(const RunConfig& cfg) {
  const RampProfile ramp{cfg.ramp, 0.0, cfg.theta.value_or(kPi / 3), cfg.duration};
  PrepOptions opts;
  opts.steps = cfg.steps;
  opts.omega = kOmega;
  opts.strict = false;
  const PrepReport r = prepare(cfg.system, ramp, cfg.matching, opts);
  Json j;
  j["command"] = "prep";
  j["system"] = to_string(r.system);
  j["ramp"] = to_string(r.ramp.shape);
  j["theta_start"] = r.ramp.theta_start;
  j["theta_end"] = r.ramp.theta_end;
  j["duration"] = r.ramp.duration;
  j["matching"] = r.with_matching;
  j["steps"] = r.steps;
  j["final_infidelity"] = r.final_infidelity;
  j["state_error"] = r.state_error;
  j["norm_drift"] = r.norm_drift;
  j["failed"] = r.norm_drift > opts.unitarity_tolerance;
  return render_point(j, cfg.format);
}

std::string cmd_twoqubit(const RunConfig& cfg) {
  const double ratio = ratio_or(cfg, 0.2);
  const TwoQubitEffective eff = two_qubit_effective(cfg.drive);
  const double gamma = ratio * eff.params.kappa;
  const TwoQubitGateReport r = two_qubit_gate(cfg.drive, gamma);
  Json j;
  j["command"] = "twoqubit";
  j["amp1"] = cfg.drive.amp1;
  j["amp2"] = cfg.drive.amp2;
  j["phi1"] = cfg.drive.phi1;
  j["phi2"] = cfg.drive.phi2;
  j["gamma_ratio"] = ratio;
  j["gamma"] = gamma;
  j["kappa"] = r.effective.kappa;
  j["theta_eff"] = r.effective.theta;
  j["sin_theta_eff"] = r.effective.sin_theta;
  j["cos_theta_eff"] = r.effective.cos_theta;
  j["phi_eff"] = r.effective.phi;
  j["phase_on_11"] = r.phase_on_11;
  j["eta"] = r.eta;
  j["leakage_from_11"] = r.leakage_from_11;
  Json re = Json::array();
  Json im = Json::array();
  for (int i = 0; i < 4; ++i) {
    re.push_back(r.gate(i, i).real());
    im.push_back(r.gate(i, i).imag());
  }
  j["gate_diagonal"] = Json{{"re", std::move(re)}, {"im", std::move(im)}};
  return render_point(j, cfg.format);
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::kDegenerateMiddleRoot:
    case ErrorKind::kComplexRootsDetected:
    case ErrorKind::kDegenerateDrive:
      return kExitDegenerate;
    case ErrorKind::kNonCyclic:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kTimeOutOfRange:
      return kExitConfigError;
    default:
      return kExitVerificationFailed;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::kFig1a: return "fig1a";
    case Command::kFig1b: return "fig1b";
    case Command::kFig2: return "fig2";
    case Command::kPhase: return "phase";
    case Command::kGate: return "gate";
    case Command::kPrep: return "prep";
    case Command::kTwoQubit: return "twoqubit";
    case Command::kVerify: return "verify";
  }
  return "?";
}

void validate(const RunConfig& cfg) {
  require(cfg.steps >= 100, "--steps must be >= 100");
  require(cfg.ratio_grid >= 1 && cfg.ratio_grid <= kMaxGrid, "--ratio-grid must be in [1, 100000]");
  if (cfg.theta_grid) require(*cfg.theta_grid >= 1 && *cfg.theta_grid <= kMaxGrid, "--theta-grid must be in [1, 100000]");
  if (cfg.theta) require(std::isfinite(*cfg.theta), "--theta must be finite");
  require(cfg.threads >= 0, "--threads must be >= 0");
  for (double g : cfg.gamma_ratios) {
    require(std::isfinite(g) && g >= 0.0 && g <= 1.0, "--gamma-ratio must lie in [0, 1]");
  }
  const bool single = cfg.command == Command::kPhase || cfg.command == Command::kGate ||
                      cfg.command == Command::kTwoQubit;
  if (single) require(cfg.gamma_ratios.size() <= 1, "single-point commands take one --gamma-ratio");
  if (cfg.command == Command::kGate || cfg.command == Command::kTwoQubit) {
    require(ratio_or(cfg, 0.2) > 0.0, "a cyclic gate needs --gamma-ratio > 0");
  }
  if (cfg.command == Command::kFig1b && cfg.theta) require(false, "fig1b takes no --theta");
  if (cfg.command == Command::kPrep) {
    require(std::isfinite(cfg.duration) && cfg.duration > 0.0, "--duration must be positive");
  }
  if (cfg.command == Command::kTwoQubit) {
    const auto& d = cfg.drive;
    require(std::isfinite(d.amp1) && std::isfinite(d.amp2) && d.amp1 >= 0.0 && d.amp2 >= 0.0,
            "--amp1/--amp2 must be finite and >= 0");
    require(std::isfinite(d.phi1) && std::isfinite(d.phi2), "--phi1/--phi2 must be finite");
  }
}

CommandOutput execute(const RunConfig& cfg) {
  CommandOutput out;
  RunConfig c = cfg;
  if (c.format == OutputFormat::kDefault) {
    c.format = is_grid(c.command) || c.command == Command::kVerify ? OutputFormat::kCsv : OutputFormat::kJson;
  }
  try {
    switch (c.command) {
      case Command::kFig1a:
      case Command::kFig1b: out.body = cmd_fig1(c); break;
      case Command::kFig2: out.body = cmd_fig2(c); break;
      case Command::kPhase: out.body = cmd_phase(c); break;
      case Command::kGate: out.body = cmd_gate(c); break;
      case Command::kPrep: out.body = cmd_prep(c); break;
      case Command::kTwoQubit: out.body = cmd_twoqubit(c); break;
      case Command::kVerify: {
        const VerificationReport rep = run_verification(VerificationOptions{c.steps, c.threads});
        out.body = c.format == OutputFormat::kJson ? format_json(rep) : format_text(rep);
        if (!rep.all_passed()) {
          out.exit_code = kExitVerificationFailed;
          out.message = "verification failed";
        }
        break;
      }
    }
  } catch (const Error& e) {
    out.body.clear();
    out.exit_code = exit_code_for(e.kind());
    out.message = e.what();
  }
  return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  const CommandOutput res = execute(cfg);
  if (!res.message.empty()) err << (res.exit_code == kExitOk ? "" : "error: ") << res.message << '\n';
  if (res.body.empty()) return res.exit_code;
  if (cfg.out.empty()) {
    out << res.body;
    out.flush();
  } else {
    std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "error: cannot open " << cfg.out << '\n';
      return kExitConfigError;
    }
    f << res.body;
    if (!f) {
      err << "error: write failed for " << cfg.out << '\n';
      return kExitConfigError;
    }
  }
  return res.exit_code;
}

}  // namespace holo::app
