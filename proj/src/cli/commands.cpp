// Copyright 2026 The tqi Authors
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

#include "tqi/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <ostream>
#include <thread>

#include "tqi/cli/svg.hpp"
#include "tqi/constants.hpp"
#include "tqi/errors.hpp"
#include "tqi/interface.hpp"

namespace tqi::cli {

using nlohmann::json;
using constants::pi;
using constants::two_pi;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::vector<std::vector<std::string>> parallel_rows(
    const std::vector<double>& xs, const std::function<std::vector<std::string>(double)>& f,
    unsigned workers) {
  if (workers == 0) workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::vector<std::string>> out(xs.size());
  for (std::size_t start = 0; start < xs.size(); start += workers) {
    const std::size_t end = std::min(xs.size(), start + workers);
    std::vector<std::future<std::vector<std::string>>> batch;
    for (std::size_t i = start; i < end; ++i)
      batch.push_back(std::async(std::launch::async, f, xs[i]));
    for (std::size_t i = start; i < end; ++i) out[i] = batch[i - start].get();
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::filesystem::path prepare_output(const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.output.directory);
  return cfg.output.directory;
}

json warnings_of(const RunConfig& cfg) {
  json w = json::array();
  for (const auto& s : cfg.wire().warnings()) w.push_back(s);
  CircuitParams p;
  p.E_J = cfg.E_J.rad_per_s();
  p.E_J0 = cfg.E_J0.rad_per_s();
  p.E_c = cfg.E_c.rad_per_s();
  p.n_g = cfg.n_g;
  for (const auto& s : p.warnings()) w.push_back(s);
  return w;
}

json metadata(const std::string& command, const RunConfig& cfg) {
  return {{"command", command}, {"config", normalized_echo(cfg)}, {"warnings", warnings_of(cfg)}};
}

void emit(const RunConfig& cfg, const std::filesystem::path& dir, const std::string& stem,
          const std::string& csv, const json& summary, std::ostream& log) {
  if (cfg.output.wants("csv")) {
    write_file(dir / (stem + ".csv"), csv);
    log << "wrote " << (dir / (stem + ".csv")).string() << "\n";
  }
  if (cfg.output.wants("json")) {
    write_file(dir / (stem + ".json"), summary.dump(2) + "\n");
    log << "wrote " << (dir / (stem + ".json")).string() << "\n";
  }
}

Sweep sweep_or(const RunConfig& cfg, const Sweep& fallback, std::initializer_list<const char*> allowed) {
  if (!cfg.sweep) return fallback;
  for (const char* a : allowed)
    if (cfg.sweep->variable == a) return *cfg.sweep;
  std::string names;
  for (const char* a : allowed) names += std::string(names.empty() ? "" : ", ") + a;
  throw ConfigError("sweep variable '" + cfg.sweep->variable + "' not supported here (use " + names + ")");
}

double resolved_lambda2(const RunConfig& cfg, const WireParams& wire, const CircuitParams& circuit) {
  if (cfg.lambda2) return cfg.lambda2->rad_per_s();
  const double l2 = couplings(wire, circuit).lambda2;
  if (l2 == 0.0)
    throw ConfigError("cavity coupling lambda2 is switched off at this flux point; set phi_e or schedule.lambda2");
  return l2;
}

std::vector<double> grid_with_tau(const GateSchedule& s, double x_max, int per_unit) {
  std::vector<double> t = gate_time_grid(s, x_max, per_unit);
  const bool has_tau = std::any_of(t.begin(), t.end(), [&](double v) { return v == s.tau; });
  if (!has_tau && s.tau <= t.back()) {
    t.push_back(s.tau);
    std::sort(t.begin(), t.end());
  }
  return t;
}

std::size_t index_of_tau(const FidelityCurve& c) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < c.times.size(); ++i)
    if (std::abs(c.times[i] - c.schedule.tau) < std::abs(c.times[best] - c.schedule.tau)) best = i;
  return best;
}

json curve_summary(const FidelityCurve& c) {
  const std::size_t i = index_of_tau(c);
  return {{"F_at_tau", c.fidelities[i]},
          {"tau_ns", c.schedule.tau * 1e9},
          {"schedule",
           {{"k", c.schedule.k},
            {"lambda2_rad_per_s", c.schedule.lambda2},
            {"nu_rad_per_s", c.schedule.nu},
            {"tau_s", c.schedule.tau}}},
          {"rates", {{"kappa_per_s", c.rates.kappa}, {"gamma_per_s", c.rates.gamma}}},
          {"fock_cutoff_used", c.fock_cutoff_used},
          {"convergence_delta", c.convergence_delta},
          {"physicality",
           {{"max_trace_deviation", c.worst.trace_deviation},
            {"max_hermiticity_deviation", c.worst.hermiticity_deviation},
            {"min_eigenvalue", c.worst.min_eigenvalue}}},
          {"integrator", {{"accepted_steps", c.stats.accepted}, {"rejected_steps", c.stats.rejected}}}};
}

std::string curve_csv(const FidelityCurve& c) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < c.times.size(); ++i)
    rows.push_back({num(c.times[i] * 1e9), num(c.lambda2_t_over_pi[i]), num(c.fidelities[i])});
  return format_csv({"t_ns", "lambda2_t_over_pi", "F"}, rows);
}

FidelityCurve run_gate_curve(const RunConfig& cfg, const GateSchedule& schedule) {
  const double x_max = cfg.x_max.value_or(1.1 * std::sqrt(static_cast<double>(schedule.k)));
  const std::vector<double> grid = grid_with_tau(schedule, x_max, cfg.points_per_unit);
  return fidelity_curve(schedule, cfg.rates(), grid, cfg.fock_cutoff);
}

}  // namespace

void cmd_spectrum(const RunConfig& cfg, std::ostream& log) {
  const WireParams wire = cfg.wire();
  const Sweep sweep = sweep_or(cfg, Sweep{"eps", 0.0, pi, 100}, {"eps"});
  std::vector<std::vector<std::string>> rows;
  for (double eps : sweep.values()) {
    const SplittingResult r = wire_splitting(wire, eps);
    rows.push_back({num(eps), num(r.Lambda), num(r.E), num(r.E / two_pi / 1e9), to_string(r.branch)});
  }
  const auto dir = prepare_output(cfg);
  json meta = metadata("spectrum", cfg);
  meta["rows"] = rows.size();
  meta["E_at_zero_phase_rad_per_s"] = wire_splitting(wire, 0.0).E;
  emit(cfg, dir, "spectrum",
       format_csv({"eps_rad", "Lambda", "E_rad_per_s", "E_GHz_over_2pi", "branch"}, rows), meta, log);
  log << "spectrum: " << rows.size() << " rows, E(0) = 2pi x "
      << wire_splitting(wire, 0.0).E / two_pi / 1e9 << " GHz\n";
}

void cmd_phij(const RunConfig& cfg, std::ostream& log) {
  const CircuitParams base = cfg.circuit();
  const Sweep sweep = sweep_or(cfg, Sweep{"phi", 0.0, two_pi, 100}, {"phi", "phi_e"});
  const double eta = base.eta();
  const double bound = 5.0 * eta * eta * eta;
  double worst = 0.0;
  std::vector<std::vector<std::string>> rows;
  for (double v : sweep.values()) {
    CircuitParams p = base;
    double phi = 0.0;
    if (sweep.variable == "phi")
      phi = v;
    else
      p.phi_e = v;
    for (double amp : {-1.0, 0.0, 1.0}) {
      const double s = phi_J_series(p, phi, amp);
      const double e = phi_J_exact(p, phi, amp);
      worst = std::max(worst, std::abs(s - e));
      rows.push_back({num(phi), num(p.phi_e), num(amp), num(s), num(e), num(std::abs(s - e)), num(bound)});
    }
  }
  json meta = metadata("phij", cfg);
  meta["eta"] = eta;
  meta["max_abs_difference_rad"] = worst;
  meta["bound_5eta3_rad"] = bound;
  const EffectiveQubit q = effective_qubit(base);
  try {
    const ChargeOracleResult r = charge_basis_oracle(base, 3);
    meta["charge_oracle"] = {{"gap_rad_per_s", r.gap},
                             {"E_J_bar_rad_per_s", q.E_J_bar},
                             {"n_max", r.n_max},
                             {"E_c_over_E_J", base.E_c / base.E_J}};
  } catch (const std::exception& e) {
    meta["charge_oracle"] = {{"error", e.what()}};
  }
  const auto dir = prepare_output(cfg);
  emit(cfg, dir, "phij",
       format_csv({"phi_rad", "phi_e_rad", "photon_amp", "phi_J_series_rad", "phi_J_exact_rad",
                   "abs_difference_rad", "bound_5eta3_rad"},
                  rows),
       meta, log);
  log << "phij: max |series - exact| = " << worst << " rad (bound 5 eta^3 = " << bound << ")\n";
}

void cmd_couplings(const RunConfig& cfg, std::ostream& log) {
  const WireParams wire = cfg.wire();
  const CircuitParams base = cfg.circuit();
  auto row_for = [&](const CircuitParams& p) -> std::vector<std::string> {
    const CouplingSet cs = couplings(wire, p);
    return {num(p.phi_e), num(p.phi_c), num(cs.working_phi), num(cs.omega_t), num(cs.lambda1),
            num(cs.lambda2), num(cs.effective.E_J_bar), num(cs.effective.xi),
            num(cs.effective.eps_plus), num(cs.effective.eps_minus)};
  };
  std::vector<std::vector<std::string>> rows;
  if (cfg.sweep) {
    const Sweep sweep = sweep_or(cfg, *cfg.sweep, {"phi_c", "phi_e"});
    rows = parallel_rows(sweep.values(), [&](double v) {
      CircuitParams p = base;
      (sweep.variable == "phi_c" ? p.phi_c : p.phi_e) = v;
      return row_for(p);
    });
  } else {
    rows.push_back(row_for(base));
  }

  const CouplingSet cs = couplings(wire, base);
  CircuitParams at_pi = base, at_zero = base;
  at_pi.phi_e = pi;
  at_zero.phi_e = 0.0;
  const WorkingPoint l1 = optimal_working_point(wire, at_pi, CouplingKind::lambda1);
  const WorkingPoint l2 = optimal_working_point(wire, at_zero, CouplingKind::lambda2);
  const double eta = base.eta();
  const double ref_l1 = eta * wire.Delta0;
  const double ref_l2 = eta * base.g * wire.Delta0;
  const double p_t = tunneling_leakage(l1.coupling, base);
  const double p_e = thermal_leakage(wire);

  json meta = metadata("couplings", cfg);
  meta["working_point"] = {{"phi_e_rad", base.phi_e},
                           {"phi_c_rad", base.phi_c},
                           {"working_phi_rad", cs.working_phi},
                           {"omega_t_rad_per_s", cs.omega_t},
                           {"lambda1_rad_per_s", cs.lambda1},
                           {"lambda2_rad_per_s", cs.lambda2},
                           {"E_J_bar_rad_per_s", cs.effective.E_J_bar},
                           {"xi_rad_per_s", cs.effective.xi},
                           {"f1_rad", cs.effective.f1},
                           {"f2_rad", cs.effective.f2},
                           {"f3_coeff_rad", cs.effective.f3_coeff},
                           {"eps_plus_rad", cs.effective.eps_plus},
                           {"eps_minus_rad", cs.effective.eps_minus}};
  meta["optima"] = {
      {"lambda1_max", {{"phi_e_rad", pi}, {"phi_c_rad", l1.phi_c}, {"value_rad_per_s", l1.coupling},
                       {"reference_eta_Delta0_rad_per_s", ref_l1},
                       {"ratio_to_reference", std::abs(l1.coupling) / ref_l1}}},
      {"lambda2_max", {{"phi_e_rad", 0.0}, {"phi_c_rad", l2.phi_c}, {"value_rad_per_s", l2.coupling},
                       {"reference_eta_g_Delta0_rad_per_s", ref_l2},
                       {"ratio_to_reference", std::abs(l2.coupling) / ref_l2}}}};
  meta["leakage"] = {{"P_t_at_lambda1_max", p_t},
                     {"P_t_at_ratio_0.1", tunneling_leakage(0.2 * base.E_J, base)},
                     {"lambda1_max_over_2E_J", std::abs(l1.coupling) / (2.0 * base.E_J)},
                     {"P_e", p_e}};

  const auto dir = prepare_output(cfg);
  emit(cfg, dir, "couplings",
       format_csv({"phi_e_rad", "phi_c_rad", "working_phi_rad", "omega_t_rad_per_s",
                   "lambda1_rad_per_s", "lambda2_rad_per_s", "E_J_bar_rad_per_s", "xi_rad_per_s",
                   "eps_plus_rad", "eps_minus_rad"},
                  rows),
       meta, log);

  auto mhz = [](double w) { return w / two_pi / 1e6; };
  log << "couplings at phi_e = " << base.phi_e << ", phi_c = " << base.phi_c << ":\n"
      << "  omega_t = 2pi x " << mhz(cs.omega_t) << " MHz\n"
      << "  lambda1 = 2pi x " << mhz(cs.lambda1) << " MHz\n"
      << "  lambda2 = 2pi x " << mhz(cs.lambda2) << " MHz\n"
      << "  E_J_bar = 2pi x " << mhz(cs.effective.E_J_bar) << " MHz, xi = 2pi x "
      << mhz(cs.effective.xi) << " MHz\n"
      << "  |lambda1|max = 2pi x " << mhz(std::abs(l1.coupling)) << " MHz (eta Delta0 ratio "
      << std::abs(l1.coupling) / ref_l1 << ")\n"
      << "  |lambda2|max = 2pi x " << mhz(std::abs(l2.coupling)) << " MHz (eta g Delta0 ratio "
      << std::abs(l2.coupling) / ref_l2 << ")\n"
      << "  P_t = " << p_t << ", P_e = " << p_e << "\n";
}

void cmd_gate(const RunConfig& cfg, std::ostream& log) {
  const WireParams wire = cfg.wire();
  const CircuitParams circuit = cfg.circuit();
  const double lambda2 = resolved_lambda2(cfg, wire, circuit);
  const auto dir = prepare_output(cfg);

  if (cfg.sweep) {
    const Sweep sweep = sweep_or(cfg, *cfg.sweep, {"kappa", "gamma", "k"});
    const auto rows = parallel_rows(sweep.values(), [&](double v) {
      RunConfig c = cfg;
      int k = cfg.k;
      if (sweep.variable == "kappa")
        c.kappa = Frequency::from_rad_per_s(v);
      else if (sweep.variable == "gamma")
        c.gamma = Frequency::from_rad_per_s(v);
      else
        k = static_cast<int>(std::lround(v));
      const GateSchedule s = GateSchedule::make(lambda2, k);
      c.x_max.reset();
      const FidelityCurve curve = run_gate_curve(c, s);
      return std::vector<std::string>{num(v), num(curve.fidelities[index_of_tau(curve)]),
                                      num(s.tau * 1e9), num(curve.convergence_delta)};
    });
    json meta = metadata("gate", cfg);
    meta["sweep_variable"] = sweep.variable;
    const std::string unit = sweep.variable == "k" ? "k" : sweep.variable + "_per_s";
    emit(cfg, dir, "gate_sweep", format_csv({unit, "F_at_tau", "tau_ns", "convergence_delta"}, rows),
         meta, log);
    log << "gate: swept " << sweep.variable << " over " << rows.size() << " points\n";
    return;
  }

  const GateSchedule schedule = GateSchedule::make(lambda2, cfg.k);
  const FidelityCurve curve = run_gate_curve(cfg, schedule);
  json meta = metadata("gate", cfg);
  meta.update(curve_summary(curve));
  emit(cfg, dir, "gate", curve_csv(curve), meta, log);
  log << "gate: F(tau) = " << curve.fidelities[index_of_tau(curve)] << " at tau = "
      << schedule.tau * 1e9 << " ns (cutoff " << curve.fock_cutoff_used << ", delta "
      << curve.convergence_delta << ")\n";
}

void cmd_fig2(const RunConfig& cfg, std::ostream& log) {
  const WireParams wire = cfg.wire();
  const CircuitParams circuit = cfg.circuit();
  const double lambda2 = resolved_lambda2(cfg, wire, circuit);
  const GateSchedule schedule = GateSchedule::make(lambda2, cfg.k);
  RunConfig c = cfg;
  if (!c.x_max) c.x_max = 1.1;
  const FidelityCurve curve = run_gate_curve(c, schedule);

  const auto dir = prepare_output(cfg);
  json meta = metadata("fig2", c);
  meta.update(curve_summary(curve));
  meta["F_at_lambda2_t_over_pi_1"] = fidelity_at(curve, 1.0);
  emit(c, dir, "fig2", curve_csv(curve), meta, log);
  if (c.output.wants("svg")) {
    const std::string svg = render_line_plot(
        curve.lambda2_t_over_pi, curve.fidelities,
        {"Entangling fidelity, k = " + std::to_string(schedule.k), "\xce\xbb\xe2\x82\x82t/\xcf\x80", "F"});
    write_file(dir / "fig2.svg", svg);
    log << "wrote " << (dir / "fig2.svg").string() << "\n";
  }
  log << "fig2: F = " << fidelity_at(curve, 1.0) << " at lambda2 t / pi = 1\n";
}

}  // namespace tqi::cli
