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

#include "tqi/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "tqi/constants.hpp"
#include "tqi/errors.hpp"
#include "tqi/interface.hpp"
#include "tqi/trig.hpp"

namespace tqi::cli {

using nlohmann::json;

double Frequency::rad_per_s() const {
  double scale = 0.0;
  if (unit == "GHz")
    scale = 1e9;
  else if (unit == "MHz")
    scale = 1e6;
  else if (unit == "rad_per_s")
    scale = 1.0;
  else
    throw ConfigError("unknown frequency unit '" + unit + "' (expected GHz, MHz or rad_per_s)");
  return value * scale * (times_2pi ? constants::two_pi : 1.0);
}

std::vector<double> Sweep::values() const {
  std::vector<double> v(steps + 1);
  for (int i = 0; i <= steps; ++i)
    v[i] = i == steps ? max : min + (max - min) * static_cast<double>(i) / steps;
  return v;
}

Sweep parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4 || parts[0].empty())
    throw ConfigError("sweep must look like VAR:MIN:MAX:STEPS, got '" + text + "'");
  Sweep s;
  s.variable = parts[0];
  try {
    std::size_t used = 0;
    s.min = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("trailing");
    s.max = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("trailing");
    s.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ConfigError("sweep bounds are not numbers: '" + text + "'");
  }
  if (s.steps < 1) throw ConfigError("sweep needs at least one step");
  if (!(s.max > s.min)) throw ConfigError("sweep maximum must exceed its minimum");
  return s;
}

bool OutputSpec::wants(const std::string& f) const {
  return std::find(formats.begin(), formats.end(), f) != formats.end();
}

WireParams RunConfig::wire() const {
  WireParams w;
  w.v_F = v_F_m_per_s;
  w.L = L_m;
  w.Delta0 = Delta0.rad_per_s();
  w.W = W_m;
  w.T = T_K;
  return w;
}

CouplingKind RunConfig::active_coupling() const {
  const auto [s, c] = half_angle(phi_e);
  return s * s > c * c ? CouplingKind::lambda1 : CouplingKind::lambda2;
}

CircuitParams RunConfig::circuit() const {
  CircuitParams p;
  p.E_J = E_J.rad_per_s();
  p.E_J0 = E_J0.rad_per_s();
  p.E_c = E_c.rad_per_s();
  p.n_g = n_g;
  p.g = g;
  p.phi_e = phi_e;
  p.omega_r = omega_r.rad_per_s();
  if (phi_c) {
    p.phi_c = *phi_c;
  } else {
    p.phi_c = optimal_working_point(wire(), p, active_coupling()).phi_c;
  }
  return p;
}

DissipationRates RunConfig::rates() const { return {kappa.rad_per_s(), gamma.rad_per_s()}; }

RunConfig default_config() { return RunConfig{}; }

RunConfig fig2_config() {
  RunConfig c;
  c.k = 1;
  c.kappa = {1.0, "MHz", false};
  c.gamma = {1.0, "MHz", false};
  c.lambda2 = Frequency{32.0, "MHz", true};
  c.fock_cutoff = 16;
  c.x_max = 1.1;
  c.points_per_unit = 100;
  return c;
}

namespace {

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError("'" + where + "' must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key())) throw ConfigError("unknown key '" + where + "." + it.key() + "'");
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError("'" + where + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError("'" + where + "' must be finite");
  return x;
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError("'" + where + "' must be an integer");
  return v.get<int>();
}

Frequency frequency(const json& v, const std::string& where) {
  check_keys(v, where, {"value", "unit", "times_2pi"});
  if (!v.contains("value") || !v.contains("unit") || !v.contains("times_2pi"))
    throw ConfigError("'" + where + "' needs value, unit and times_2pi");
  Frequency f;
  f.value = number(v["value"], where + ".value");
  if (!v["unit"].is_string()) throw ConfigError("'" + where + ".unit' must be a string");
  f.unit = v["unit"].get<std::string>();
  if (!v["times_2pi"].is_boolean()) throw ConfigError("'" + where + ".times_2pi' must be a boolean");
  f.times_2pi = v["times_2pi"].get<bool>();
  (void)f.rad_per_s();  // validates the unit
  return f;
}

json to_json(const Frequency& f) {
  return {{"value", f.value}, {"unit", f.unit}, {"times_2pi", f.times_2pi}};
}

}  // namespace

RunConfig parse_config(const json& doc, RunConfig c) {
  check_keys(doc, "config", {"schema_version", "wire", "circuit", "bath", "schedule", "sweep", "output"});
  if (!doc.contains("schema_version")) throw ConfigError("config is missing schema_version");
  if (integer(doc["schema_version"], "schema_version") != kSchemaVersion)
    throw ConfigError("unsupported schema_version (expected 1)");

  if (doc.contains("wire")) {
    const json& w = doc["wire"];
    check_keys(w, "wire", {"v_F_m_per_s", "L_m", "Delta0", "W_m", "T_K"});
    if (w.contains("v_F_m_per_s")) c.v_F_m_per_s = number(w["v_F_m_per_s"], "wire.v_F_m_per_s");
    if (w.contains("L_m")) c.L_m = number(w["L_m"], "wire.L_m");
    if (w.contains("Delta0")) c.Delta0 = frequency(w["Delta0"], "wire.Delta0");
    if (w.contains("W_m")) c.W_m = number(w["W_m"], "wire.W_m");
    if (w.contains("T_K")) c.T_K = number(w["T_K"], "wire.T_K");
  }
  if (doc.contains("circuit")) {
    const json& k = doc["circuit"];
    check_keys(k, "circuit", {"E_J", "E_J0", "E_c", "n_g", "g", "phi_e_rad", "phi_c_rad", "omega_r"});
    if (k.contains("E_J")) c.E_J = frequency(k["E_J"], "circuit.E_J");
    if (k.contains("E_J0")) c.E_J0 = frequency(k["E_J0"], "circuit.E_J0");
    if (k.contains("E_c")) c.E_c = frequency(k["E_c"], "circuit.E_c");
    if (k.contains("n_g")) c.n_g = number(k["n_g"], "circuit.n_g");
    if (k.contains("g")) c.g = number(k["g"], "circuit.g");
    if (k.contains("phi_e_rad")) c.phi_e = number(k["phi_e_rad"], "circuit.phi_e_rad");
    if (k.contains("phi_c_rad")) {
      const json& v = k["phi_c_rad"];
      if (v.is_string() && v.get<std::string>() == "optimal")
        c.phi_c.reset();
      else
        c.phi_c = number(v, "circuit.phi_c_rad");
    }
    if (k.contains("omega_r")) c.omega_r = frequency(k["omega_r"], "circuit.omega_r");
  }
  if (doc.contains("bath")) {
    const json& b = doc["bath"];
    check_keys(b, "bath", {"kappa", "gamma"});
    if (b.contains("kappa")) c.kappa = frequency(b["kappa"], "bath.kappa");
    if (b.contains("gamma")) c.gamma = frequency(b["gamma"], "bath.gamma");
  }
  if (doc.contains("schedule")) {
    const json& s = doc["schedule"];
    check_keys(s, "schedule", {"k", "fock_cutoff", "lambda2", "x_max", "points_per_unit"});
    if (s.contains("k")) c.k = integer(s["k"], "schedule.k");
    if (s.contains("fock_cutoff")) c.fock_cutoff = integer(s["fock_cutoff"], "schedule.fock_cutoff");
    if (s.contains("lambda2")) {
      if (s["lambda2"].is_null())
        c.lambda2.reset();
      else
        c.lambda2 = frequency(s["lambda2"], "schedule.lambda2");
    }
    if (s.contains("x_max")) c.x_max = number(s["x_max"], "schedule.x_max");
    if (s.contains("points_per_unit"))
      c.points_per_unit = integer(s["points_per_unit"], "schedule.points_per_unit");
  }
  if (doc.contains("sweep")) {
    const json& s = doc["sweep"];
    if (s.is_null()) {
      c.sweep.reset();
    } else {
      check_keys(s, "sweep", {"variable", "min", "max", "steps"});
      if (!s.contains("variable") || !s["variable"].is_string())
        throw ConfigError("'sweep.variable' must be a string");
      Sweep sw;
      sw.variable = s["variable"].get<std::string>();
      sw.min = number(s.value("min", json()), "sweep.min");
      sw.max = number(s.value("max", json()), "sweep.max");
      sw.steps = integer(s.value("steps", json()), "sweep.steps");
      if (sw.steps < 1) throw ConfigError("sweep needs at least one step");
      if (!(sw.max > sw.min)) throw ConfigError("sweep maximum must exceed its minimum");
      c.sweep = sw;
    }
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    check_keys(o, "output", {"directory", "formats"});
    if (o.contains("directory")) {
      if (!o["directory"].is_string()) throw ConfigError("'output.directory' must be a string");
      c.output.directory = o["directory"].get<std::string>();
    }
    if (o.contains("formats")) {
      if (!o["formats"].is_array()) throw ConfigError("'output.formats' must be an array");
      c.output.formats.clear();
      for (const json& f : o["formats"]) {
        if (!f.is_string()) throw ConfigError("'output.formats' entries must be strings");
        const std::string name = f.get<std::string>();
        if (name != "csv" && name != "json" && name != "svg")
          throw ConfigError("unknown output format '" + name + "'");
        c.output.formats.push_back(name);
      }
    }
  }

  if (c.k < 1) throw ConfigError("schedule.k must be >= 1");
  if (c.fock_cutoff < HamiltonianModel::kMinFockCutoff)
    throw ConfigError("schedule.fock_cutoff must be >= 8");
  if (c.points_per_unit < 1) throw ConfigError("schedule.points_per_unit must be >= 1");
  if (c.x_max && !(*c.x_max > 0.0)) throw ConfigError("schedule.x_max must be positive");
  try {
    c.wire().validate();
    CircuitParams p;
    p.E_J = c.E_J.rad_per_s();
    p.E_J0 = c.E_J0.rad_per_s();
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.kappa.rad_per_s() < 0.0 || c.gamma.rad_per_s() < 0.0)
    throw ConfigError("decay rates must be non-negative");
  return c;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(doc, std::move(base));
}

nlohmann::json normalized_echo(const RunConfig& cfg) {
  const WireParams w = cfg.wire();
  const CircuitParams p = cfg.circuit();
  const DissipationRates r = cfg.rates();
  auto rad = [](double v) { return to_json(Frequency::from_rad_per_s(v)); };
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["wire"] = {{"v_F_m_per_s", w.v_F}, {"L_m", w.L}, {"Delta0", rad(w.Delta0)},
                 {"W_m", w.W}, {"T_K", w.T}};
  doc["circuit"] = {{"E_J", rad(p.E_J)}, {"E_J0", rad(p.E_J0)}, {"E_c", rad(p.E_c)},
                    {"n_g", p.n_g}, {"g", p.g}, {"phi_e_rad", p.phi_e},
                    {"phi_c_rad", p.phi_c}, {"omega_r", rad(p.omega_r)}};
  doc["bath"] = {{"kappa", rad(r.kappa)}, {"gamma", rad(r.gamma)}};
  json sched = {{"k", cfg.k}, {"fock_cutoff", cfg.fock_cutoff},
                {"points_per_unit", cfg.points_per_unit}};
  sched["lambda2"] = cfg.lambda2 ? rad(cfg.lambda2->rad_per_s()) : json(nullptr);
  if (cfg.x_max) sched["x_max"] = *cfg.x_max;
  doc["schedule"] = sched;
  if (cfg.sweep)
    doc["sweep"] = {{"variable", cfg.sweep->variable}, {"min", cfg.sweep->min},
                    {"max", cfg.sweep->max}, {"steps", cfg.sweep->steps}};
  else
    doc["sweep"] = nullptr;
  doc["output"] = {{"directory", cfg.output.directory.string()}, {"formats", cfg.output.formats}};
  return doc;
}

void apply_rate_convention(RunConfig& cfg, const std::string& convention) {
  if (convention == "plain") {
    cfg.kappa.times_2pi = false;
    cfg.gamma.times_2pi = false;
  } else if (convention == "angular") {
    cfg.kappa.times_2pi = true;
    cfg.gamma.times_2pi = true;
  } else {
    throw ConfigError("rate convention must be 'plain' or 'angular'");
  }
}

}  // namespace tqi::cli
