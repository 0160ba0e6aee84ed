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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqi/circuit.hpp"
#include "tqi/dynamics.hpp"
#include "tqi/wire.hpp"

namespace tqi::cli {

inline constexpr int kSchemaVersion = 1;

/// A frequency as written in a config: value, unit (GHz | MHz | rad_per_s)
/// and whether the value is to be multiplied by 2 pi.
struct Frequency {
  double value = 0.0;
  std::string unit = "rad_per_s";
  bool times_2pi = false;

  double rad_per_s() const;
  static Frequency from_rad_per_s(double w) { return {w, "rad_per_s", false}; }
};

struct Sweep {
  std::string variable;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;  // number of intervals; steps + 1 rows

  std::vector<double> values() const;
};

/// Parses "VAR:MIN:MAX:STEPS". Throws ConfigError.
Sweep parse_sweep(const std::string& text);

struct OutputSpec {
  std::filesystem::path directory = "out";
  std::vector<std::string> formats = {"csv", "json", "svg"};
  bool wants(const std::string& f) const;
};

struct RunConfig {
  // Raw (unit-tagged) inputs; normalized values are derived on demand.
  double v_F_m_per_s = 1e5;
  double L_m = 5e-6;
  Frequency Delta0{32.0, "GHz", true};
  double W_m = 50e-9;
  double T_K = 0.02;

  Frequency E_J{16.0, "GHz", true};
  Frequency E_J0{160.0, "GHz", true};
  Frequency E_c{24.0, "GHz", true};
  double n_g = 0.5;
  double g = 0.01;
  double phi_e = 0.0;
  std::optional<double> phi_c;  // empty: optimal working point for the active coupling
  Frequency omega_r{7.0, "GHz", true};

  Frequency kappa{1.0, "MHz", false};
  Frequency gamma{1.0, "MHz", false};

  int k = 1;
  Index fock_cutoff = 16;
  std::optional<Frequency> lambda2;  // overrides the derived coupling for gate runs
  std::optional<double> x_max;       // end of the time grid in |lambda2| t / pi
  int points_per_unit = 100;

  std::optional<Sweep> sweep;
  OutputSpec output;

  WireParams wire() const;
  /// Circuit with phi_c resolved (optimal working point if unset).
  CircuitParams circuit() const;
  DissipationRates rates() const;
  /// Which coupling the flux point switches on: lambda1 when
  /// sin^2(phi_e/2) > cos^2(phi_e/2), lambda2 otherwise.
  CouplingKind active_coupling() const;
};

/// The device parameters quoted for the hybrid system.
RunConfig default_config();
/// Parameters of the fidelity figure: k = 1, kappa = gamma = 1 MHz,
/// lambda2 = 2 pi x 32 MHz.
RunConfig fig2_config();

/// Overlays a JSON document on `base`. Unknown keys, a missing or wrong
/// schema_version and malformed values throw ConfigError.
RunConfig parse_config(const nlohmann::json& doc, RunConfig base = default_config());
RunConfig load_config(const std::filesystem::path& path, RunConfig base = default_config());

/// Config document with every frequency normalized to rad_per_s (and
/// phi_c resolved); feeding it back to parse_config reproduces the run.
nlohmann::json normalized_echo(const RunConfig& cfg);

/// Applies --rate-convention by overriding times_2pi on kappa and gamma:
/// "plain" reads the values as rates, "angular" multiplies them by 2 pi.
/// Throws ConfigError otherwise.
void apply_rate_convention(RunConfig& cfg, const std::string& convention);

}  // namespace tqi::cli
