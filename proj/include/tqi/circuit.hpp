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

#include <string>
#include <vector>

namespace tqi {

/// Charge qubit with a large junction in the loop, pierced by an external
/// flux and the cavity flux. Energies are angular frequencies (rad/s);
/// phases in radians.
struct CircuitParams {
  double E_J = 0.0;      // small-junction Josephson energy
  double E_J0 = 0.0;     // large-junction Josephson energy
  double E_c = 0.0;      // island charging energy
  double n_g = 0.5;      // gate charge
  double g = 0.01;       // cavity-loop magnetic coupling
  double phi_e = 0.0;    // external flux phase 2 pi Phi_e / Phi_0
  double phi_c = 0.0;    // controller phase of the wire's "c" lead
  double omega_r = 0.0;  // cavity frequency

  /// eta = I_c / I_0, taken as E_J / E_J0.
  double eta() const { return E_J / E_J0; }

  /// Throws std::invalid_argument unless E_J, E_J0 > 0 and eta < 0.5.
  void validate() const;
  /// Regime checks that do not stop a run: eta < 0.3, E_J < E_c, n_g = 1/2.
  std::vector<std::string> warnings() const;
};

/// Two-level reduction at the charge degeneracy point.
struct EffectiveQubit {
  double E_J_bar = 0.0;   // H = -(E_J_bar / 2) sigma_x + xi (a + a^dagger) sigma_x
  double xi = 0.0;
  double f1 = 0.0;        // phi_J = f1 + (f2 + f3_coeff (a + a^dagger)) sigma_x
  double f2 = 0.0;
  double f3_coeff = 0.0;
  double eps_plus = 0.0;  // wire phase for |+>_s, zero photon amplitude
  double eps_minus = 0.0; // wire phase for |->_s
};

/// Large-junction phase to second order in eta, with photon_amp the
/// c-number value of (a + a^dagger). Throws for eta >= 0.3.
double phi_J_series(const CircuitParams& p, double phi, double photon_amp);

/// Root in (-pi/2, pi/2) of the current constraint
///   sin(phi_J) = 2 eta sin(beta) cos(phi),  2 beta = phi_e - phi_J + 2 g photon_amp.
/// Throws for eta >= 0.5.
double phi_J_exact(const CircuitParams& p, double phi, double photon_amp);

EffectiveQubit effective_qubit(const CircuitParams& p);

struct ChargeOracleResult {
  double gap = 0.0;        // E_1 - E_0, rad/s
  int n_max = 0;           // truncation that met the convergence test
  double convergence = 0.0;  // |gap(n_max) - gap(n_max - 2)|
};

/// Lowest gap of the island Hamiltonian E_c (n - n_g)^2 + U(phi) in the
/// charge basis n = -n_max .. n_max + 1, with
///   U(phi) = -2 E_J cos(beta(phi)) cos(phi) - E_J / (2 eta) cos(phi_J(phi))
/// and phi_J(phi) from phi_J_exact at zero photon amplitude. The large
/// junction enters with E_J / (2 eta) so that phi_J extremizes U. The truncation
/// is grown by 2 until two successive gaps agree to 1e-6 * max(gap, E_J).
/// Requires n_g = 1/2 and n_max >= 3; throws ConvergenceError if the
/// truncation reaches 64 without converging.
ChargeOracleResult charge_basis_oracle(const CircuitParams& p, int n_max);

/// (lambda1 / (2 E_J))^2. Throws for E_J <= 0.
double tunneling_leakage(double lambda1, const CircuitParams& p);

}  // namespace tqi
