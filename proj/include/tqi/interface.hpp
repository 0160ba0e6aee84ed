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

#include "tqi/circuit.hpp"
#include "tqi/quantum.hpp"
#include "tqi/wire.hpp"

namespace tqi {

/// Effective couplings at the working point phi = phi_c + f1:
///   omega_t = E(phi),  lambda1 = eta sin(phi_e/2) E'(phi),
///   lambda2 = eta g cos(phi_e/2) E'(phi).
struct CouplingSet {
  double omega_t = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double working_phi = 0.0;
  double dE_dphi = 0.0;
  EffectiveQubit effective;
};

CouplingSet couplings(const WireParams& wire, const CircuitParams& circuit);

enum class CouplingKind { lambda1, lambda2 };

struct WorkingPoint {
  double phi_c = 0.0;
  double coupling = 0.0;  // signed value at phi_c
};

/// Maximizes |coupling| over phi_c in (0, pi): a 1e-3 grid, then golden
/// section on the neighbouring cells down to 1e-8 in phi_c.
WorkingPoint optimal_working_point(const WireParams& wire, const CircuitParams& circuit,
                                   CouplingKind which);

/// Two identical topological qubits and a truncated cavity mode, ordered
/// qubit 1 (x) qubit 2 (x) cavity.
struct HamiltonianModel {
  Index fock_cutoff = 16;
  double nu = 0.0;       // detuning omega_r - omega
  double omega_r = 0.0;  // only enters build_H_CT

  static constexpr Index kMinFockCutoff = 8;

  Dims dims() const { return {2, 2, fock_cutoff}; }
  Index dim() const { return 4 * fock_cutoff; }
  /// Throws std::invalid_argument for fock_cutoff below kMinFockCutoff.
  void validate() const;
};

/// Operators of the qubit-qubit-cavity space for one cutoff.
struct ModelOperators {
  explicit ModelOperators(Index fock_cutoff);

  Index fock_cutoff;
  Operator a, a_dag, number;
  Operator tau1_z, tau2_z, J_z;
  Operator tau1_minus, tau2_minus;  // |0><1| on each topological qubit
};

/// omega_r a^dag a - (omega_t + lambda1)/2 (tau1_z + tau2_z)
///   - lambda2 (tau1_z + tau2_z)(a + a^dag)
Operator build_H_CT(const CouplingSet& cs, const HamiltonianModel& model);

/// -lambda2 (a e^{-i nu t} + a^dag e^{i nu t}) J_z. Throws for nu <= 0.
Operator build_H_I(const CouplingSet& cs, const HamiltonianModel& model, double t);
Operator build_H_I(double lambda2, double nu, const ModelOperators& ops, double t);

/// -(lambda1 / 2) sigma_x (x) tau_z on superconducting (x) topological qubit.
/// Throws std::invalid_argument unless |lambda2| <= 1e-12 |lambda1|.
Operator build_H_single_interface(const CouplingSet& cs);

}  // namespace tqi
