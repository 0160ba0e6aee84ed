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

#include <complex>
#include <span>
#include <vector>

#include "tqi/interface.hpp"
#include "tqi/lindblad.hpp"
#include "tqi/quantum.hpp"

namespace tqi {

/// Geometric-phase gate timing: nu = 2 |lambda2| sqrt(k), tau = sqrt(k) pi / |lambda2|,
/// so that nu tau = 2 k pi and A(tau) = -pi/2.
struct GateSchedule {
  int k = 1;
  double lambda2 = 0.0;  // signed; enters the Hamiltonian
  double nu = 0.0;
  double tau = 0.0;

  /// Throws std::invalid_argument for k < 1 or lambda2 == 0.
  static GateSchedule make(double lambda2, int k);
};

/// Coefficients of U = exp(-i A Jz^2) exp(-i B a Jz) exp(-i B* a^dag Jz).
/// A is complex away from nu t = 2 pi m: its imaginary part |B|^2 / 2
/// cancels the norm change from splitting the displacement in two factors.
struct PropagatorAB {
  std::complex<double> A;
  std::complex<double> B;
};

/// A = -(l^2/nu) [t - (e^{i nu t} - 1)/(i nu)],  B = -i (l/nu)(e^{-i nu t} - 1).
/// Throws std::invalid_argument for nu <= 0.
PropagatorAB propagator_AB(double lambda2, double nu, double t);

/// Extra Fock levels used internally by analytic_U before cropping to N.
inline constexpr Index kAnalyticFockPadding = 24;

/// The product of the three factors for given coefficients, evaluated on
/// N + kAnalyticFockPadding levels and cropped to N; no checks.
Operator analytic_U(const PropagatorAB& ab, const ModelOperators& ops);

/// Analytic propagator of H_I at time t. Throws ConvergenceError when its
/// unitarity deviation on the vacuum columns exceeds 1e-8.
Operator analytic_U(double lambda2, double nu, double t, const HamiltonianModel& model);

/// Columns q N (qubit basis state q, cavity vacuum): the inputs the gate uses.
std::vector<Index> vacuum_columns(Index fock_cutoff);

/// Direct integration of i dU/dt = H_I(t) U on the truncated 4N space for the
/// given columns of U(0) = 1. `times` must be nonnegative and nondecreasing;
/// one column block is returned per time.
std::vector<Operator> numeric_U(const GateSchedule& schedule, Index fock_cutoff,
                                std::span<const double> times, const std::vector<Index>& columns,
                                const OdeOptions& ode = {1e-11, 1e-13});

/// |++> (two qubits) and the entangled target (|++> + i|-->)/sqrt 2.
QuantumState plus_plus();
QuantumState gate_target();

/// Applies analytic_U(tau) to initial (x) |vac>. `initial` is a two-qubit
/// pure state. Throws std::invalid_argument when the schedule does not
/// close the cavity loop (|B(tau)| > 1e-10).
QuantumState ideal_gate_state(const GateSchedule& schedule, Index fock_cutoff,
                              const QuantumState& initial);
QuantumState ideal_gate_state(const GateSchedule& schedule, Index fock_cutoff = 16);

/// Fidelity of the qubit part against the target and overlap of the cavity
/// part with the vacuum for a pure state on (2, 2, N).
struct GateOutcome {
  double fidelity = 0.0;
  double vacuum_population = 0.0;
};
GateOutcome gate_outcome(const QuantumState& final_state);

struct DissipationRates {
  double kappa = 0.0;  // cavity channel (a, kappa)
  double gamma = 0.0;  // qubit channels (tau_j^-, gamma)
};

/// Output times i / per_unit (in units of pi / |lambda2|), i = 0..count-1.
std::vector<double> gate_time_grid(const GateSchedule& schedule, double x_max, int per_unit);

struct FidelityCurveOptions {
  MasterEquationOptions integration{};
  bool certify_cutoff = true;
  Index cutoff_increment = 4;
  double cutoff_tolerance = 1e-6;
};

struct FidelityCurve {
  std::vector<double> times;               // s
  std::vector<double> lambda2_t_over_pi;   // |lambda2| t / pi
  std::vector<double> fidelities;
  GateSchedule schedule;
  DissipationRates rates;
  Index fock_cutoff_used = 0;
  double convergence_delta = 0.0;  // max |F_N - F_{N+increment}|, 0 if not certified
  DensityDiagnostics worst;        // over the trajectory at cutoff N
  OdeStats stats;
};

/// Integrates the master equation under H_I for rho(0) = |++><++| (x) |0><0|
/// and returns F(t) = <psi_f| Tr_cav rho(t) |psi_f>. Unless disabled, repeats
/// at N + increment and throws ConvergenceError if the curves differ by more
/// than the tolerance.
FidelityCurve fidelity_curve(const GateSchedule& schedule, const DissipationRates& rates,
                             std::span<const double> t_grid, Index fock_cutoff,
                             const FidelityCurveOptions& opts = {});

/// F at the grid point closest to |lambda2| t / pi = x.
double fidelity_at(const FidelityCurve& curve, double x);

/// exp(-i t1 H) with H = -(lambda1/2) sigma_x tau_z.
Operator single_interface_evolution(const CouplingSet& cs, double t1);

}  // namespace tqi
