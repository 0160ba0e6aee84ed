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

#include "tqi/dynamics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <Eigen/SparseCore>

#include "tqi/constants.hpp"
#include "tqi/errors.hpp"

namespace tqi {

GateSchedule GateSchedule::make(double lambda2, int k) {
  if (k < 1) throw std::invalid_argument("GateSchedule: k must be a positive integer");
  if (lambda2 == 0.0 || !std::isfinite(lambda2))
    throw std::invalid_argument("GateSchedule: lambda2 must be finite and nonzero");
  const double root_k = std::sqrt(static_cast<double>(k));
  const double l = std::abs(lambda2);
  return {k, lambda2, 2.0 * l * root_k, root_k * constants::pi / l};
}

PropagatorAB propagator_AB(double lambda2, double nu, double t) {
  if (!(nu > 0.0)) throw std::invalid_argument("propagator_AB: nu must be positive");
  const double theta = nu * t;
  const double s = std::sin(0.5 * theta);
  // e^{-i theta} - 1 = -2i sin(theta/2) e^{-i theta/2}: no cancellation at theta = 2 pi m.
  const std::complex<double> b =
      -2.0 * (lambda2 / nu) * s * std::exp(std::complex<double>(0.0, -0.5 * theta));
  // (e^{i theta} - 1)/(i nu) = sin(theta)/nu + 2i sin^2(theta/2)/nu
  const std::complex<double> bracket(t - std::sin(theta) / nu, -2.0 * s * s / nu);
  const std::complex<double> a = -(lambda2 * lambda2 / nu) * bracket;
  return {a, b};
}

Operator analytic_U(const PropagatorAB& ab, const ModelOperators& o) {
  // J_z is diagonal, so U is block diagonal in the qubit basis. Each Fock
  // block is built on a padded space and cropped: the product of the two
  // truncated exponentials otherwise picks up edge errors at the top level.
  const Index n = o.fock_cutoff;
  const Index padded = n + kAnalyticFockPadding;
  const Operator a = ops::annihilation(padded);
  const Operator a_dag = a.adjoint();
  Operator u = Operator::Zero(4 * n, 4 * n);
  for (Index q = 0; q < 4; ++q) {
    const double m = std::real(o.J_z(q * n, q * n));
    const Operator x = (-kI * ab.B * m) * a;
    const Operator y = (-kI * std::conj(ab.B) * m) * a_dag;
    const Operator block = std::exp(-kI * ab.A * (m * m)) * (expm(x) * expm(y));
    u.block(q * n, q * n, n, n) = block.topLeftCorner(n, n);
  }
  return u;
}

Operator analytic_U(double lambda2, double nu, double t, const HamiltonianModel& model) {
  model.validate();
  const ModelOperators o(model.fock_cutoff);
  Operator u = analytic_U(propagator_AB(lambda2, nu, t), o);
  const Operator sub = u(Eigen::all, vacuum_columns(model.fock_cutoff));
  const double dev = unitarity_deviation(sub);
  if (dev > 1e-8) {
    std::ostringstream os;
    os << "analytic_U: unitarity deviation " << dev << " on vacuum inputs; raise the cutoff";
    throw ConvergenceError(os.str());
  }
  return u;
}

std::vector<Index> vacuum_columns(Index fock_cutoff) {
  return {0, fock_cutoff, 2 * fock_cutoff, 3 * fock_cutoff};
}

std::vector<Operator> numeric_U(const GateSchedule& schedule, Index fock_cutoff,
                                std::span<const double> times, const std::vector<Index>& columns,
                                const OdeOptions& ode) {
  if (!(schedule.nu > 0.0)) throw std::invalid_argument("numeric_U: detuning nu must be positive");
  const ModelOperators o(fock_cutoff);
  // H_I(t) = -lambda2 (e^{-i nu t} a Jz + h.c.); a Jz is sparse.
  const Eigen::SparseMatrix<Scalar> m = Operator(o.a * o.J_z).sparseView();
  const Eigen::SparseMatrix<Scalar> m_dag = m.adjoint();
  auto rhs = [&](double t, const Operator& u, Operator& du) {
    const Scalar phase = std::exp(-kI * (schedule.nu * t));
    du.noalias() = (kI * schedule.lambda2 * phase) * (m * u);
    du.noalias() += (kI * schedule.lambda2 * std::conj(phase)) * (m_dag * u);
  };
  Operator u = Operator::Identity(4 * fock_cutoff, 4 * fock_cutoff)(Eigen::all, columns);
  auto stepper = make_dopri5<Operator>(rhs, ode);
  std::vector<Operator> out;
  out.reserve(times.size());
  double t = 0.0;
  for (double target : times) {
    if (target < t) throw std::invalid_argument("numeric_U: times must be nondecreasing from 0");
    stepper.advance(t, u, target);
    out.push_back(u);
  }
  return out;
}

QuantumState plus_plus() {
  StateVector v = StateVector::Constant(4, 0.5);
  return QuantumState::pure({2, 2}, v);
}

QuantumState gate_target() {
  StateVector pp = StateVector::Constant(4, 0.5);
  StateVector mm(4);
  mm << 0.5, -0.5, -0.5, 0.5;
  StateVector v = (pp + kI * mm) / std::sqrt(2.0);
  return QuantumState::normalized({2, 2}, v);
}

QuantumState ideal_gate_state(const GateSchedule& schedule, Index fock_cutoff,
                              const QuantumState& initial) {
  if (!initial.is_pure() || initial.dims() != Dims{2, 2})
    throw std::invalid_argument("ideal_gate_state: initial state must be a pure two-qubit state");
  const PropagatorAB ab = propagator_AB(schedule.lambda2, schedule.nu, schedule.tau);
  if (std::abs(ab.B) > 1e-10)
    throw std::invalid_argument("ideal_gate_state: schedule does not satisfy nu tau = 2 k pi");
  HamiltonianModel model{fock_cutoff, schedule.nu, 0.0};
  const Operator u = analytic_U(schedule.lambda2, schedule.nu, schedule.tau, model);
  const QuantumState vac = QuantumState::pure({fock_cutoff}, basis(fock_cutoff, 0));
  const QuantumState in = tensor(initial, vac);
  return QuantumState::normalized(in.dims(), u * in.amplitudes());
}

QuantumState ideal_gate_state(const GateSchedule& schedule, Index fock_cutoff) {
  return ideal_gate_state(schedule, fock_cutoff, plus_plus());
}

GateOutcome gate_outcome(const QuantumState& final_state) {
  if (final_state.dims().size() != 3)
    throw std::invalid_argument("gate_outcome: expected a (2, 2, N) state");
  GateOutcome out;
  out.fidelity = state_fidelity(partial_trace(final_state, {0, 1}), gate_target());
  const Operator cav = partial_trace(final_state, {2}).density_matrix();
  out.vacuum_population = std::real(cav(0, 0));
  return out;
}

std::vector<double> gate_time_grid(const GateSchedule& schedule, double x_max, int per_unit) {
  if (per_unit < 1 || !(x_max > 0.0))
    throw std::invalid_argument("gate_time_grid: invalid grid bounds");
  const int count = static_cast<int>(std::floor(x_max * per_unit + 1e-9)) + 1;
  const double unit = constants::pi / std::abs(schedule.lambda2);
  std::vector<double> t(count);
  for (int i = 0; i < count; ++i) t[i] = (static_cast<double>(i) / per_unit) * unit;
  return t;
}

namespace {

struct CurveRun {
  std::vector<double> fidelities;
  DensityDiagnostics worst;
  OdeStats stats;
};

CurveRun run_curve(const GateSchedule& schedule, const DissipationRates& rates,
                   std::span<const double> t_grid, Index n, const MasterEquationOptions& opts) {
  const ModelOperators o(n);
  LindbladSpec spec;
  const double lambda2 = schedule.lambda2, nu = schedule.nu;
  spec.hamiltonian = [&o, lambda2, nu](double t) { return build_H_I(lambda2, nu, o, t); };
  spec.channels = {{o.a, rates.kappa}, {o.tau1_minus, rates.gamma}, {o.tau2_minus, rates.gamma}};

  const QuantumState vac = QuantumState::pure({n}, basis(n, 0));
  const QuantumState rho0 = tensor(plus_plus(), vac).to_mixed();
  const MasterEquationResult res = integrate_master_equation(spec, rho0, t_grid, opts);

  const QuantumState target = gate_target();
  CurveRun run;
  run.worst = res.worst;
  run.stats = res.stats;
  run.fidelities.reserve(res.states.size());
  for (const QuantumState& rho : res.states)
    run.fidelities.push_back(state_fidelity(partial_trace(rho, {0, 1}), target));
  return run;
}

}  // namespace

FidelityCurve fidelity_curve(const GateSchedule& schedule, const DissipationRates& rates,
                             std::span<const double> t_grid, Index fock_cutoff,
                             const FidelityCurveOptions& opts) {
  HamiltonianModel{fock_cutoff, schedule.nu, 0.0}.validate();
  if (rates.kappa < 0.0 || rates.gamma < 0.0)
    throw std::invalid_argument("fidelity_curve: negative decay rate");

  CurveRun run = run_curve(schedule, rates, t_grid, fock_cutoff, opts.integration);

  FidelityCurve curve;
  curve.times.assign(t_grid.begin(), t_grid.end());
  for (double t : t_grid) curve.lambda2_t_over_pi.push_back(std::abs(schedule.lambda2) * t / constants::pi);
  curve.schedule = schedule;
  curve.rates = rates;
  curve.fock_cutoff_used = fock_cutoff;
  curve.worst = run.worst;
  curve.stats = run.stats;

  if (opts.certify_cutoff) {
    const CurveRun check =
        run_curve(schedule, rates, t_grid, fock_cutoff + opts.cutoff_increment, opts.integration);
    double delta = 0.0;
    for (std::size_t i = 0; i < run.fidelities.size(); ++i)
      delta = std::max(delta, std::abs(run.fidelities[i] - check.fidelities[i]));
    curve.convergence_delta = delta;
    if (delta > opts.cutoff_tolerance) {
      std::ostringstream os;
      os << "fidelity_curve: Fock cutoff " << fock_cutoff << " not converged (delta " << delta
         << " against cutoff " << fock_cutoff + opts.cutoff_increment << ")";
      throw ConvergenceError(os.str());
    }
  }
  curve.fidelities = std::move(run.fidelities);
  return curve;
}

double fidelity_at(const FidelityCurve& curve, double x) {
  if (curve.fidelities.empty()) throw std::invalid_argument("fidelity_at: empty curve");
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.lambda2_t_over_pi.size(); ++i)
    if (std::abs(curve.lambda2_t_over_pi[i] - x) < std::abs(curve.lambda2_t_over_pi[best] - x))
      best = i;
  return curve.fidelities[best];
}

Operator single_interface_evolution(const CouplingSet& cs, double t1) {
  return expm_hermitian(build_H_single_interface(cs), t1);
}

}  // namespace tqi
