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

#include "tqi/interface.hpp"

#include <cmath>
#include <stdexcept>

#include "tqi/constants.hpp"
#include "tqi/trig.hpp"

namespace tqi {

CouplingSet couplings(const WireParams& wire, const CircuitParams& circuit) {
  wire.validate();
  CouplingSet cs;
  cs.effective = effective_qubit(circuit);
  cs.working_phi = circuit.phi_c + cs.effective.f1;
  cs.omega_t = wire_splitting(wire, cs.working_phi).E;
  cs.dE_dphi = splitting_derivative(wire, cs.working_phi).value;
  const auto [s, c] = half_angle(circuit.phi_e);
  const double eta = circuit.eta();
  cs.lambda1 = eta * s * cs.dE_dphi;
  cs.lambda2 = eta * circuit.g * c * cs.dE_dphi;
  return cs;
}

WorkingPoint optimal_working_point(const WireParams& wire, const CircuitParams& circuit,
                                   CouplingKind which) {
  auto coupling_at = [&](double phi_c) {
    CircuitParams p = circuit;
    p.phi_c = phi_c;
    const CouplingSet cs = couplings(wire, p);
    return which == CouplingKind::lambda1 ? cs.lambda1 : cs.lambda2;
  };

  constexpr double kStep = 1e-3;
  const double pi = constants::pi;
  const int cells = static_cast<int>(pi / kStep);
  double best_phi = kStep, best = coupling_at(kStep);
  for (int i = 2; i <= cells; ++i) {
    const double phi = i * kStep;
    const double v = coupling_at(phi);
    if (std::abs(v) > std::abs(best)) {
      best = v;
      best_phi = phi;
    }
  }
  if (best == 0.0) return {best_phi, 0.0};

  // Golden section for the maximum of |coupling| on the bracketing cells.
  double lo = std::max(best_phi - kStep, 1e-12);
  double hi = std::min(best_phi + kStep, pi - 1e-12);
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = std::abs(coupling_at(x1)), f2 = std::abs(coupling_at(x2));
  while (hi - lo > 1e-8) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = std::abs(coupling_at(x1));
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = std::abs(coupling_at(x2));
    }
  }
  const double phi = 0.5 * (lo + hi);
  const double v = coupling_at(phi);
  if (std::abs(v) >= std::abs(best)) return {phi, v};
  return {best_phi, best};
}

void HamiltonianModel::validate() const {
  if (fock_cutoff < kMinFockCutoff)
    throw std::invalid_argument("HamiltonianModel: Fock cutoff must be at least 8");
}

ModelOperators::ModelOperators(Index n) : fock_cutoff(n) {
  const Operator i2 = ops::identity(2), in = ops::identity(n);
  a = tensor({i2, i2, ops::annihilation(n)});
  a_dag = a.adjoint();
  number = tensor({i2, i2, ops::number(n)});
  tau1_z = tensor({ops::sigma_z(), i2, in});
  tau2_z = tensor({i2, ops::sigma_z(), in});
  J_z = 0.5 * (tau1_z + tau2_z);
  tau1_minus = tensor({ops::lowering(), i2, in});
  tau2_minus = tensor({i2, ops::lowering(), in});
}

Operator build_H_CT(const CouplingSet& cs, const HamiltonianModel& model) {
  model.validate();
  const ModelOperators o(model.fock_cutoff);
  const Operator tz = o.tau1_z + o.tau2_z;
  return model.omega_r * o.number - 0.5 * (cs.omega_t + cs.lambda1) * tz -
         cs.lambda2 * tz * (o.a + o.a_dag);
}

Operator build_H_I(double lambda2, double nu, const ModelOperators& o, double t) {
  if (!(nu > 0.0)) throw std::invalid_argument("build_H_I: detuning nu must be positive");
  const Scalar phase = std::exp(-kI * (nu * t));
  // J_z is diagonal.
  return -lambda2 * ((phase * o.a + std::conj(phase) * o.a_dag) * o.J_z.diagonal().asDiagonal());
}

Operator build_H_I(const CouplingSet& cs, const HamiltonianModel& model, double t) {
  model.validate();
  return build_H_I(cs.lambda2, model.nu, ModelOperators(model.fock_cutoff), t);
}

Operator build_H_single_interface(const CouplingSet& cs) {
  if (std::abs(cs.lambda2) > 1e-12 * std::abs(cs.lambda1))
    throw std::invalid_argument("build_H_single_interface: cavity coupling lambda2 is not off");
  return -0.5 * cs.lambda1 * tensor({ops::sigma_x(), ops::sigma_z()});
}

}  // namespace tqi
