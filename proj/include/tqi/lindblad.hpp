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

#include <functional>
#include <span>
#include <vector>

#include "tqi/ode.hpp"
#include "tqi/quantum.hpp"

namespace tqi {

/// Collapse channel entering the generator as
///   rate * (2 L rho L^dagger - L^dagger L rho - rho L^dagger L).
/// Note the factor 2: a channel (a, kappa) empties a cavity at rate 2 kappa.
struct Channel {
  Operator op;
  double rate = 0.0;
};

struct LindbladSpec {
  std::function<Operator(double)> hamiltonian;
  std::vector<Channel> channels;
};

struct MasterEquationOptions {
  OdeOptions ode{};
  /// Bounds every emitted state is checked against; a violation throws
  /// PhysicalityError.
  StateTolerances bounds{1e-8, 1e-9, -1e-8};
};

struct MasterEquationResult {
  std::vector<QuantumState> states;
  DensityDiagnostics worst;  // largest deviations seen over all outputs
  OdeStats stats;
};

/// Integrate the master equation from rho0 at t = t_grid[0] = 0 and return
/// rho at each grid time. t_grid must start at 0 and increase strictly.
MasterEquationResult integrate_master_equation(const LindbladSpec& spec, const QuantumState& rho0,
                                               std::span<const double> t_grid,
                                               const MasterEquationOptions& opts = {});

/// Time derivative of rho under `spec` at time t.
Operator lindblad_rhs(const LindbladSpec& spec, double t, const Operator& rho);

}  // namespace tqi
