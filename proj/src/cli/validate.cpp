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

#include "tqi/cli/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "tqi/circuit.hpp"
#include "tqi/constants.hpp"
#include "tqi/dynamics.hpp"
#include "tqi/interface.hpp"
#include "tqi/lindblad.hpp"
#include "tqi/quantum.hpp"
#include "tqi/wire.hpp"

namespace tqi::cli {

namespace {

using constants::pi;
using Check = std::function<std::string()>;  // empty string: pass

Operator random_hermitian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Operator m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Scalar(d(rng), d(rng));
  return 0.5 * (m + m.adjoint());
}

Operator random_density(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Operator m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Scalar(d(rng), d(rng));
  Operator rho = m * m.adjoint();
  return rho / rho.trace();
}

std::string fail(const std::string& what, double value, double limit) {
  std::ostringstream os;
  os << what << " = " << value << " exceeds " << limit;
  return os.str();
}

std::string check_expm() {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const Operator h = random_hermitian(16, rng);
    const Operator u = expm_hermitian(h, 0.7);
    const double dev = unitarity_deviation(u);
    if (dev > 1e-10) return fail("unitarity deviation", dev, 1e-10);
    const double inv = (u * expm_hermitian(h, -0.7) - ops::identity(16)).cwiseAbs().maxCoeff();
    if (inv > 1e-10) return fail("U(t) U(-t) - 1", inv, 1e-10);
  }
  return {};
}

std::string check_partial_trace() {
  std::mt19937_64 rng(11);
  const Operator a = random_density(3, rng), b = random_density(4, rng);
  const QuantumState prod = QuantumState::mixed({3, 4}, tensor({a, b}));
  const double da = (partial_trace(prod, {0}).density_matrix() - a).cwiseAbs().maxCoeff();
  const double db = (partial_trace(prod, {1}).density_matrix() - b).cwiseAbs().maxCoeff();
  if (std::max(da, db) > 1e-12) return fail("product-state factorization error", std::max(da, db), 1e-12);
  StateVector bell = StateVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const double e = entanglement_entropy(QuantumState::pure({2, 2}, bell), {0});
  if (std::abs(e - 1.0) > 1e-10) return fail("Bell entropy error", std::abs(e - 1.0), 1e-10);
  return {};
}

std::string check_lindblad_decay() {
  const double kappa = 0.3, gamma = 0.45;
  const std::vector<double> grid{0.0, 0.5, 1.0, 2.0};
  {
    const Index n = 4;
    LindbladSpec spec{[n](double) { return Operator(Operator::Zero(n, n)); },
                      {{ops::annihilation(n), kappa}}};
    const auto res = integrate_master_equation(
        spec, QuantumState::pure({n}, basis(n, 1)).to_mixed(), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double nbar = std::real((ops::number(n) * res.states[i].density_matrix()).trace());
      const double err = std::abs(nbar - std::exp(-2.0 * kappa * grid[i]));
      if (err > 1e-6) return fail("photon decay error", err, 1e-6);
    }
  }
  {
    LindbladSpec spec{[](double) { return Operator(Operator::Zero(2, 2)); },
                      {{ops::lowering(), gamma}}};
    const auto res =
        integrate_master_equation(spec, QuantumState::pure({2}, basis(2, 1)).to_mixed(), grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double p1 = std::real(res.states[i].density_matrix()(1, 1));
      const double err = std::abs(p1 - std::exp(-2.0 * gamma * grid[i]));
      if (err > 1e-6) return fail("qubit decay error", err, 1e-6);
    }
  }
  return {};
}

std::string check_wire() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> y0(-50.0, 1.0), y1(-50.0, 50.0);
  for (int n = 0; n <= 2; ++n) {
    for (int i = 0; i < 300; ++i) {
      const double y = n == 0 ? y0(rng) : y1(rng);
      const double x = inverse_x_over_tan(y, n);
      const double r = std::abs(x / std::tan(x) - y);
      if (r > 1e-10) return fail("x/tan(x) round-trip residual", r, 1e-10);
    }
  }
  WireParams w;
  w.Delta0 = constants::two_pi * 32e9;
  const double e0 = wire_splitting(w, 0.0).E;
  const double err = std::abs(e0 - 0.5 * pi * w.energy_scale()) / w.energy_scale();
  if (err > 1e-12) return fail("E(0) relative error", err, 1e-12);
  const double eps1 = 2.0 * std::asin(1.0 / w.lambda_scale());
  const double jump =
      std::abs(wire_splitting(w, eps1 * (1 + 1e-9)).E - wire_splitting(w, eps1 * (1 - 1e-9)).E);
  if (jump > 1e-6 * w.energy_scale()) return fail("splitting jump at Lambda = 1", jump, 1e-6 * w.energy_scale());
  return {};
}

std::string check_circuit() {
  CircuitParams p;
  p.E_J = 1.0;
  p.E_J0 = 10.0;
  p.g = 0.01;
  const double bound = 5e-3;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      p.phi_e = constants::two_pi * i / 20;
      const double phi = constants::two_pi * j / 20;
      for (double amp : {-1.0, 0.0, 1.0}) {
        const double d = std::abs(phi_J_series(p, phi, amp) - phi_J_exact(p, phi, amp));
        if (d > bound) return fail("|phi_J series - exact|", d, bound);
      }
    }
  }
  return {};
}

std::string check_switching() {
  WireParams w;
  w.Delta0 = constants::two_pi * 32e9;
  CircuitParams p;
  p.E_J = constants::two_pi * 16e9;
  p.E_J0 = 10.0 * p.E_J;
  p.phi_c = 0.3;
  p.phi_e = 0.0;
  const double l1 = couplings(w, p).lambda1;
  p.phi_e = pi;
  const double l2 = couplings(w, p).lambda2;
  if (l1 != 0.0) return fail("lambda1 at phi_e = 0", std::abs(l1), 0.0);
  if (l2 != 0.0) return fail("lambda2 at phi_e = pi", std::abs(l2), 0.0);
  return {};
}

std::string check_schedule() {
  const double lambda2 = constants::two_pi * 32e6;
  for (int k : {1, 4, 9}) {
    const GateSchedule s = GateSchedule::make(lambda2, k);
    const PropagatorAB ab = propagator_AB(s.lambda2, s.nu, s.tau);
    const double da = std::abs(ab.A - std::complex<double>(-pi / 2, 0.0));
    if (da > 1e-12) return fail("|A(tau) + pi/2|", da, 1e-12);
    if (std::abs(ab.B) > 1e-14) return fail("|B(tau)|", std::abs(ab.B), 1e-14);
  }
  return {};
}

std::string check_propagator(bool mutate) {
  const Index n = 16;
  const GateSchedule s = GateSchedule::make(1.0, 1);
  const std::vector<Index> cols = vacuum_columns(n);
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * s.tau);
  std::vector<double> times(20);
  for (double& t : times) t = dist(rng);
  std::sort(times.begin(), times.end());

  const std::vector<Operator> numeric = numeric_U(s, n, times, cols);
  const ModelOperators o(n);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    PropagatorAB ab = propagator_AB(s.lambda2, s.nu, t);
    if (mutate) {
      const double theta = s.nu * t;
      ab.A = -(s.lambda2 * s.lambda2 / s.nu) *
             std::complex<double>(t + std::sin(theta) / s.nu, -(1.0 - std::cos(theta)) / s.nu);
    }
    const Operator ua = analytic_U(ab, o)(Eigen::all, cols);
    const double d = (ua - numeric[i]).cwiseAbs().maxCoeff();
    if (d > 1e-6) return fail("|U_analytic - U_numeric|", d, 1e-6);
  }
  return {};
}

std::string check_closed_gate() {
  const GateSchedule s = GateSchedule::make(constants::two_pi * 32e6, 1);
  const GateOutcome g = gate_outcome(ideal_gate_state(s, 16));
  if (1.0 - g.fidelity > 1e-8) return fail("1 - F", 1.0 - g.fidelity, 1e-8);
  if (1.0 - g.vacuum_population > 1e-8) return fail("1 - vacuum return", 1.0 - g.vacuum_population, 1e-8);
  return {};
}

}  // namespace

std::vector<GroupResult> run_validation(const ValidationOptions& opts) {
  const std::vector<std::pair<std::string, Check>> groups = {
      {"quantum-core.expm", check_expm},
      {"quantum-core.partial-trace", check_partial_trace},
      {"quantum-core.decay-laws", check_lindblad_decay},
      {"topo-wire.inversion", check_wire},
      {"charge-circuit.series-vs-exact", check_circuit},
      {"interface.switching", check_switching},
      {"dynamics.schedule", check_schedule},
      {"dynamics.propagator-oracle", [&] { return check_propagator(opts.mutate_propagator_sign); }},
      {"dynamics.closed-gate", check_closed_gate},
  };
  std::vector<GroupResult> out;
  for (const auto& [name, check] : groups) {
    GroupResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json validation_report(const std::vector<GroupResult>& groups) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& g : groups) {
    all = all && g.passed;
    arr.push_back({{"group", g.name}, {"passed", g.passed}, {"seconds", g.seconds}, {"detail", g.detail}});
  }
  return {{"passed", all}, {"groups", arr}};
}

}  // namespace tqi::cli
