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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tqi/constants.hpp"
#include "tqi/interface.hpp"

using namespace tqi;
using constants::pi;
using constants::two_pi;
using tqi::testing::max_abs;

namespace {

WireParams wire() {
  WireParams w;
  w.Delta0 = two_pi * 32e9;
  return w;
}

CircuitParams circuit(double phi_e, double phi_c = 0.4) {
  CircuitParams c;
  c.E_J = two_pi * 16e9;
  c.E_J0 = 10.0 * c.E_J;
  c.E_c = 50.0 * c.E_J;
  c.phi_e = phi_e;
  c.phi_c = phi_c;
  c.omega_r = two_pi * 7e9;
  return c;
}

}  // namespace

TEST_CASE("coupling fixtures") {
  const CouplingSet off1 = couplings(wire(), circuit(0.0));
  CHECK(off1.lambda1 == 0.0);
  const CircuitParams c0 = circuit(0.0);
  CHECK(off1.lambda2 == doctest::Approx(c0.eta() * c0.g * off1.dE_dphi).epsilon(1e-15));
  CHECK(off1.dE_dphi == doctest::Approx(splitting_derivative(wire(), 0.4).value).epsilon(1e-12));
  CHECK(off1.omega_t == doctest::Approx(wire_splitting(wire(), 0.4).E).epsilon(1e-15));

  const CouplingSet off2 = couplings(wire(), circuit(pi));
  CHECK(off2.lambda2 == 0.0);
  CHECK(off2.lambda1 != 0.0);
}

TEST_CASE("property: switching identities hold for random devices") {
  std::mt19937_64 rng(201);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    WireParams w = wire();
    w.Delta0 *= 0.2 + u(rng);
    w.L *= 0.5 + u(rng);
    CircuitParams c = circuit(0.0, 0.05 + 2.9 * u(rng));
    c.E_J0 = c.E_J * (4.0 + 20.0 * u(rng));
    c.g = 0.001 + 0.05 * u(rng);
    CHECK(couplings(w, c).lambda1 == 0.0);
    c.phi_e = pi;
    CHECK(couplings(w, c).lambda2 == 0.0);
    c.phi_e = 0.2 + 2.7 * u(rng);
    const CouplingSet cs = couplings(w, c);
    const double ratio = std::sin(c.phi_e / 2) / (c.g * std::cos(c.phi_e / 2));
    CHECK(cs.lambda1 / cs.lambda2 == doctest::Approx(ratio).epsilon(1e-12));
  }
}

TEST_CASE("optimal working point against a 10x finer grid") {
  const WireParams w = wire();
  for (double phi_e : {0.0, 0.35}) {
    const CircuitParams c = circuit(phi_e);
    const WorkingPoint wp = optimal_working_point(w, c, CouplingKind::lambda2);
    double fine = 0.0;
    for (int i = 1; i < 31416; ++i) {
      CircuitParams p = c;
      p.phi_c = i * 1e-4;
      fine = std::max(fine, std::abs(couplings(w, p).lambda2));
    }
    CHECK(std::abs(wp.coupling) >= fine * (1 - 1e-6));
    CircuitParams at = c;
    at.phi_c = wp.phi_c;
    CHECK(couplings(w, at).lambda2 == doctest::Approx(wp.coupling).epsilon(1e-12));
  }
  const WorkingPoint none = optimal_working_point(w, circuit(0.0), CouplingKind::lambda1);
  CHECK(none.coupling == 0.0);
}

TEST_CASE("maximum cavity coupling against eta g Delta0") {
  const CircuitParams c = circuit(0.0);
  const WorkingPoint wp = optimal_working_point(wire(), c, CouplingKind::lambda2);
  const double reference = c.eta() * c.g * wire().Delta0;
  CHECK(reference == doctest::Approx(two_pi * 32e6).epsilon(1e-12));
  const double ratio = std::abs(wp.coupling) / reference;
  CHECK(ratio >= 0.1);
  CHECK(ratio <= 1.0);
}

TEST_CASE("H_CT structure") {
  CouplingSet cs = couplings(wire(), circuit(0.0));
  const HamiltonianModel model{12, two_pi * 64e6, two_pi * 7e9};
  const Operator h = build_H_CT(cs, model);
  CHECK(h.rows() == 48);
  CHECK(tqi::testing::max_abs(h - h.adjoint()) <= 1e-12 * max_abs(h));
  // <00,1|H|00,0>: both tau_z = +1 and <1|a^dag|0> = 1.
  CHECK(std::abs(h(1, 0) - Scalar(-2.0 * cs.lambda2)) <= 1e-9 * std::abs(cs.lambda2));

  cs.lambda2 = 0.0;
  const Operator h0 = build_H_CT(cs, model);
  const ModelOperators o(12);
  CHECK(max_abs(commutator(h0, o.number)) <= 1e-12 * max_abs(h0));

  const HamiltonianModel small{6, 1.0, 1.0};
  CHECK_THROWS_AS(build_H_CT(cs, small), std::invalid_argument);
}

TEST_CASE("H_I structure") {
  const ModelOperators o(10);
  const double l2 = 0.7, nu = 1.4;
  CHECK(max_abs(build_H_I(l2, nu, o, 0.0) + l2 * (o.a + o.a_dag) * o.J_z) <= 1e-15);

  const Eigen::VectorXcd jz = o.J_z.diagonal();
  for (Index q = 0; q < 4; ++q)
    CHECK(jz(q * 10).real() == doctest::Approx(q == 0 ? 1.0 : q == 3 ? -1.0 : 0.0));

  for (double t : {0.0, 0.3, 2.2}) {
    const Operator h = build_H_I(l2, nu, o, t);
    CHECK(max_abs(h - h.adjoint()) <= 1e-12);
    // J_z = 0 block (|01>, |10>) is decoupled: its rows and columns vanish.
    CHECK(max_abs(h.middleRows(10, 20)) == 0.0);
    CHECK(max_abs(h.middleCols(10, 20)) == 0.0);
  }
  CHECK_THROWS_AS(build_H_I(l2, 0.0, o, 0.0), std::invalid_argument);
}

TEST_CASE("single-interface Hamiltonian") {
  const CouplingSet cs = couplings(wire(), circuit(pi));
  const Operator h = build_H_single_interface(cs);
  CHECK(max_abs(h - h.adjoint()) <= 1e-12 * std::abs(cs.lambda1));
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const auto ev = es.eigenvalues();
  const double half = 0.5 * std::abs(cs.lambda1);
  CHECK(ev(0) == doctest::Approx(-half).epsilon(1e-12));
  CHECK(ev(1) == doctest::Approx(-half).epsilon(1e-12));
  CHECK(ev(2) == doctest::Approx(half).epsilon(1e-12));
  CHECK(ev(3) == doctest::Approx(half).epsilon(1e-12));
  // Conserves the topological qubit's tau_z.
  const Operator tz = tensor({ops::identity(2), ops::sigma_z()});
  CHECK(max_abs(commutator(h, tz)) <= 1e-12 * std::abs(cs.lambda1));

  CHECK_THROWS_AS(build_H_single_interface(couplings(wire(), circuit(0.0))), std::invalid_argument);
}
