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

#include <unsupported/Eigen/KroneckerProduct>

#include "support.hpp"
#include "tqi/constants.hpp"
#include "tqi/errors.hpp"
#include "tqi/lindblad.hpp"
#include "tqi/quantum.hpp"

using namespace tqi;
using tqi::testing::max_abs;

namespace {

QuantumState target_state() {
  // (|++> + i|-->)/sqrt 2 built directly from kets.
  StateVector plus(2), minus(2);
  plus << 1, 1;
  minus << 1, -1;
  plus /= std::sqrt(2.0);
  minus /= std::sqrt(2.0);
  StateVector pp = Eigen::kroneckerProduct(plus, plus).eval();
  StateVector mm = Eigen::kroneckerProduct(minus, minus).eval();
  return QuantumState::pure({2, 2}, (pp + kI * mm) / std::sqrt(2.0));
}

QuantumState bell() {
  StateVector v = StateVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return QuantumState::pure({2, 2}, v);
}

}  // namespace

TEST_CASE("tensor of identities and Pauli structure") {
  CHECK(max_abs(tensor({ops::identity(2), ops::identity(2)}) - Operator::Identity(4, 4)) == 0.0);

  const Operator zi = tensor({ops::sigma_z(), ops::identity(2)});
  const StateVector ket10 = basis(4, 2);
  CHECK(max_abs(zi * ket10 + ket10) == 0.0);

  const Operator xx = tensor({ops::sigma_x(), ops::sigma_x()});
  CHECK(max_abs(xx * xx - Operator::Identity(4, 4)) == 0.0);

  CHECK_THROWS_AS(tensor(std::span<const Operator>{}), std::invalid_argument);
}

TEST_CASE("expm_hermitian closed forms") {
  CHECK(max_abs(expm_hermitian(Operator::Zero(3, 3), 1.7) - Operator::Identity(3, 3)) < 1e-15);

  // exp(-i sigma_z t): -i sigma_z at t = pi/2, -1 at t = pi.
  CHECK(max_abs(expm_hermitian(ops::sigma_z(), constants::pi / 2) + kI * ops::sigma_z()) < 1e-15);
  CHECK(max_abs(expm_hermitian(ops::sigma_z(), constants::pi) + Operator::Identity(2, 2)) < 1e-15);

  CHECK_THROWS_AS(expm_hermitian(ops::lowering(), 1.0), std::invalid_argument);
}

TEST_CASE("expm_hermitian matches a Taylor scaling-and-squaring oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Operator h = tqi::testing::random_hermitian(8, rng);
    const double t = 0.3 + trial;
    const Operator oracle = tqi::testing::taylor_expm(-kI * t * h);
    CHECK(max_abs(expm_hermitian(h, t) - oracle) <= 1e-10);
  }
}

TEST_CASE("general expm agrees with the same oracle on non-normal input") {
  std::mt19937_64 rng(12);
  Operator m = tqi::testing::random_hermitian(6, rng) + kI * tqi::testing::random_hermitian(6, rng);
  m(0, 5) += 2.0;
  CHECK(max_abs(expm(m) - tqi::testing::taylor_expm(m)) <= 1e-10 * max_abs(expm(m)));
}

TEST_CASE("property: expm_hermitian(H, t) expm_hermitian(H, -t) = 1") {
  std::mt19937_64 rng(13);
  for (Index n : {2, 5, 16, 33, 64}) {
    const Operator h = tqi::testing::random_hermitian(n, rng, 3.0);
    const Operator prod = expm_hermitian(h, 0.9) * expm_hermitian(h, -0.9);
    CHECK(max_abs(prod - Operator::Identity(n, n)) <= 1e-10);
  }
}

TEST_CASE("partial trace fixtures") {
  std::mt19937_64 rng(21);
  const Operator ra = tqi::testing::random_density(2, rng);
  const Operator rb = tqi::testing::random_density(3, rng);
  const QuantumState ab = QuantumState::mixed({2, 3}, Eigen::kroneckerProduct(ra, rb).eval());
  CHECK(max_abs(partial_trace(ab, {0}).density_matrix() - ra) < 1e-14);
  CHECK(max_abs(partial_trace(ab, {1}).density_matrix() - rb) < 1e-14);

  const QuantumState half = partial_trace(bell(), {0});
  CHECK(max_abs(half.density_matrix() - 0.5 * Operator::Identity(2, 2)) < 1e-15);

  const QuantumState f = target_state();
  const QuantumState with_vac = tensor(f, QuantumState::pure({5}, basis(5, 0)));
  const QuantumState reduced = partial_trace(with_vac, {0, 1});
  CHECK(max_abs(reduced.density_matrix() - f.density_matrix()) < 1e-15);

  CHECK_THROWS_AS(partial_trace(bell(), {2}), std::out_of_range);
}

TEST_CASE("property: partial trace of random product states factorizes") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    const Index da = 2 + trial % 3, db = 2 + (trial / 3) % 4, dc = 2;
    const Operator ra = tqi::testing::random_density(da, rng);
    const Operator rb = tqi::testing::random_density(db, rng);
    const Operator rc = tqi::testing::random_density(dc, rng);
    const Operator full = Eigen::kroneckerProduct(Eigen::kroneckerProduct(ra, rb).eval(), rc).eval();
    const QuantumState s = QuantumState::mixed({da, db, dc}, full);
    const Operator ac = Eigen::kroneckerProduct(ra, rc).eval();
    CHECK(max_abs(partial_trace(s, {0, 2}).density_matrix() - ac) < 1e-13);
    CHECK(max_abs(partial_trace(s, {1}).density_matrix() - rb) < 1e-13);
  }
}

TEST_CASE("state fidelity fixtures") {
  std::mt19937_64 rng(31);
  const QuantumState psi = QuantumState::pure({2, 2}, tqi::testing::random_state(4, rng));
  CHECK(state_fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-14));

  const QuantumState mixed = QuantumState::mixed({2, 2}, 0.25 * Operator::Identity(4, 4));
  CHECK(state_fidelity(mixed, psi) == doctest::Approx(0.25).epsilon(1e-14));

  const QuantumState pp = QuantumState::pure({2, 2}, StateVector::Constant(4, 0.5));
  CHECK(state_fidelity(pp, target_state()) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("entanglement entropy fixtures") {
  const QuantumState prod = QuantumState::pure({2, 2}, basis(4, 1));
  CHECK(entanglement_entropy(prod, {0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(entanglement_entropy(bell(), {0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entanglement_entropy(target_state(), {0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("state construction rejects unphysical input") {
  CHECK_THROWS_AS(QuantumState::pure({2}, StateVector::Constant(2, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(QuantumState::pure({3}, basis(2, 0)), std::invalid_argument);
  Operator bad = Operator::Zero(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  CHECK_THROWS_AS(QuantumState::mixed({2}, bad), PhysicalityError);
}

TEST_CASE("master equation: zero rates reproduce unitary conjugation") {
  std::mt19937_64 rng(41);
  const Operator h = tqi::testing::random_hermitian(6, rng);
  const Operator rho0 = tqi::testing::random_density(6, rng);
  LindbladSpec spec{[&](double) { return h; }, {}};
  const std::vector<double> grid = {0.0, 0.5, 1.3, 2.0};
  const auto res = integrate_master_equation(spec, QuantumState::mixed({6}, rho0), grid);
  REQUIRE(res.states.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Operator u = expm_hermitian(h, grid[i]);
    CHECK(max_abs(res.states[i].density_matrix() - u * rho0 * u.adjoint()) <= 1e-8);
  }
}

TEST_CASE("master equation: decay laws carry the factor 2") {
  const std::vector<double> grid = {0.0, 0.25, 0.5, 1.0, 2.0};
  const double kappa = 0.7;
  const Index n = 6;
  LindbladSpec cavity{[n](double) { return Operator::Zero(n, n); }, {{ops::annihilation(n), kappa}}};
  const Operator one = basis(n, 1) * basis(n, 1).adjoint();
  const auto rc = integrate_master_equation(cavity, QuantumState::mixed({n}, one), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double photons = (ops::number(n) * rc.states[i].density_matrix()).trace().real();
    CHECK(std::abs(photons - std::exp(-2.0 * kappa * grid[i])) <= 1e-6);
  }

  const double gamma = 1.3;
  LindbladSpec qubit{[](double) { return Operator::Zero(2, 2); }, {{ops::lowering(), gamma}}};
  const Operator excited = basis(2, 1) * basis(2, 1).adjoint();
  const auto rq = integrate_master_equation(qubit, QuantumState::mixed({2}, excited), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p1 = rq.states[i].density_matrix()(1, 1).real();
    CHECK(std::abs(p1 - std::exp(-2.0 * gamma * grid[i])) <= 1e-6);
  }
}

TEST_CASE("master equation: step halving leaves the result unchanged") {
  // Driven, damped qubit: compare default tolerances with 1/32 of them.
  const double omega = 2.0, gamma = 0.3;
  LindbladSpec spec{[&](double t) { return Operator(omega * std::cos(1.5 * t) * ops::sigma_x()); },
                    {{ops::lowering(), gamma}}};
  const Operator g = basis(2, 0) * basis(2, 0).adjoint();
  const std::vector<double> grid = {0.0, 1.0, 3.0};
  MasterEquationOptions fine;
  fine.ode.rtol /= 32;
  fine.ode.atol /= 32;
  const auto a = integrate_master_equation(spec, QuantumState::mixed({2}, g), grid);
  const auto b = integrate_master_equation(spec, QuantumState::mixed({2}, g), grid, fine);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(max_abs(a.states[i].density_matrix() - b.states[i].density_matrix()) <= 1e-7);
  CHECK(a.worst.trace_deviation <= 1e-8);
  CHECK(a.worst.min_eigenvalue >= -1e-8);
}

TEST_CASE("master equation rejects a malformed grid") {
  LindbladSpec spec{[](double) { return Operator::Zero(2, 2); }, {}};
  const QuantumState g = QuantumState::mixed({2}, basis(2, 0) * basis(2, 0).adjoint());
  const std::vector<double> late = {0.1, 0.2};
  const std::vector<double> back = {0.0, 0.2, 0.1};
  CHECK_THROWS_AS(integrate_master_equation(spec, g, late), std::invalid_argument);
  CHECK_THROWS_AS(integrate_master_equation(spec, g, back), std::invalid_argument);
}
