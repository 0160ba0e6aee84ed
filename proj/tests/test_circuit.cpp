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

#include "support.hpp"
#include "tqi/circuit.hpp"
#include "tqi/constants.hpp"

using namespace tqi;
using constants::pi;
using constants::two_pi;

namespace {

CircuitParams device(double phi_e = 0.0) {
  CircuitParams p;
  p.E_J = two_pi * 16e9;
  p.E_J0 = 10.0 * p.E_J;
  p.E_c = 50.0 * p.E_J;
  p.phi_e = phi_e;
  return p;
}

double exact_oracle(const CircuitParams& p, double phi, double amp) {
  const double eta = p.eta();
  return tqi::testing::bisect(
      [&](double x) { return std::sin(x) - 2 * eta * std::cos(phi) * std::sin(p.phi_e / 2 - x / 2 + p.g * amp); },
      -pi / 2, pi / 2, 1e-15);
}

double ebar(const CircuitParams& p) {
  const double s = std::sin(p.phi_e / 2), c = std::cos(p.phi_e / 2), eta = p.eta();
  return 2 * p.E_J * c * (1 - 0.375 * eta * eta * s * s);
}

}  // namespace

TEST_CASE("phi_J series fixtures") {
  CircuitParams p = device(pi / 2);
  CHECK(phi_J_series(p, 0.0, 0.0) ==
        doctest::Approx(0.2 * std::sin(pi / 4) - 0.01 * std::sin(pi / 2)).epsilon(1e-14));
  CHECK(phi_J_series(p, 0.0, 0.0) == doctest::Approx(0.131421).epsilon(1e-6));
  p.phi_e = pi;
  CHECK(phi_J_series(p, 0.0, 0.0) == doctest::Approx(0.2).epsilon(1e-14));
  p.E_J0 = 1e300;
  CHECK(phi_J_series(p, 0.3, 1.0) == doctest::Approx(0.0));
  p.E_J0 = 3.0 * p.E_J;
  CHECK_THROWS_AS(phi_J_series(p, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("phi_J exact fixtures") {
  CircuitParams p = device(pi);
  const double x = phi_J_exact(p, 0.0, 0.0);
  CHECK(std::abs(x - exact_oracle(p, 0.0, 0.0)) <= 1e-12);
  CHECK(std::abs(x - 0.2003348423231196) <= 1e-12);
  CHECK(std::abs(x - phi_J_series(p, 0.0, 0.0)) <= 1e-3);

  p.phi_e = 0.0;
  p.g = 0.0;
  for (double phi : {0.0, 0.4, 2.0, 5.0}) CHECK(std::abs(phi_J_exact(p, phi, 0.0)) <= 1e-15);

  p.E_J0 = 1.9 * p.E_J;
  CHECK_THROWS_AS(phi_J_exact(p, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("property: series within 5 eta^3 of exact on a 50 x 50 phase grid") {
  CircuitParams p = device();
  const double eta = p.eta();
  double worst = 0.0;
  for (double amp : {-1.0, 0.0, 1.0})
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 50; ++j) {
        p.phi_e = two_pi * i / 50.0;
        const double phi = two_pi * j / 50.0;
        worst = std::max(worst, std::abs(phi_J_series(p, phi, amp) - phi_J_exact(p, phi, amp)));
        if (i % 7 == 0 && j % 7 == 0)
          CHECK(std::abs(phi_J_exact(p, phi, amp) - exact_oracle(p, phi, amp)) <= 1e-12);
      }
  CHECK(worst <= 5 * eta * eta * eta);
}

TEST_CASE("effective qubit fixtures") {
  CircuitParams p = device(0.0);
  EffectiveQubit q = effective_qubit(p);
  CHECK(q.E_J_bar == doctest::Approx(2 * p.E_J).epsilon(1e-15));
  CHECK(q.xi == 0.0);
  CHECK(q.f1 == 0.0);
  CHECK(q.f2 == 0.0);
  CHECK(q.f3_coeff == doctest::Approx(p.eta() * p.g).epsilon(1e-15));

  p.phi_e = pi;
  q = effective_qubit(p);
  CHECK(q.E_J_bar == 0.0);
  CHECK(q.xi == doctest::Approx(p.g * p.E_J).epsilon(1e-15));
  CHECK(q.f2 == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(q.f1 == 0.0);
  CHECK(q.f3_coeff == 0.0);
}

TEST_CASE("property: E_J_bar even and 4 pi periodic, xi peaks at pi") {
  CircuitParams p = device();
  for (double x : {0.3, 1.1, 2.9, 4.0}) {
    p.phi_e = x;
    const double a = effective_qubit(p).E_J_bar;
    CHECK(a == doctest::Approx(ebar(p)).epsilon(1e-14));
    p.phi_e = -x;
    CHECK(effective_qubit(p).E_J_bar == doctest::Approx(a).epsilon(1e-14));
    p.phi_e = x + 4 * pi;
    CHECK(effective_qubit(p).E_J_bar == doctest::Approx(a).epsilon(1e-12));
  }
  const double h = 1e-4;
  p.phi_e = pi + h;
  const double up = effective_qubit(p).xi;
  p.phi_e = pi - h;
  const double down = effective_qubit(p).xi;
  p.phi_e = pi;
  const double top = effective_qubit(p).xi;
  CHECK(std::abs(up - down) <= 1e-12 * top);
  CHECK(top > up);
  for (int i = 0; i <= 40; ++i) {
    p.phi_e = two_pi * i / 40.0;
    CHECK(std::abs(effective_qubit(p).xi) <= top * (1 + 1e-15));
  }
}

TEST_CASE("charge oracle at E_c / E_J = 50") {
  CircuitParams p = device(0.0);
  const ChargeOracleResult r0 = charge_basis_oracle(p, 4);
  CHECK(r0.gap / (2 * p.E_J) >= 0.98);
  CHECK(r0.gap / (2 * p.E_J) <= 1.02);

  p.phi_e = pi;
  CHECK(charge_basis_oracle(p, 4).gap <= 0.02 * p.E_J);

  p.phi_e = 2 * pi / 3;
  const double g = charge_basis_oracle(p, 4).gap;
  CHECK(std::abs(g - std::abs(ebar(p))) <= 0.05 * std::abs(ebar(p)));
}

TEST_CASE("charge oracle error shrinks as E_c / E_J grows") {
  CircuitParams p = device(2 * pi / 3);
  double prev = 1e300;
  for (double ratio : {10.0, 50.0, 200.0}) {
    p.E_c = ratio * p.E_J;
    const double err = std::abs(charge_basis_oracle(p, 4).gap - std::abs(ebar(p))) / std::abs(ebar(p));
    CHECK(err < prev);
    prev = err;
  }
  p.n_g = 0.3;
  CHECK_THROWS_AS(charge_basis_oracle(p, 4), std::invalid_argument);
  p.n_g = 0.5;
  CHECK_THROWS_AS(charge_basis_oracle(p, 2), std::invalid_argument);
}

TEST_CASE("tunneling leakage") {
  const CircuitParams p = device();
  CHECK(tunneling_leakage(0.0, p) == 0.0);
  CHECK(tunneling_leakage(0.2 * p.E_J, p) == doctest::Approx(0.01).epsilon(1e-14));
  CHECK(tunneling_leakage(2 * p.E_J, p) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("circuit regime warnings") {
  CircuitParams p = device();
  CHECK(p.warnings().empty());
  p.E_c = 0.5 * p.E_J;
  CHECK_FALSE(p.warnings().empty());
  p.E_J0 = 1.5 * p.E_J;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
