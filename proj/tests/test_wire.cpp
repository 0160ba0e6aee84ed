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
#include "tqi/wire.hpp"

using namespace tqi;
using constants::pi;
using tqi::testing::bisect;

namespace {

WireParams device() {
  WireParams p;
  p.Delta0 = constants::two_pi * 32e9;
  return p;
}

// Lowest-mode splitting in units of v_F / L and its Lambda derivative, by
// bisection on the implicit equations and implicit differentiation.
struct Reduced {
  double G;
  double dG;
};

Reduced reduced_splitting(double lam) {
  if (lam < 1.0) {
    const double x = bisect([lam](double x) { return std::cos(x) - lam * std::sin(x) / x; }, 1e-300, pi);
    const double s = std::sin(x);
    const double dx = 1.0 / (std::cos(x) / s - x / (s * s));
    const double G = std::hypot(lam, x);
    return {G, (lam + x * dx) / G};
  }
  const double u = bisect([lam](double u) { return u / std::tanh(u) - lam; }, 1e-9, lam + 1.0);
  const double sh = std::sinh(u);
  const double du = 1.0 / (1.0 / std::tanh(u) - u / (sh * sh));
  // Lambda - u = u (coth u - 1), written without cancellation.
  const double G = std::sqrt(2.0 * u / std::expm1(2.0 * u) * (lam + u));
  return {G, (lam - u * du) / G};
}

double oracle_derivative(const WireParams& p, double phi) {
  const double lam = p.lambda_scale() * std::sin(phi / 2);
  return 0.5 * p.Delta0 * reduced_splitting(lam).dG * std::cos(phi / 2);
}

}  // namespace

TEST_CASE("inverse_x_over_tan fixed points") {
  CHECK(inverse_x_over_tan(0.0, 0) == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(inverse_x_over_tan(0.0, 1) == doctest::Approx(3 * pi / 2).epsilon(1e-14));
  const double oracle = bisect([](double x) { return x / std::tan(x) + 1.0; }, pi / 2 + 1e-9, pi - 1e-9);
  CHECK(std::abs(inverse_x_over_tan(-1.0, 0) - oracle) <= 1e-12);
  CHECK(std::abs(oracle - 2.028757838110434) <= 1e-12);
  CHECK(inverse_x_over_tan(1.0, 0) == 0.0);
  CHECK_THROWS_AS(inverse_x_over_tan(1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(inverse_x_over_tan(0.0, -1), std::invalid_argument);
}

TEST_CASE("property: x/tan x round trip on branches 0..2") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> d(-20.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 3000; ++i) {
    const int n = i % 3;
    double y = d(rng);
    if (n == 0 && y >= 1.0) y = 1.0 - (y - 1.0) / 20.0 - 1e-9;
    const double x = inverse_x_over_tan(y, n);
    CHECK(x > n * pi);
    CHECK(x < (n + 1) * pi);
    worst = std::max(worst, std::abs(x / std::tan(x) - y));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("inverse_x_over_tanh continues branch 0") {
  CHECK(inverse_x_over_tanh(1.0) == 0.0);
  for (double y : {1.0 + 1e-8, 1.01, 2.0, 7.11, 40.0}) {
    const double u = inverse_x_over_tanh(y);
    CHECK(std::abs(u / std::tanh(u) - y) <= 1e-12 * y);
  }
  CHECK_THROWS_AS(inverse_x_over_tanh(0.5), std::invalid_argument);
}

TEST_CASE("wire splitting fixtures") {
  const WireParams p = device();
  const double scale = p.energy_scale();
  CHECK(scale == doctest::Approx(2e10));

  const SplittingResult zero = wire_splitting(p, 0.0);
  CHECK(zero.Lambda == 0.0);
  CHECK(std::abs(zero.E - pi * 1e10) <= 1e-12 * zero.E);

  const double eps1 = 2.0 * std::asin(1.0 / p.lambda_scale());
  CHECK(std::abs(wire_splitting(p, eps1).E - scale) <= 1e-7 * scale);

  // Deep evanescent point: large-Lambda suppression, value fixed by the oracle.
  const SplittingResult q = wire_splitting(p, pi / 2);
  CHECK(q.branch == WireBranch::evanescent);
  CHECK(q.Lambda == doctest::Approx(32.0 * 5e-6 * constants::two_pi * 1e9 / 1e5 * std::sin(pi / 4)));
  const double oracle = scale * reduced_splitting(q.Lambda).G;
  CHECK(std::abs(q.E - oracle) <= 1e-9 * oracle);
  CHECK(std::abs(q.E - 2.32604126856e8) <= 1e-3 * q.E);
  CHECK(q.E < 0.01 * zero.E);
}

TEST_CASE("wire splitting is continuous across Lambda = 1") {
  const WireParams p = device();
  const double c = p.lambda_scale();
  for (double delta : {1e-4, 1e-6}) {
    const double lo = wire_splitting(p, 2.0 * std::asin((1.0 - delta) / c)).E;
    const double hi = wire_splitting(p, 2.0 * std::asin((1.0 + delta) / c)).E;
    // dG/dLambda at 1 is finite, so the jump scales with delta.
    CHECK(std::abs(hi - lo) <= 2.0 * delta * p.energy_scale());
  }
}

TEST_CASE("wire splitting decays monotonically for Lambda >= 3") {
  const WireParams p = device();
  const double c = p.lambda_scale();
  double prev = wire_splitting(p, 2.0 * std::asin(3.0 / c)).E;
  for (int i = 1; i <= 200; ++i) {
    const double lam = 3.0 + (c - 3.0) * i / 200.0;
    const double e = wire_splitting(p, 2.0 * std::asin(std::min(lam / c, 1.0))).E;
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("wire splitting symmetry about phi = pi and 4 pi period") {
  const WireParams p = device();
  for (double s : {0.1, 0.7, 1.9, 2.8}) {
    CHECK(wire_splitting(p, pi + s).E == doctest::Approx(wire_splitting(p, pi - s).E).epsilon(1e-12));
    CHECK(wire_splitting(p, s + 4 * pi).E == doctest::Approx(wire_splitting(p, s).E).epsilon(1e-10));
  }
}

TEST_CASE("splitting derivative at phi = 0 is -Delta0 / pi") {
  const WireParams p = device();
  const Derivative d = splitting_derivative(p, 0.0);
  CHECK(std::abs(d.value + p.Delta0 / pi) <= 1e-6 * p.Delta0 / pi);
}

TEST_CASE("property: splitting derivative matches implicit differentiation") {
  const WireParams p = device();
  const double c = p.lambda_scale();
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> d(0.0, 2.0 * pi);
  int checked = 0;
  while (checked < 20) {
    const double phi = d(rng);
    if (std::abs(c * std::sin(phi / 2) - 1.0) < 1e-2) continue;
    const double num = splitting_derivative(p, phi).value;
    const double ref = oracle_derivative(p, phi);
    CHECK(std::abs(num - ref) <= 1e-6 * std::max(std::abs(ref), 1e-6 * p.Delta0));
    ++checked;
  }
  // Antisymmetry about phi = pi.
  for (double s : {0.2, 1.0, 2.5})
    CHECK(std::abs(splitting_derivative(p, pi + s).value + splitting_derivative(p, pi - s).value) <=
          1e-8 * p.Delta0);
}

TEST_CASE("maximum slope lies in [0.1, 1] Delta0") {
  const WireParams p = device();
  double best = 0.0;
  for (int i = 0; i < 2000; ++i) best = std::max(best, std::abs(oracle_derivative(p, pi * i / 2000.0)));
  CHECK(best >= 0.1 * p.Delta0);
  CHECK(best <= 1.0 * p.Delta0);
  CHECK(std::abs(splitting_derivative(p, 1e-3).value) <= best * (1 + 1e-6));
}

TEST_CASE("thermal leakage") {
  WireParams p = device();
  const double direct = std::exp(-constants::hbar * 2e10 / (constants::k_boltzmann * 0.02));
  CHECK(thermal_leakage(p) == doctest::Approx(direct).epsilon(1e-13));
  CHECK(thermal_leakage(p) == doctest::Approx(4.8168e-4).epsilon(1e-4));
  CHECK(thermal_leakage(p) < 1e-3);
  p.T = 1e6;
  CHECK(thermal_leakage(p) > 0.999);
  p.T = 1e-4;
  CHECK(thermal_leakage(p) < 1e-300);
  p.T = 0.0;
  CHECK_THROWS_AS(thermal_leakage(p), std::invalid_argument);
}

TEST_CASE("parameter checks") {
  WireParams p = device();
  CHECK(p.narrow_wire());
  CHECK(p.warnings().empty());
  p.W = 1e-6;
  CHECK_FALSE(p.warnings().empty());
  p.Delta0 = 0.0;
  CHECK_THROWS_AS(wire_splitting(p, 0.1), std::invalid_argument);
}
