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

#include "tqi/wire.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tqi/constants.hpp"
#include "tqi/errors.hpp"
#include "tqi/roots.hpp"

namespace tqi {

void WireParams::validate() const {
  if (!(v_F > 0.0)) throw std::invalid_argument("WireParams: v_F must be positive");
  if (!(L > 0.0)) throw std::invalid_argument("WireParams: L must be positive");
  if (!(Delta0 > 0.0)) throw std::invalid_argument("WireParams: Delta0 must be positive");
}

std::vector<std::string> WireParams::warnings() const {
  std::vector<std::string> out;
  if (!narrow_wire()) {
    std::ostringstream os;
    os << "wire is not narrow: W Delta0 / v_F = " << W * Delta0 / v_F << " >= 1";
    out.push_back(os.str());
  }
  return out;
}

const char* to_string(WireBranch b) {
  return b == WireBranch::oscillatory ? "oscillatory" : "evanescent";
}

namespace {

using constants::pi;

// sin(x)/x and its derivative, with series near 0.
double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double sinc_prime(double x) {
  if (std::abs(x) < 1e-4) return -x / 3.0;
  return (x * std::cos(x) - std::sin(x)) / (x * x);
}

double x_coth_x(double u) {
  if (std::abs(u) < 1e-4) return 1.0 + u * u / 3.0;
  return u / std::tanh(u);
}

double x_coth_x_prime(double u) {
  if (std::abs(u) < 1e-4) return 2.0 * u / 3.0;
  const double s = std::sinh(u);
  return 1.0 / std::tanh(u) - u / (s * s);
}

// E / (v_F / L) as a function of Lambda.
double reduced_splitting(double lambda) {
  if (lambda <= 1.0) return std::hypot(lambda, inverse_x_over_tan(lambda, 0));
  const double u = inverse_x_over_tanh(lambda);
  // Lambda - u = 2u / (e^{2u} - 1) at the root; avoids cancellation at large u.
  const double lambda_minus_u = u < 1e-4 ? lambda - u : 2.0 * u / std::expm1(2.0 * u);
  return std::sqrt(lambda_minus_u * (lambda + u));
}

}  // namespace

double inverse_x_over_tan(double y, int n) {
  if (n < 0) throw std::invalid_argument("inverse_x_over_tan: branch index must be >= 0");
  if (!std::isfinite(y)) throw std::invalid_argument("inverse_x_over_tan: y must be finite");
  if (n == 0) {
    if (y > 1.0) throw std::invalid_argument("inverse_x_over_tan: branch 0 requires y <= 1");
    if (y == 1.0) return 0.0;
    // x cot x - y has the sign of cos x - y sinc x on (0, pi).
    auto f = [y](double x) { return std::cos(x) - y * sinc(x); };
    auto df = [y](double x) { return -std::sin(x) - y * sinc_prime(x); };
    return bracketed_newton(f, df, 0.0, pi);
  }
  // On (n pi, (n+1) pi): x cot x - y = (x cos x - y sin x) / sin x.
  auto f = [y](double x) { return x * std::cos(x) - y * std::sin(x); };
  auto df = [y](double x) { return (1.0 - y) * std::cos(x) - x * std::sin(x); };
  return bracketed_newton(f, df, n * pi, (n + 1) * pi);
}

double inverse_x_over_tanh(double y) {
  if (!(y >= 1.0) || !std::isfinite(y))
    throw std::invalid_argument("inverse_x_over_tanh: requires finite y >= 1");
  if (y == 1.0) return 0.0;
  auto f = [y](double u) { return x_coth_x(u) - y; };
  auto df = [](double u) { return x_coth_x_prime(u); };
  return bracketed_newton(f, df, 0.0, y);
}

SplittingResult wire_splitting(const WireParams& p, double eps) {
  p.validate();
  SplittingResult r;
  r.Lambda = p.lambda_scale() * std::sin(0.5 * eps);
  r.branch = r.Lambda <= 1.0 ? WireBranch::oscillatory : WireBranch::evanescent;
  r.E = p.energy_scale() * reduced_splitting(r.Lambda);
  return r;
}

Derivative splitting_derivative(const WireParams& p, double phi) {
  p.validate();
  const double c = p.lambda_scale();
  auto g = [c](double x) { return reduced_splitting(c * std::sin(0.5 * x)); };

  // Ridders' method: Neville extrapolation of central differences.
  constexpr int kTable = 12;
  constexpr double kShrink = 1.4, kShrink2 = kShrink * kShrink, kSafe = 2.0;
  std::array<std::array<double, kTable>, kTable> a{};
  double h = 0.2 / std::max(1.0, c);
  a[0][0] = (g(phi + h) - g(phi - h)) / (2.0 * h);
  double err = std::numeric_limits<double>::max();
  double ans = a[0][0];
  for (int i = 1; i < kTable; ++i) {
    h /= kShrink;
    a[0][i] = (g(phi + h) - g(phi - h)) / (2.0 * h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double e =
          std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
      if (e <= err) {
        err = e;
        ans = a[j][i];
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= kSafe * err) break;
  }

  const double limit = 1e-6 * std::max(std::abs(ans), 1e-6 * c);
  if (err > limit) {
    std::ostringstream os;
    os << "splitting_derivative: extrapolation did not converge at phi = " << phi
       << " (error estimate " << err << ", value " << ans << ")";
    throw ConvergenceError(os.str());
  }
  return {ans * p.energy_scale(), err * p.energy_scale()};
}

double thermal_leakage(const WireParams& p) {
  if (!(p.T > 0.0)) throw std::invalid_argument("thermal_leakage: temperature must be positive");
  return std::exp(-constants::hbar * p.energy_scale() / (constants::k_boltzmann * p.T));
}

}  // namespace tqi
