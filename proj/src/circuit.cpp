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

#include "tqi/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "tqi/constants.hpp"
#include "tqi/errors.hpp"
#include "tqi/roots.hpp"
#include "tqi/trig.hpp"

namespace tqi {

void CircuitParams::validate() const {
  if (!(E_J > 0.0)) throw std::invalid_argument("CircuitParams: E_J must be positive");
  if (!(E_J0 > 0.0)) throw std::invalid_argument("CircuitParams: E_J0 must be positive");
  if (!(eta() < 0.5)) throw std::invalid_argument("CircuitParams: eta = E_J / E_J0 must be < 0.5");
}

std::vector<std::string> CircuitParams::warnings() const {
  std::vector<std::string> out;
  if (eta() >= 0.3) {
    std::ostringstream os;
    os << "eta = " << eta() << " is outside the second-order series range (< 0.3)";
    out.push_back(os.str());
  }
  if (!(E_J < E_c)) out.emplace_back("not in the charging regime: E_J >= E_c");
  if (n_g != 0.5) out.emplace_back("gate charge is not at the degeneracy point n_g = 1/2");
  return out;
}

double phi_J_series(const CircuitParams& p, double phi, double photon_amp) {
  const double eta = p.eta();
  if (!(eta < 0.3)) throw std::invalid_argument("phi_J_series: requires eta < 0.3");
  const auto [s, c] = half_angle(p.phi_e);
  const double cphi = std::cos(phi);
  return 2.0 * eta * s * cphi - eta * eta * std::sin(p.phi_e) * cphi * cphi +
         2.0 * p.g * eta * c * cphi * photon_amp;
}

double phi_J_exact(const CircuitParams& p, double phi, double photon_amp) {
  const double eta = p.eta();
  if (!(eta < 0.5)) throw std::invalid_argument("phi_J_exact: requires eta < 0.5");
  const double drive = 2.0 * eta * std::cos(phi);
  if (drive == 0.0) return 0.0;
  const double shift = 0.5 * p.phi_e + p.g * photon_amp;
  auto f = [=](double x) { return std::sin(x) - drive * std::sin(shift - 0.5 * x); };
  auto df = [=](double x) { return std::cos(x) + 0.5 * drive * std::cos(shift - 0.5 * x); };
  const double half_pi = 0.5 * constants::pi;
  // |drive| < 1 makes f(-pi/2) < 0 < f(pi/2).
  return bracketed_newton(f, df, -half_pi, half_pi);
}

EffectiveQubit effective_qubit(const CircuitParams& p) {
  p.validate();
  const double eta = p.eta();
  const auto [s, c] = half_angle(p.phi_e);
  EffectiveQubit q;
  q.E_J_bar = 2.0 * p.E_J * c * (1.0 - 0.375 * eta * eta * s * s);
  q.xi = p.g * p.E_J * s;
  q.f1 = -0.25 * eta * eta * (2.0 * s * c);  // sin(phi_e) = 2 s c, exact zeros kept
  q.f2 = eta * s;
  q.f3_coeff = eta * p.g * c;
  q.eps_plus = p.phi_c + q.f1 + q.f2;
  q.eps_minus = p.phi_c + q.f1 - q.f2;
  return q;
}

namespace {

double charge_gap(const CircuitParams& p, int n_max) {
  // Fourier coefficients U_k of the Josephson potential on a uniform grid;
  // U is smooth and periodic so the trapezoid rule is spectrally accurate.
  constexpr int kSamples = 512;
  const int dim = 2 * n_max + 2;
  // Large-junction energy for which the current constraint is the
  // stationarity condition dU/dphi_J = 0: E_J / (2 eta).
  const double e_big = p.E_J / (2.0 * p.eta());
  Eigen::VectorXd u(kSamples);
  for (int j = 0; j < kSamples; ++j) {
    const double phi = constants::two_pi * j / kSamples;
    const double phi_j = phi_J_exact(p, phi, 0.0);
    const double beta = 0.5 * (p.phi_e - phi_j);
    u(j) = -2.0 * p.E_J * std::cos(beta) * std::cos(phi) - e_big * std::cos(phi_j);
  }
  // U(phi) is even in phi, so the coefficients are real cosine sums.
  Eigen::VectorXd coeff(dim);
  for (int k = 0; k < dim; ++k) {
    double acc = 0.0;
    for (int j = 0; j < kSamples; ++j) acc += u(j) * std::cos(constants::two_pi * k * j / kSamples);
    coeff(k) = acc / kSamples;
  }
  Eigen::MatrixXd h(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int col = 0; col < dim; ++col) h(r, col) = coeff(std::abs(r - col));
    const double n = r - n_max;
    h(r, r) += p.E_c * (n - p.n_g) * (n - p.n_g);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(1) - es.eigenvalues()(0);
}

}  // namespace

ChargeOracleResult charge_basis_oracle(const CircuitParams& p, int n_max) {
  p.validate();
  if (p.n_g != 0.5) throw std::invalid_argument("charge_basis_oracle: requires n_g = 1/2");
  if (n_max < 3) throw std::invalid_argument("charge_basis_oracle: requires n_max >= 3");
  constexpr int kLimit = 64;
  double previous = charge_gap(p, n_max);
  for (int n = n_max + 2; n <= kLimit; n += 2) {
    const double gap = charge_gap(p, n);
    const double delta = std::abs(gap - previous);
    if (delta <= 1e-6 * std::max(std::abs(gap), p.E_J)) return {gap, n, delta};
    previous = gap;
  }
  throw ConvergenceError("charge_basis_oracle: charge truncation did not converge");
}

double tunneling_leakage(double lambda1, const CircuitParams& p) {
  if (!(p.E_J > 0.0)) throw std::invalid_argument("tunneling_leakage: E_J must be positive");
  const double r = lambda1 / (2.0 * p.E_J);
  return r * r;
}

}  // namespace tqi
