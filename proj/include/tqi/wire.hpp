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

#include <string>
#include <vector>

namespace tqi {

/// STIS wire hosting the Majorana pair. Energies are angular frequencies
/// (rad/s), lengths in metres.
struct WireParams {
  double v_F = 1e5;       // Fermi velocity, m/s
  double L = 5e-6;        // Majorana separation, m
  double Delta0 = 0.0;    // proximity gap, rad/s
  double W = 50e-9;       // width, m (only used for the narrow-wire check)
  double T = 0.02;        // temperature, K

  /// v_F / L, the natural energy scale.
  double energy_scale() const { return v_F / L; }
  /// Delta0 L / v_F, so that Lambda = lambda_scale() * sin(eps / 2).
  double lambda_scale() const { return Delta0 * L / v_F; }
  /// W Delta0 / v_F < 1.
  bool narrow_wire() const { return W * Delta0 / v_F < 1.0; }

  /// Throws std::invalid_argument unless v_F, L, Delta0 > 0.
  void validate() const;
  std::vector<std::string> warnings() const;
};

enum class WireBranch { oscillatory, evanescent };

const char* to_string(WireBranch b);

struct SplittingResult {
  double E = 0.0;       // rad/s
  double Lambda = 0.0;
  WireBranch branch = WireBranch::oscillatory;
};

struct Derivative {
  double value = 0.0;
  double error = 0.0;  // extrapolation error estimate
};

/// Inverse of y = x / tan(x) on branch n: x in (0, pi) for n = 0 and
/// (n pi, (n+1) pi) for n >= 1. Branch 0 requires y <= 1 (f_0(1) = 0).
/// Throws std::invalid_argument for y outside the branch range and
/// ConvergenceError if the root finder stalls.
double inverse_x_over_tan(double y, int n);

/// Positive root u of u / tanh(u) = y for y >= 1 (u = 0 at y = 1). This is
/// branch 0 continued to x = i u.
double inverse_x_over_tanh(double y);

/// Splitting of the lowest Majorana pair at wire phase eps.
///   Lambda <= 1: E = (v_F/L) sqrt(Lambda^2 + f_0(Lambda)^2)
///   Lambda  > 1: E = (v_F/L) sqrt(Lambda^2 - u^2),  u / tanh(u) = Lambda
/// The two forms are one analytic function of Lambda.
SplittingResult wire_splitting(const WireParams& p, double eps);

/// dE/dphi (rad/s per rad) by Ridders' extrapolation of central
/// differences. Throws ConvergenceError when the error estimate exceeds
/// 1e-6 * max(|dE/dphi|, 1e-6 Delta0).
Derivative splitting_derivative(const WireParams& p, double phi);

/// exp(-hbar (v_F/L) / (k_B T)), the thermal population of the lowest wire
/// mode. Throws std::invalid_argument for T <= 0.
double thermal_leakage(const WireParams& p);

}  // namespace tqi
