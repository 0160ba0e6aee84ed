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

#include <cmath>
#include <utility>

namespace tqi {

/// (sin(pi x), cos(pi x)) with exact zeros and units at integer and
/// half-integer x. The coupling switches rely on cos(phi_e / 2) being
/// exactly 0 at phi_e = pi, which std::cos does not give.
inline std::pair<double, double> sincospi(double x) {
  double r = x - 2.0 * std::round(x / 2.0);  // r in [-1, 1]
  if (r == 0.0) return {0.0, 1.0};
  if (r == 0.5) return {1.0, 0.0};
  if (r == -0.5) return {-1.0, 0.0};
  if (r == 1.0 || r == -1.0) return {0.0, -1.0};
  const double a = r * 3.14159265358979323846;
  return {std::sin(a), std::cos(a)};
}

/// (sin(phi/2), cos(phi/2)) with the exact values of sincospi.
inline std::pair<double, double> half_angle(double phi) {
  return sincospi(phi / (2.0 * 3.14159265358979323846));
}

}  // namespace tqi
