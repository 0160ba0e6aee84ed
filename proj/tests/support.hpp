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


// Shared fixtures and independent oracles for the unit suites.

#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "tqi/quantum.hpp"

namespace tqi::testing {

inline Operator random_hermitian(Index n, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> d;
  Operator m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Scalar(d(rng), d(rng));
  return scale * 0.5 * (m + m.adjoint());
}

inline StateVector random_state(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  StateVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = Scalar(d(rng), d(rng));
  return v / v.norm();
}

inline Operator random_density(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  Operator g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) g(i, j) = Scalar(d(rng), d(rng));
  Operator rho = g * g.adjoint();
  return rho / rho.trace().real();
}

/// exp(M) by Taylor series on M / 2^s followed by s squarings.
inline Operator taylor_expm(const Operator& m) {
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  while (norm / std::ldexp(1.0, s) > 0.25) ++s;
  const Operator x = m / std::ldexp(1.0, s);
  Operator term = Operator::Identity(m.rows(), m.cols());
  Operator sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * x / double(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

/// Plain bisection to `tol` on a sign-changing bracket.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     double tol = 1e-13) {
  double flo = f(lo);
  for (int i = 0; i < 400 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double max_abs(const Operator& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace tqi::testing
