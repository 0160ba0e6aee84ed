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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "tqi/errors.hpp"

namespace tqi {

struct RootOptions {
  double x_tol = 1e-12;
  int max_iterations = 200;
};

/// Safeguarded Newton iteration inside a sign-changing bracket [lo, hi]:
/// a Newton step is taken when it stays inside the current bracket and
/// bisection otherwise, so convergence is guaranteed on any continuous f.
/// Iteration continues past x_tol until the step stalls at rounding level.
/// Throws std::invalid_argument without a sign change and ConvergenceError
/// after max_iterations.
template <typename F, typename DF>
double bracketed_newton(F f, DF df, double lo, double hi, RootOptions opts = {}) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    std::ostringstream os;
    os << "bracketed_newton: no sign change on [" << lo << ", " << hi << "]";
    throw std::invalid_argument(os.str());
  }
  if (flo > 0.0) std::swap(lo, hi);  // now f(lo) < 0 < f(hi)

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (fx < 0.0)
      lo = x;
    else
      hi = x;
    const double dfx = df(x);
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    const bool inside = (next - lo) * (next - hi) < 0.0;
    if (!inside) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
    if (step <= floor || std::abs(hi - lo) <= floor) return x;
    if (step <= opts.x_tol && inside) {
      // One more Newton polish brings the residual to rounding level.
      const double fy = f(x), dfy = df(x);
      if (dfy != 0.0) {
        const double y = x - fy / dfy;
        if ((y - lo) * (y - hi) <= 0.0) x = y;
      }
      return x;
    }
  }
  throw ConvergenceError("bracketed_newton: iteration cap reached");
}

}  // namespace tqi
