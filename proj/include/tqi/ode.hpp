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
#include <cstddef>
#include <limits>
#include <sstream>

#include <Eigen/Core>

#include "tqi/errors.hpp"

namespace tqi {

struct OdeOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  double initial_step = 0.0;  // 0 picks one from the tolerances
  std::size_t max_steps = 5'000'000;
};

struct OdeStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evaluations = 0;
};

/// Dormand-Prince 5(4) stepper for dense Eigen states (vector or matrix,
/// real or complex). The right-hand side is called as rhs(t, y, dydt).
///
/// Call advance() repeatedly to hit output times exactly; the step size
/// carries over between calls.
template <typename State, typename Rhs>
class Dopri5 {
 public:
  Dopri5(Rhs rhs, OdeOptions opts = {}) : rhs_(std::move(rhs)), opts_(opts) {}

  /// Integrate y from t to t_end in place. Throws ConvergenceError when the
  /// step size collapses or the step budget is exhausted.
  void advance(double& t, State& y, double t_end) {
    if (t_end <= t) return;
    if (!have_k1_) {
      k1_.resizeLike(y);
      rhs_(t, y, k1_);
      ++stats_.rhs_evaluations;
      have_k1_ = true;
    }
    if (h_ <= 0.0) h_ = opts_.initial_step > 0.0 ? opts_.initial_step : initial_step(t, y, t_end);

    while (t < t_end) {
      if (stats_.accepted + stats_.rejected >= opts_.max_steps)
        throw ConvergenceError("Dopri5: step budget exhausted");
      bool last = false;
      double h = h_;
      if (t + h >= t_end) {
        h = t_end - t;
        last = true;
      }
      if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(t)) {
        std::ostringstream os;
        os << "Dopri5: step size underflow at t = " << t;
        throw ConvergenceError(os.str());
      }
      const double err = step(t, y, h);
      if (err <= 1.0) {
        t = last ? t_end : t + h;
        y.swap(y_new_);
        k1_.swap(k7_);  // first-same-as-last
        ++stats_.accepted;
        const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        // Do not let a short final step shrink the carried step size.
        h_ = last ? std::max(h_, h * fac) : h * fac;
      } else {
        ++stats_.rejected;
        h_ = h * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      }
    }
  }

  const OdeStats& stats() const { return stats_; }

 private:
  double error_norm(const State& y0, const State& y1, const State& e) const {
    const auto scale =
        (opts_.atol + opts_.rtol * y0.array().abs().max(y1.array().abs())).eval();
    return std::sqrt((e.array().abs() / scale).square().mean());
  }

  double initial_step(double t, const State& y, double t_end) {
    // Hairer-Norsett-Wanner starting step heuristic.
    const auto scale = (opts_.atol + opts_.rtol * y.array().abs()).eval();
    const double d0 = std::sqrt((y.array().abs() / scale).square().mean());
    const double d1 = std::sqrt((k1_.array().abs() / scale).square().mean());
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, t_end - t);
    State y1 = y + h0 * k1_;
    State f1;
    f1.resizeLike(y);
    rhs_(t + h0, y1, f1);
    ++stats_.rhs_evaluations;
    const double d2 = std::sqrt(((f1 - k1_).array().abs() / scale).square().mean()) / h0;
    const double h1 = std::max(d1, d2) <= 1e-15 ? std::max(1e-6, h0 * 1e-3)
                                                : std::pow(0.01 / std::max(d1, d2), 0.2);
    return std::min(100.0 * h0, h1);
  }

  double step(double t, const State& y, double h) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    k2_.resizeLike(y);
    k3_.resizeLike(y);
    k4_.resizeLike(y);
    k5_.resizeLike(y);
    k6_.resizeLike(y);
    k7_.resizeLike(y);

    tmp_ = y + h * (a21 * k1_);
    rhs_(t + c2 * h, tmp_, k2_);
    tmp_ = y + h * (a31 * k1_ + a32 * k2_);
    rhs_(t + c3 * h, tmp_, k3_);
    tmp_ = y + h * (a41 * k1_ + a42 * k2_ + a43 * k3_);
    rhs_(t + c4 * h, tmp_, k4_);
    tmp_ = y + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
    rhs_(t + c5 * h, tmp_, k5_);
    tmp_ = y + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
    rhs_(t + h, tmp_, k6_);
    y_new_ = y + h * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
    rhs_(t + h, y_new_, k7_);
    stats_.rhs_evaluations += 6;

    tmp_ = h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);
    return error_norm(y, y_new_, tmp_);
  }

  Rhs rhs_;
  OdeOptions opts_;
  OdeStats stats_;
  double h_ = 0.0;
  bool have_k1_ = false;
  State k1_, k2_, k3_, k4_, k5_, k6_, k7_, tmp_, y_new_;
};

template <typename State, typename Rhs>
Dopri5<State, Rhs> make_dopri5(Rhs rhs, OdeOptions opts = {}) {
  return Dopri5<State, Rhs>(std::move(rhs), opts);
}

}  // namespace tqi
