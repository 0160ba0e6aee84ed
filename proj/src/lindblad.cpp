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

#include "tqi/lindblad.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <Eigen/SparseCore>

#include "tqi/errors.hpp"

namespace tqi {

namespace {

using SparseOperator = Eigen::SparseMatrix<Scalar>;

SparseOperator to_sparse(const Operator& m) { return m.sparseView(1.0, 0.0); }

// Generator in the form  -i (K rho - rho K^dagger) + sum 2 r L rho L^dagger
// with K = H - i sum r L^dagger L. The operators are sparse for every model
// in this library, so products are taken sparse-times-dense.
class Generator {
 public:
  explicit Generator(const LindbladSpec& spec) : spec_(spec) {
    if (!spec.hamiltonian) throw std::invalid_argument("LindbladSpec: missing Hamiltonian");
    const Operator h0 = spec.hamiltonian(0.0);
    if (h0.rows() != h0.cols()) throw std::invalid_argument("LindbladSpec: H must be square");
    dim_ = h0.rows();
    Operator damping = Operator::Zero(dim_, dim_);
    for (const Channel& c : spec.channels) {
      if (c.op.rows() != dim_ || c.op.cols() != dim_)
        throw std::invalid_argument("LindbladSpec: collapse operator dimension mismatch");
      if (c.rate < 0.0) throw std::invalid_argument("LindbladSpec: negative rate");
      if (c.rate == 0.0) continue;
      damping += c.rate * (c.op.adjoint() * c.op);
      jumps_.push_back(to_sparse(c.op));
      jumps_adj_.push_back(to_sparse(c.op.adjoint()));
      rates2_.push_back(2.0 * c.rate);
    }
    damping_ = to_sparse(damping);
  }

  Index dim() const { return dim_; }

  void operator()(double t, const Operator& rho, Operator& out) const {
    const Operator h = spec_.hamiltonian(t);
    if (h.rows() != dim_ || h.cols() != dim_)
      throw std::invalid_argument("LindbladSpec: H(t) dimension changed");
    const SparseOperator k = to_sparse(h) - kI * damping_;
    const SparseOperator k_adj = k.adjoint();
    out.noalias() = -kI * (k * rho);
    out.noalias() += kI * (rho * k_adj);
    for (std::size_t j = 0; j < jumps_.size(); ++j) {
      const Operator l_rho = jumps_[j] * rho;
      out.noalias() += rates2_[j] * (l_rho * jumps_adj_[j]);
    }
  }

 private:
  const LindbladSpec& spec_;
  Index dim_ = 0;
  SparseOperator damping_;
  std::vector<SparseOperator> jumps_, jumps_adj_;
  std::vector<double> rates2_;
};

}  // namespace

Operator lindblad_rhs(const LindbladSpec& spec, double t, const Operator& rho) {
  Generator gen(spec);
  Operator out(rho.rows(), rho.cols());
  gen(t, rho, out);
  return out;
}

MasterEquationResult integrate_master_equation(const LindbladSpec& spec, const QuantumState& rho0,
                                               std::span<const double> t_grid,
                                               const MasterEquationOptions& opts) {
  if (t_grid.empty()) throw std::invalid_argument("integrate_master_equation: empty time grid");
  if (t_grid.front() != 0.0)
    throw std::invalid_argument("integrate_master_equation: time grid must start at 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("integrate_master_equation: time grid must increase");

  Generator gen(spec);
  if (rho0.dim() != gen.dim())
    throw std::invalid_argument("integrate_master_equation: state and H dimensions differ");

  auto rhs = [&gen](double t, const Operator& y, Operator& dy) { gen(t, y, dy); };
  auto stepper = make_dopri5<Operator>(rhs, opts.ode);

  MasterEquationResult result;
  result.states.reserve(t_grid.size());
  result.worst.min_eigenvalue = 1.0;

  Operator rho = rho0.density_matrix();
  double t = 0.0;
  for (double t_out : t_grid) {
    stepper.advance(t, rho, t_out);
    const DensityDiagnostics d = diagnose_density(rho);
    result.worst.trace_deviation = std::max(result.worst.trace_deviation, d.trace_deviation);
    result.worst.hermiticity_deviation =
        std::max(result.worst.hermiticity_deviation, d.hermiticity_deviation);
    result.worst.min_eigenvalue = std::min(result.worst.min_eigenvalue, d.min_eigenvalue);
    try {
      result.states.push_back(QuantumState::mixed(rho0.dims(), rho, opts.bounds));
    } catch (const PhysicalityError& e) {
      std::ostringstream os;
      os << "integrate_master_equation: at t = " << t_out << ": " << e.what();
      throw PhysicalityError(os.str());
    }
  }
  result.stats = stepper.stats();
  return result;
}

}  // namespace tqi
