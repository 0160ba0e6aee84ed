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

#include "tqi/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "tqi/errors.hpp"

namespace tqi {

Operator tensor(std::span<const Operator> ops) {
  if (ops.empty()) throw std::invalid_argument("tensor: empty operator list");
  Operator out = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) {
    Operator next = Eigen::kroneckerProduct(out, ops[i]).eval();
    out = std::move(next);
  }
  return out;
}

Operator tensor(std::initializer_list<Operator> ops) {
  return tensor(std::span<const Operator>(ops.begin(), ops.size()));
}

Operator expm_hermitian(const Operator& h, double t) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw std::invalid_argument("expm_hermitian: operator must be square and non-empty");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if (hermiticity_deviation(h) > 1e-10 * scale)
    throw std::invalid_argument("expm_hermitian: operator is not Hermitian");
  const Operator hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> es(hs);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<Scalar>() * (-kI * t)).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Operator expm(const Operator& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: operator must be square");
  return a.exp();
}

// ---------------------------------------------------------------------------

namespace {

Index product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

void check_dims(const Dims& dims, Index n, const char* what) {
  if (dims.empty()) throw std::invalid_argument(std::string(what) + ": empty subsystem list");
  for (Index d : dims)
    if (d < 1) throw std::invalid_argument(std::string(what) + ": subsystem dimension < 1");
  if (product(dims) != n)
    throw std::invalid_argument(std::string(what) + ": dims do not match data size");
}

}  // namespace

DensityDiagnostics diagnose_density(const Operator& rho) {
  DensityDiagnostics d;
  d.trace_deviation = std::abs(rho.trace() - Scalar(1.0));
  d.hermiticity_deviation = hermiticity_deviation(rho);
  const Operator hs = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> es(hs, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

QuantumState QuantumState::pure(Dims dims, StateVector psi) {
  check_dims(dims, psi.size(), "QuantumState::pure");
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "QuantumState::pure: norm " << norm << " differs from 1 by more than 1e-10";
    throw std::invalid_argument(os.str());
  }
  return QuantumState(Kind::pure, std::move(dims), std::move(psi), Operator());
}

QuantumState QuantumState::normalized(Dims dims, StateVector psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("QuantumState::normalized: zero vector");
  psi /= norm;
  return pure(std::move(dims), std::move(psi));
}

QuantumState QuantumState::mixed(Dims dims, Operator rho, const StateTolerances& tol) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("QuantumState::mixed: density matrix must be square");
  check_dims(dims, rho.rows(), "QuantumState::mixed");
  const DensityDiagnostics d = diagnose_density(rho);
  if (d.trace_deviation > tol.trace || d.hermiticity_deviation > tol.hermiticity ||
      d.min_eigenvalue < tol.min_eigenvalue) {
    std::ostringstream os;
    os << "density matrix outside physical bounds: |tr - 1| = " << d.trace_deviation
       << ", hermiticity = " << d.hermiticity_deviation
       << ", min eigenvalue = " << d.min_eigenvalue;
    throw PhysicalityError(os.str());
  }
  return QuantumState(Kind::mixed, std::move(dims), StateVector(), std::move(rho));
}

Index QuantumState::dim() const { return product(dims_); }

const StateVector& QuantumState::amplitudes() const {
  if (kind_ != Kind::pure) throw std::logic_error("QuantumState: amplitudes of a mixed state");
  return psi_;
}

Operator QuantumState::density_matrix() const {
  if (kind_ == Kind::mixed) return rho_;
  return psi_ * psi_.adjoint();
}

QuantumState QuantumState::to_mixed() const {
  if (kind_ == Kind::mixed) return *this;
  return QuantumState(Kind::mixed, dims_, StateVector(), psi_ * psi_.adjoint());
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  if (a.is_pure() && b.is_pure()) {
    StateVector psi = Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval();
    return QuantumState::pure(std::move(dims), std::move(psi));
  }
  Operator rho = Eigen::kroneckerProduct(a.density_matrix(), b.density_matrix()).eval();
  return QuantumState::mixed(std::move(dims), std::move(rho));
}

QuantumState partial_trace(const QuantumState& state, std::vector<std::size_t> keep) {
  const Dims& dims = state.dims();
  const std::size_t m = dims.size();
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (std::size_t k : keep)
    if (k >= m) throw std::out_of_range("partial_trace: subsystem index out of range");

  std::vector<bool> kept(m, false);
  for (std::size_t k : keep) kept[k] = true;

  Dims kept_dims;
  for (std::size_t k : keep) kept_dims.push_back(dims[k]);
  if (kept_dims.empty()) kept_dims.push_back(1);

  // Row-major strides: subsystem 0 is the most significant digit.
  std::vector<Index> stride(m, 1), kept_stride(m, 0);
  for (std::size_t i = m; i-- > 1;) stride[i - 1] = stride[i] * dims[i];
  Index s = 1;
  for (std::size_t i = m; i-- > 0;) {
    if (kept[i]) {
      kept_stride[i] = s;
      s *= dims[i];
    }
  }

  const Index n = state.dim();
  std::vector<Index> kept_index(n), traced_index(n);
  for (Index idx = 0; idx < n; ++idx) {
    Index k = 0, t = 0, rem = idx;
    Index traced_stride = 1;
    for (std::size_t i = m; i-- > 0;) {
      const Index digit = (rem / stride[i]) % dims[i];
      if (kept[i]) {
        k += digit * kept_stride[i];
      } else {
        t += digit * traced_stride;
        traced_stride *= dims[i];
      }
    }
    kept_index[idx] = k;
    traced_index[idx] = t;
  }

  const Index nk = s;
  Operator out = Operator::Zero(nk, nk);
  if (state.is_pure()) {
    const StateVector& psi = state.amplitudes();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (traced_index[i] == traced_index[j])
          out(kept_index[i], kept_index[j]) += psi(i) * std::conj(psi(j));
  } else {
    const Operator rho = state.density_matrix();
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += rho(i, j);
  }
  const StateTolerances loose{1e-8, 1e-9, -1e-8};
  return QuantumState::mixed(std::move(kept_dims), std::move(out), loose);
}

double state_fidelity(const QuantumState& rho, const QuantumState& psi) {
  if (!psi.is_pure()) throw std::invalid_argument("state_fidelity: reference state must be pure");
  if (rho.dim() != psi.dim() || rho.dims() != psi.dims())
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  const StateVector& v = psi.amplitudes();
  if (rho.is_pure()) return std::norm(v.dot(rho.amplitudes()));
  return std::real(v.dot(rho.density_matrix() * v));
}

double von_neumann_entropy(const Operator& rho) {
  const Operator hs = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> es(hs, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

double entanglement_entropy(const QuantumState& psi, std::vector<std::size_t> cut) {
  if (!psi.is_pure()) throw std::invalid_argument("entanglement_entropy: state must be pure");
  return von_neumann_entropy(partial_trace(psi, std::move(cut)).density_matrix());
}

// ---------------------------------------------------------------------------

namespace ops {

Operator identity(Index n) { return Operator::Identity(n, n); }

Operator sigma_x() {
  Operator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Operator sigma_y() {
  Operator m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Operator sigma_z() {
  Operator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Operator lowering() {
  Operator m = Operator::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Operator raising() { return lowering().adjoint(); }

Operator annihilation(Index n) {
  Operator a = Operator::Zero(n, n);
  for (Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

Operator number(Index n) {
  Operator m = Operator::Zero(n, n);
  for (Index k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return m;
}

}  // namespace ops

StateVector basis(Index n, Index k) {
  if (k < 0 || k >= n) throw std::out_of_range("basis: index out of range");
  StateVector v = StateVector::Zero(n);
  v(k) = 1.0;
  return v;
}

}  // namespace tqi
