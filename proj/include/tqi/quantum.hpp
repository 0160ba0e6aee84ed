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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace tqi {

using Scalar = std::complex<double>;
using Index = Eigen::Index;
using Operator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Dims = std::vector<Index>;

inline constexpr Scalar kI{0.0, 1.0};

// ---------------------------------------------------------------------------
// Operator predicates
// ---------------------------------------------------------------------------

/// max |A - A^dagger| over entries.
template <typename Derived>
double hermiticity_deviation(const Eigen::MatrixBase<Derived>& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// max |U^dagger U - 1| over entries.
template <typename Derived>
double unitarity_deviation(const Eigen::MatrixBase<Derived>& u) {
  const Index n = u.cols();
  return (u.adjoint() * u - Operator::Identity(n, n)).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-10) {
  return a.rows() == a.cols() && hermiticity_deviation(a) <= tol;
}

template <typename DerivedA, typename DerivedB>
Operator commutator(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  return a * b - b * a;
}

// ---------------------------------------------------------------------------
// Construction and exponentials
// ---------------------------------------------------------------------------

/// Kronecker product in the given order; the first factor is the most
/// significant index. Throws std::invalid_argument on an empty list.
Operator tensor(std::span<const Operator> ops);
Operator tensor(std::initializer_list<Operator> ops);

/// exp(-i H t) for Hermitian H by eigendecomposition.
/// Throws std::invalid_argument if H is not Hermitian within
/// 1e-10 * max(1, max|H_ij|).
Operator expm_hermitian(const Operator& h, double t);

/// General matrix exponential (scaling and squaring, Pade 13).
Operator expm(const Operator& a);

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// Bounds a density matrix is checked against on construction.
struct StateTolerances {
  double trace = 1e-8;
  double hermiticity = 1e-10;
  double min_eigenvalue = -1e-8;
};

struct DensityDiagnostics {
  double trace_deviation = 0.0;
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
};

DensityDiagnostics diagnose_density(const Operator& rho);

/// A pure state vector or a density matrix over a list of subsystems.
/// Both kinds validate their invariants on construction and are immutable.
class QuantumState {
 public:
  enum class Kind { pure, mixed };

  /// Throws std::invalid_argument unless |psi| = 1 within 1e-10 and the
  /// length matches prod(dims).
  static QuantumState pure(Dims dims, StateVector psi);
  /// Throws std::invalid_argument on a shape mismatch and PhysicalityError
  /// when a bound in `tol` is violated.
  static QuantumState mixed(Dims dims, Operator rho, const StateTolerances& tol = {});

  /// Normalizes psi first. Throws on a zero vector.
  static QuantumState normalized(Dims dims, StateVector psi);

  Kind kind() const { return kind_; }
  bool is_pure() const { return kind_ == Kind::pure; }
  const Dims& dims() const { return dims_; }
  Index dim() const;

  /// Throws std::logic_error for a mixed state.
  const StateVector& amplitudes() const;
  /// |psi><psi| for pure states.
  Operator density_matrix() const;
  QuantumState to_mixed() const;

 private:
  QuantumState(Kind kind, Dims dims, StateVector psi, Operator rho)
      : kind_(kind), dims_(std::move(dims)), psi_(std::move(psi)), rho_(std::move(rho)) {}

  Kind kind_;
  Dims dims_;
  StateVector psi_;
  Operator rho_;
};

/// Tensor product of states; the result is pure iff both inputs are.
QuantumState tensor(const QuantumState& a, const QuantumState& b);

/// Reduced density matrix over the subsystems in `keep` (kept in their
/// original order). Throws std::out_of_range for an invalid index.
QuantumState partial_trace(const QuantumState& state, std::vector<std::size_t> keep);

/// <psi| rho |psi> (or |<phi|psi>|^2 for a pure rho). psi must be pure.
double state_fidelity(const QuantumState& rho, const QuantumState& psi);

/// Von Neumann entropy in bits of the reduced state on `cut`.
/// Throws std::invalid_argument for a mixed input.
double entanglement_entropy(const QuantumState& psi, std::vector<std::size_t> cut);

/// Entropy in bits of a density matrix; eigenvalues below 1e-15 are dropped.
double von_neumann_entropy(const Operator& rho);

// ---------------------------------------------------------------------------
// Standard operators
// ---------------------------------------------------------------------------

namespace ops {

Operator identity(Index n);
Operator sigma_x();
Operator sigma_y();
Operator sigma_z();   // diag(1, -1)
Operator lowering();  // |0><1|
Operator raising();   // |1><0|
/// Truncated annihilation operator on Fock states 0..n-1.
Operator annihilation(Index n);
Operator number(Index n);

}  // namespace ops

/// Computational basis vector of length n.
StateVector basis(Index n, Index k);

}  // namespace tqi
