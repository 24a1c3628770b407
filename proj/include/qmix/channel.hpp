// Copyright 2026 The qmix Authors
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

// channel.hpp: quantum channels, Lindblad generators and their
// superoperator representations.
//
// All types here are immutable after construction. A QuantumChannel keeps
// its Kraus operators and the d^2 x d^2 superoperator side by side and
// classifies itself (unitality, primitivity, fixed point) when built.

#pragma once

#include "qmix/error.hpp"
#include "qmix/linalg.hpp"

#include <optional>
#include <vector>

namespace qmix {

/// A linear map on d x d matrices acting on row-vectorized matrices.
class Superoperator {
 public:
  Superoperator() = default;
  explicit Superoperator(Matrix mat);

  static Superoperator identity(Index dim);
  static Superoperator zero(Index dim);

  Index dim() const { return dim_; }
  const Matrix& matrix() const { return mat_; }

  Matrix apply(const Matrix& x) const;
  Superoperator adjoint() const { return Superoperator(mat_.adjoint()); }

  /// (a * b) acts as a after b.
  friend Superoperator operator*(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator+(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator-(const Superoperator& a, const Superoperator& b);

 private:
  Index dim_ = 0;
  Matrix mat_;
};

/// Hermitian, positive semidefinite, unit-trace matrix. The stored matrix is
/// the Hermitian part of the input.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m, const Tolerances& tol = kDefaultTolerances);

  static DensityMatrix maximally_mixed(Index dim);
  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix basis_state(Index dim, Index i);
  static DensityMatrix diagonal(const RealVector& probabilities);
  /// Hermitizes, clips eigenvalues below zero and renormalizes the trace.
  /// Meant for outputs of numerically exact maps, not for validation.
  static DensityMatrix normalized(const Matrix& m);

  Index dim() const { return mat_.rows(); }
  const Matrix& matrix() const { return mat_; }

 private:
  struct Unchecked {};
  DensityMatrix(Matrix m, Unchecked) : mat_(std::move(m)) {}
  Matrix mat_;
};

/// Completely positive map in Kraus form, not necessarily trace preserving.
/// Duals of channels are of this type.
class KrausMap {
 public:
  explicit KrausMap(std::vector<Matrix> kraus);

  Index dim() const { return superop_.dim(); }
  const std::vector<Matrix>& kraus() const { return kraus_; }
  const Superoperator& superop() const { return superop_; }
  Matrix apply(const Matrix& x) const;

 private:
  std::vector<Matrix> kraus_;
  Superoperator superop_;
};

struct ChannelClass {
  bool unital = false;
  bool primitive = false;
  /// Eigenvalues of the superoperator with modulus >= 1 - tol.spec.
  std::vector<cplx> peripheral_eigenvalues;
};

class QuantumChannel {
 public:
  static QuantumChannel from_kraus(std::vector<Matrix> kraus, double tol = kDefaultTolerances.cpt);
  /// Recovers Kraus operators from the Choi matrix of `s`.
  static QuantumChannel from_superoperator(const Superoperator& s,
                                           double tol = kDefaultTolerances.cpt);
  static QuantumChannel identity(Index dim);
  static QuantumChannel unitary(const Matrix& u);

  Index dim() const { return map_.dim(); }
  const std::vector<Matrix>& kraus() const { return map_.kraus(); }
  const Superoperator& superop() const { return map_.superop(); }
  const KrausMap& as_kraus_map() const { return map_; }

  /// Kraus route: sum_mu A_mu X A_mu^dagger.
  Matrix apply(const Matrix& x) const { return map_.apply(x); }
  DensityMatrix apply(const DensityMatrix& rho) const;

  double completeness_residual() const { return completeness_residual_; }
  const ChannelClass& classification() const { return class_; }
  /// Set iff the channel is primitive.
  const std::optional<DensityMatrix>& cached_fixed_point() const { return fixed_point_; }
  /// Eigenvalues of the superoperator, sorted by decreasing modulus.
  const std::vector<cplx>& eigenvalues() const { return eigenvalues_; }

 private:
  explicit QuantumChannel(KrausMap map);
  KrausMap map_;
  double completeness_residual_ = 0.0;
  ChannelClass class_;
  std::optional<DensityMatrix> fixed_point_;
  std::vector<cplx> eigenvalues_;
};

/// Adjoint with respect to the Hilbert-Schmidt product: Kraus {A_mu^dagger},
/// superoperator equal to the conjugate transpose.
KrausMap dual(const QuantumChannel& t);
KrausMap dual(const KrausMap& t);

/// Unique full-rank fixed point of a primitive channel. Throws NotPrimitive
/// otherwise, or InvariantViolation if the residual ||T(s) - s||_F exceeds tol.
DensityMatrix fixed_point(const QuantumChannel& t, double tol = 1e-10);

ChannelClass classify(const QuantumChannel& t);

/// State used as reference by the spectral analyses: the fixed point of a
/// primitive channel, or 1/d for a unital one. Throws NotPrimitive otherwise.
DensityMatrix reference_state(const QuantumChannel& t);

/// Choi matrix C = sum_ij |i><j| (x) T(|i><j|), indexed (i*d + a, j*d + b).
Matrix choi(const Superoperator& s);
/// Kraus operators sqrt(lambda) * reshape(v) from the Choi eigendecomposition.
/// Throws NonPositiveChoi when an eigenvalue is below -psd_tol * max(1, ||C||).
std::vector<Matrix> kraus_from_choi(const Matrix& c, Index dim, double psd_tol = kDefaultTolerances.psd);

/// Generator L(rho) = -i[H, rho] + sum_k (V rho V^dag - 1/2 {V^dag V, rho}).
class Liouvillian {
 public:
  Liouvillian(Matrix hamiltonian, std::vector<Matrix> jumps, const Tolerances& tol = kDefaultTolerances);

  Index dim() const { return hamiltonian_.rows(); }
  const Superoperator& superop() const { return superop_; }
  const Matrix& hamiltonian() const { return hamiltonian_; }
  const std::vector<Matrix>& jumps() const { return jumps_; }

  Matrix apply(const Matrix& x) const;

 private:
  Matrix hamiltonian_;
  std::vector<Matrix> jumps_;
  Superoperator superop_;
};

Liouvillian lindblad(const Matrix& hamiltonian, const std::vector<Matrix>& jumps);

/// exp(t L) as a superoperator. Throws NegativeTime for t < 0.
Superoperator semigroup(const Liouvillian& l, double t);

/// Unique stationary state of the generator (null vector of its
/// superoperator). Throws NoStationaryState if the kernel is degenerate or,
/// when `require_full_rank` is set, if the state is singular.
DensityMatrix stationary_state(const Liouvillian& l, bool require_full_rank = false,
                               const Tolerances& tol = kDefaultTolerances);

}  // namespace qmix
