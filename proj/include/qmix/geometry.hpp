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

// Variational spectral gap, the Cheeger constant of unital channels and the
// Bloch representation of qubit channels.

#pragma once

#include "qmix/channel.hpp"
#include "qmix/kfunction.hpp"

#include <cstdint>
#include <vector>

namespace qmix {

/// Qubit channel in the Pauli basis: T(1/2 (1 + r.s)) = 1/2 (1 + (t + L r).s).
struct BlochChannel {
  Eigen::Vector3d t;
  Eigen::Matrix3d l;

  bool unital(double tol = 1e-10) const { return t.norm() <= tol; }
  /// Row-vectorized superoperator.
  Superoperator to_superoperator() const;
};

/// Throws NotQubit for d != 2.
BlochChannel bloch(const QuantumChannel& t);

/// 1 - lambda1(S_k) with S_k = Q_k^dag Q_k at the reference state.
double variational_gap(const QuantumChannel& t, const KFunction& k);

/// <X, (id - S_k) X> / (1/2 ||X (x) sqrt(sigma) - sqrt(sigma) (x) X||_HS^2).
double variational_ratio(const QuantumChannel& t, const KFunction& k, const Matrix& x);

struct CheegerReport {
  double h = 0.0;
  double lambda1 = 0.0;
  Matrix minimizing_projector;
  /// Indices into the eigenbasis of X_1 when a basis subset attained the
  /// minimum; empty when a random subspace did.
  std::vector<int> subset;
  bool bounds_ok = false;
  double lower() const { return 1.0 - 2.0 * h; }
  double upper() const { return 1.0 - 0.5 * h * h; }
};

struct CheegerOptions {
  /// Use S = T instead of T^* T; requires T to be detailed balanced at 1/d.
  bool use_map_directly = false;
  int random_restarts = 512;
  std::uint64_t seed = 0x5eed;
};

/// h = min over projectors with tr <= floor(d/2) of tr[(1 - P) S(P)] / tr[P].
/// Throws NotUnital.
CheegerReport cheeger_constant(const QuantumChannel& t, const CheegerOptions& opts = {});

/// 1/2 (1 - s1(L)^2), the minimum of the Cheeger ratio over qubit
/// projectors. Throws NotQubit or NotUnital.
double qubit_cheeger(const QuantumChannel& t);

/// P_ij = <i|S(|j><j|)|i> for S = T^* T in the computational basis.
RealMatrix mihail_matrix(const QuantumChannel& t, const Matrix& basis);

}  // namespace qmix
