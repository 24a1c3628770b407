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

// k-detailed balance: [Omega^k_sigma]^{-1} T^* = T [Omega^k_sigma]^{-1}.

#pragma once

#include "qmix/channel.hpp"
#include "qmix/kfunction.hpp"

namespace qmix {

struct DetailedBalanceReport {
  KFunction k;
  /// Omega^{-1} T^dag - T Omega^{-1} as a d^2 x d^2 matrix.
  Matrix residual_matrix;
  double residual_norm = 0.0;  // Frobenius
  bool holds = false;
};

/// Throws SingularSigma unless sigma has full rank.
DetailedBalanceReport db_residual(const QuantumChannel& t, const DensityMatrix& sigma, const KFunction& k,
                                  double tol = 1e-9);

/// ||T(sigma) - sigma||_F <= tol.
bool db_fixed_point_check(const QuantumChannel& t, const DensityMatrix& sigma, const KFunction& k,
                          double tol = 1e-9);

struct ElementwiseReport {
  double max_violation = 0.0;
  bool holds = false;
};

/// Checks, for all i, j, n, m in the given orthonormal basis (columns),
///   mu_n / k(mu_m/mu_n) <i|T(|n><m|)|j> = mu_i / k(mu_j/mu_i) <m|T(|j><i|)|n>.
/// Throws InvalidDistribution unless mu is strictly positive and sums to 1.
ElementwiseReport db_elementwise(const QuantumChannel& t, const RealVector& mu, const Matrix& basis,
                                 const KFunction& k, double tol = 1e-9);

/// Kraus operators sqrt(P_ij) |i><j| for a column-stochastic P. Throws
/// NotStochastic.
QuantumChannel classical_embed(const RealMatrix& p);

/// Channel with Kraus operators B_ij = sqrt(sigma) A_i^dag sqrt(sigma)^{-1} A_j,
/// i.e. Omega^{-1} T^* Omega T at alpha = 1/2. Throws SingularSigma, or
/// CompletenessViolation when sigma is not a fixed point of T.
QuantumChannel symmetrize(const QuantumChannel& t, const DensityMatrix& sigma);

}  // namespace qmix
