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


#include "qmix/random.hpp"

#include <cmath>

namespace qmix {

Matrix ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, std::sqrt(0.5));
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const double re = n(rng);
      const double im = n(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

Matrix random_hermitian(Index dim, Rng& rng) { return hermitian_part(ginibre(dim, dim, rng)); }

Matrix haar_unitary(Index dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < dim; ++j) {
    const cplx rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

Vector random_unit_vector(Index dim, Rng& rng) {
  Vector v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density(Index dim, Rng& rng, Index rank) {
  if (rank <= 0) rank = dim;
  const Matrix g = ginibre(dim, rank, rng);
  const Matrix m = g * g.adjoint();
  return DensityMatrix::normalized(m / m.trace());
}

QuantumChannel random_channel(Index dim, Index kraus_count, Rng& rng) {
  const Matrix g = ginibre(dim * kraus_count, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix iso = qr.householderQ() * Matrix::Identity(dim * kraus_count, dim);
  std::vector<Matrix> kraus;
  for (Index mu = 0; mu < kraus_count; ++mu) kraus.push_back(iso.block(mu * dim, 0, dim, dim));
  return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel random_unital_channel(Index dim, Index unitary_count, Rng& rng) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> w(static_cast<std::size_t>(unitary_count));
  double total = 0.0;
  for (double& x : w) total += (x = ex(rng));
  std::vector<Matrix> kraus;
  for (double x : w) kraus.push_back(std::sqrt(x / total) * haar_unitary(dim, rng));
  return QuantumChannel::from_kraus(std::move(kraus));
}

RealMatrix random_stochastic(Index n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  RealMatrix p(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) p(i, j) = u(rng);
  for (Index j = 0; j < n; ++j) p.col(j) /= p.col(j).sum();
  return p;
}

RealMatrix random_reversible_chain(Index n, Rng& rng, RealVector* pi) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  RealMatrix w(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) w(i, j) = w(j, i) = u(rng);
  // P_ij = W_ij / sum_k W_kj is reversible with pi_j proportional to the
  // column sums: pi_j P_ij = W_ij / Z is symmetric.
  const RealVector col = w.colwise().sum().transpose();
  RealMatrix p(n, n);
  for (Index j = 0; j < n; ++j) p.col(j) = w.col(j) / col(j);
  if (pi) *pi = col / col.sum();
  return p;
}

}  // namespace qmix
