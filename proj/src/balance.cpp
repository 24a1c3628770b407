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


#include "qmix/balance.hpp"

#include "qmix/metric.hpp"

#include <cmath>
#include <sstream>

namespace qmix {

namespace {

void require_full_rank(const DensityMatrix& sigma) {
  const RealVector ev = eigh(sigma.matrix()).values;
  if (ev.minCoeff() <= 1e-12 * ev.maxCoeff())
    throw Error(ErrorKind::SingularSigma, "sigma must be full rank");
}

}  // namespace

DetailedBalanceReport db_residual(const QuantumChannel& t, const DensityMatrix& sigma, const KFunction& k,
                                  double tol) {
  if (sigma.dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "db_residual: sigma dimension");
  require_full_rank(sigma);
  const Matrix inv = InversionOperator(sigma, k).power(-1.0).matrix();
  const Matrix& tm = t.superop().matrix();
  DetailedBalanceReport r{k, inv * tm.adjoint() - tm * inv, 0.0, false};
  r.residual_norm = r.residual_matrix.norm();
  r.holds = r.residual_norm <= tol;
  return r;
}

bool db_fixed_point_check(const QuantumChannel& t, const DensityMatrix& sigma, const KFunction&, double tol) {
  if (sigma.dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "db_fixed_point_check: sigma dimension");
  return (t.apply(sigma.matrix()) - sigma.matrix()).norm() <= tol;
}

ElementwiseReport db_elementwise(const QuantumChannel& t, const RealVector& mu, const Matrix& basis,
                                 const KFunction& k, double tol) {
  const Index d = t.dim();
  if (mu.size() != d || basis.rows() != d || basis.cols() != d)
    throw Error(ErrorKind::DimensionMismatch, "db_elementwise: mu and basis must match the channel dimension");
  if (mu.minCoeff() <= 0.0 || std::abs(mu.sum() - 1.0) > 1e-10)
    throw Error(ErrorKind::InvalidDistribution, "mu must be strictly positive and sum to 1");
  if ((basis.adjoint() * basis - Matrix::Identity(d, d)).norm() > 1e-10)
    throw Error(ErrorKind::InvalidArgument, "basis columns must be orthonormal");

  // images[n*d + m] = T(|n><m|) expressed in the basis.
  std::vector<Matrix> images(static_cast<std::size_t>(d * d));
  for (Index n = 0; n < d; ++n)
    for (Index m = 0; m < d; ++m)
      images[static_cast<std::size_t>(n * d + m)] =
          basis.adjoint() * t.apply(Matrix(basis.col(n) * basis.col(m).adjoint())) * basis;

  auto weight = [&](Index a, Index b) { return mu(a) / k_eval(k, mu(b) / mu(a)); };
  ElementwiseReport r;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index n = 0; n < d; ++n)
        for (Index m = 0; m < d; ++m) {
          const cplx lhs = weight(n, m) * images[static_cast<std::size_t>(n * d + m)](i, j);
          const cplx rhs = weight(i, j) * images[static_cast<std::size_t>(j * d + i)](m, n);
          r.max_violation = std::max(r.max_violation, std::abs(lhs - rhs));
        }
  r.holds = r.max_violation <= tol;
  return r;
}

QuantumChannel classical_embed(const RealMatrix& p) {
  if (p.rows() != p.cols() || p.rows() == 0)
    throw Error(ErrorKind::NotStochastic, "transition matrix must be square and non-empty");
  if (!p.allFinite() || p.minCoeff() < 0.0)
    throw Error(ErrorKind::NotStochastic, "transition matrix has negative or non-finite entries");
  const Index d = p.rows();
  for (Index j = 0; j < d; ++j) {
    const double s = p.col(j).sum();
    if (std::abs(s - 1.0) > 1e-10) {
      std::ostringstream os;
      os << "column " << j << " sums to " << s;
      throw Error(ErrorKind::NotStochastic, os.str());
    }
  }
  std::vector<Matrix> kraus;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      if (p(i, j) > 0.0) {
        Matrix a = Matrix::Zero(d, d);
        a(i, j) = std::sqrt(p(i, j));
        kraus.push_back(std::move(a));
      }
  return QuantumChannel::from_kraus(std::move(kraus));
}

QuantumChannel symmetrize(const QuantumChannel& t, const DensityMatrix& sigma) {
  if (sigma.dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "symmetrize: sigma dimension");
  require_full_rank(sigma);
  const Matrix root = psd_power(sigma.matrix(), 0.5);
  const Matrix inv_root = psd_power(sigma.matrix(), -0.5);
  std::vector<Matrix> kraus;
  for (const Matrix& ai : t.kraus())
    for (const Matrix& aj : t.kraus()) kraus.push_back(root * ai.adjoint() * inv_root * aj);
  QuantumChannel ts = QuantumChannel::from_kraus(std::move(kraus));
  if (db_fixed_point_check(t, sigma, KFunction::mean_alpha(0.5))) {
    const DetailedBalanceReport r = db_residual(ts, sigma, KFunction::mean_alpha(0.5));
    if (!r.holds) {
      std::ostringstream os;
      os << "symmetrized channel violates mean-alpha(0.5) detailed balance, residual " << r.residual_norm;
      throw Error(ErrorKind::InvariantViolation, os.str());
    }
  }
  return ts;
}

}  // namespace qmix
