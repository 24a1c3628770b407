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


#include "qmix/geometry.hpp"

#include "qmix/balance.hpp"
#include "qmix/mixing.hpp"
#include "qmix/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qmix {

namespace {

constexpr double kImagTol = 1e-10;

void require_qubit(const QuantumChannel& t) {
  if (t.dim() != 2) throw Error(ErrorKind::NotQubit, "expected d = 2, got d = " + std::to_string(t.dim()));
}

void require_unital(const QuantumChannel& t) {
  if (!t.classification().unital) throw Error(ErrorKind::NotUnital, "channel is not unital");
}

double cheeger_ratio(const Matrix& s, const Matrix& proj) {
  const Index d = proj.rows();
  const Matrix image = unvec(s * vec(proj), d);
  const Matrix comp = Matrix::Identity(d, d) - proj;
  return (comp * image).trace().real() / proj.trace().real();
}

}  // namespace

Superoperator BlochChannel::to_superoperator() const {
  Eigen::Matrix4d r = Eigen::Matrix4d::Zero();
  r(0, 0) = 1.0;
  r.block<3, 1>(1, 0) = t;
  r.block<3, 3>(1, 1) = l;
  Matrix s = Matrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) s += 0.5 * r(a, b) * vec(pauli(a)) * vec(pauli(b)).adjoint();
  return Superoperator(s);
}

BlochChannel bloch(const QuantumChannel& t) {
  require_qubit(t);
  Eigen::Matrix4d r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const cplx v = 0.5 * (pauli(a) * t.apply(pauli(b))).trace();
      if (std::abs(v.imag()) > kImagTol)
        throw Error(ErrorKind::InvariantViolation, "Pauli transfer matrix has an imaginary entry");
      r(a, b) = v.real();
    }
  return {r.block<3, 1>(1, 0), r.block<3, 3>(1, 1)};
}

double variational_gap(const QuantumChannel& t, const KFunction& k) {
  const Discriminant d = discriminant(t, k);
  return 1.0 - deflated_top_eigenvalue(d.s_k().matrix(), d.fixed_vector);
}

double variational_ratio(const QuantumChannel& t, const KFunction& k, const Matrix& x) {
  const Discriminant d = discriminant(t, k);
  require_same_dim(x, d.sigma.matrix(), "variational_ratio");
  const Vector v = vec(x);
  const double num = (v.adjoint() * (v - d.s_k().matrix() * v))(0).real();
  const Matrix root = psd_power(d.sigma.matrix(), 0.5);
  const double den = 0.5 * (kron(x, root) - kron(root, x)).squaredNorm();
  return num / den;
}

CheegerReport cheeger_constant(const QuantumChannel& t, const CheegerOptions& opts) {
  require_unital(t);
  const Index d = t.dim();
  const Matrix& tm = t.superop().matrix();
  Matrix s;
  if (opts.use_map_directly) {
    if (!db_residual(t, DensityMatrix::maximally_mixed(d), KFunction::bures()).holds)
      throw Error(ErrorKind::InvalidArgument, "using S = T requires T to be detailed balanced at 1/d");
    s = tm;
  } else {
    s = tm.adjoint() * tm;
  }

  const Vector u = vec(Matrix::Identity(d, d)) / std::sqrt(static_cast<double>(d));
  const Matrix proj_c = Matrix::Identity(d * d, d * d) - u * u.adjoint();
  const double shift = 1.0 + 2.0 * spectral_norm(s);
  const HermitianEigen e = eigh(proj_c * hermitian_part(s) * proj_c - shift * u * u.adjoint());
  const Index top = e.values.size() - 1;

  CheegerReport r;
  r.lambda1 = e.values(top);

  // Eigenbasis of the Hermitian representative of X_1.
  const Matrix x1 = unvec(e.vectors.col(top), d);
  Matrix herm = hermitian_part(x1);
  const Matrix alt = hermitian_part(cplx(0, 1) * x1);
  if (alt.norm() > herm.norm()) herm = alt;
  const Matrix basis = eigh(herm).vectors;

  const int half = static_cast<int>(d / 2);
  r.h = std::numeric_limits<double>::infinity();
  // Subsets in lexicographic order of their sorted index lists, so strict
  // improvement keeps the lexicographically smallest minimizer.
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(d); ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (static_cast<int>(idx.size()) <= half) subsets.push_back(idx);
  }
  std::sort(subsets.begin(), subsets.end());
  for (const auto& idx : subsets) {
    Matrix p = Matrix::Zero(d, d);
    for (int i : idx) p += basis.col(i) * basis.col(i).adjoint();
    const double v = cheeger_ratio(s, p);
    if (v < r.h) {
      r.h = v;
      r.subset = idx;
      r.minimizing_projector = p;
    }
  }

  Rng rng(opts.seed);
  for (int trial = 0; trial < opts.random_restarts && half >= 1; ++trial) {
    const Index rank = 1 + static_cast<Index>(trial % half);
    const Matrix q = haar_unitary(d, rng).leftCols(rank);
    const Matrix p = q * q.adjoint();
    const double v = cheeger_ratio(s, p);
    if (v < r.h - 1e-12) {
      r.h = v;
      r.subset.clear();
      r.minimizing_projector = p;
    }
  }

  r.bounds_ok = r.lower() <= r.lambda1 + 1e-9 && r.lambda1 <= r.upper() + 1e-9;
  return r;
}

double qubit_cheeger(const QuantumChannel& t) {
  require_qubit(t);
  require_unital(t);
  const BlochChannel b = bloch(t);
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(b.l);
  const double s1 = svd.singularValues()(0);
  return 0.5 * (1.0 - s1 * s1);
}

RealMatrix mihail_matrix(const QuantumChannel& t, const Matrix& basis) {
  const Index d = t.dim();
  require_same_dim(basis, Matrix::Zero(d, d), "mihail_matrix");
  const KrausMap dual_map = dual(t);
  RealMatrix p(d, d);
  for (Index j = 0; j < d; ++j) {
    const Matrix image = dual_map.apply(t.apply(Matrix(basis.col(j) * basis.col(j).adjoint())));
    for (Index i = 0; i < d; ++i) p(i, j) = (basis.col(i).adjoint() * image * basis.col(i))(0).real();
  }
  return p;
}

}  // namespace qmix
