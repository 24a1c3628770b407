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

#include "qmix/linalg.hpp"

#include "qmix/error.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <string>

namespace qmix {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CompletenessViolation: return "CompletenessViolation";
    case ErrorKind::NonPositiveChoi: return "NonPositiveChoi";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NonPositiveFixedPoint: return "NonPositiveFixedPoint";
    case ErrorKind::NonHermitianHamiltonian: return "NonHermitianHamiltonian";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::SingularSigma: return "SingularSigma";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::SingularP: return "SingularP";
    case ErrorKind::InfiniteChi2: return "InfiniteChi2";
    case ErrorKind::NoStationaryState: return "NoStationaryState";
    case ErrorKind::PositiveSpectrum: return "PositiveSpectrum";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotQubit: return "NotQubit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Vector vec(const Matrix& a) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Vector v(rows * cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) v(i * cols + j) = a(i, j);
  return v;
}

Matrix unvec(const Vector& v, Index dim) {
  if (v.size() != dim * dim)
    throw Error(ErrorKind::DimensionMismatch,
                "unvec: vector of length " + std::to_string(v.size()) + " is not " +
                    std::to_string(dim) + "^2");
  Matrix a(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) a(i, j) = v(i * dim + j);
  return a;
}

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

Matrix sandwich(const Matrix& a, const Matrix& b) { return kron(a, b.transpose()); }

Matrix left_mult(const Matrix& y) { return kron(y, Matrix::Identity(y.rows(), y.rows())); }

Matrix right_mult(const Matrix& y) { return kron(Matrix::Identity(y.rows(), y.rows()), y.transpose()); }

Matrix hermitian_part(const Matrix& a) { return (0.5 * (a + a.adjoint())).eval(); }

double hermiticity_residual(const Matrix& a) { return (a - a.adjoint()).norm(); }

HermitianEigen eigh(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part(a));
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::InvariantViolation, "Hermitian eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix psd_power(const Matrix& a, double power, double cutoff) {
  const HermitianEigen e = eigh(a);
  const double scale = e.values.cwiseAbs().maxCoeff();
  RealVector f(e.values.size());
  for (Index i = 0; i < e.values.size(); ++i) {
    const double mu = e.values(i);
    f(i) = (mu <= cutoff * scale || mu <= 0.0) ? 0.0 : std::pow(mu, power);
  }
  return e.vectors * f.cast<cplx>().asDiagonal() * e.vectors.adjoint();
}

RealVector singular_values(const Matrix& a) {
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues();
}

double trace_norm(const Matrix& a) { return singular_values(a).sum(); }

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

cplx hs_inner(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace(); }

void require_square_finite(const Matrix& a, std::string_view what) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  if (!a.allFinite())
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
}

void require_same_dim(const Matrix& a, const Matrix& b, std::string_view what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

Matrix pauli(int index) {
  Matrix m = Matrix::Zero(2, 2);
  switch (index) {
    case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw Error(ErrorKind::InvalidArgument, "pauli index must be 0..3");
  }
  return m;
}

}  // namespace qmix
