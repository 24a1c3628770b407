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

// linalg.hpp: dense complex helpers: row-major vectorization, Kronecker
// products, Hermitian spectral functions and norms.
//
// Vectorization convention (used everywhere in qmix):
//   vec(A)[i*d + j] = A(i, j)
// so that the map X -> A X B has the d^2 x d^2 matrix kron(A, B^T), left
// multiplication L_Y is kron(Y, 1) and right multiplication R_Y is kron(1, Y^T).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string_view>

namespace qmix {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

Vector vec(const Matrix& a);
Matrix unvec(const Vector& v, Index dim);

Matrix kron(const Matrix& a, const Matrix& b);

/// Superoperator of X -> a X b.
Matrix sandwich(const Matrix& a, const Matrix& b);
/// Superoperator of X -> y X.
Matrix left_mult(const Matrix& y);
/// Superoperator of X -> X y.
Matrix right_mult(const Matrix& y);

Matrix hermitian_part(const Matrix& a);
double hermiticity_residual(const Matrix& a);

/// Eigen-decomposition of the Hermitian part of `a`, ascending eigenvalues.
struct HermitianEigen {
  RealVector values;
  Matrix vectors;
};
HermitianEigen eigh(const Matrix& a);

/// f(A) for Hermitian A via its spectral decomposition. Eigenvalues below
/// `cutoff * max|eigenvalue|` are treated as zero and mapped to zero
/// (pseudo-function convention), which makes negative powers pseudo-inverses.
Matrix psd_power(const Matrix& a, double power, double cutoff = 1e-12);

RealVector singular_values(const Matrix& a);
double trace_norm(const Matrix& a);
double spectral_norm(const Matrix& a);

/// Hilbert-Schmidt inner product tr[a^dagger b].
cplx hs_inner(const Matrix& a, const Matrix& b);

/// Throws DimensionMismatch / InvalidArgument if `a` is not square or has
/// non-finite entries.
void require_square_finite(const Matrix& a, std::string_view what);
void require_same_dim(const Matrix& a, const Matrix& b, std::string_view what);

/// Pauli matrices: index 0 is the identity, 1..3 are x, y, z.
Matrix pauli(int index);

}  // namespace qmix
