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

#include "qmix/channel.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qmix {

namespace {

Index perfect_square_root(Index n) {
  const auto r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r != n)
    throw Error(ErrorKind::DimensionMismatch,
                "superoperator size " + std::to_string(n) + " is not a perfect square");
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Turns a vector spanning the kernel of (T - 1) or of L into a density
// matrix: fix the phase by the trace, Hermitize, clip tiny negatives.
DensityMatrix density_from_kernel_vector(const Vector& v, Index dim, double psd_tol,
                                         ErrorKind failure) {
  Matrix x = unvec(v, dim);
  const cplx tr = x.trace();
  if (std::abs(tr) < 1e-12 * std::max(1.0, x.norm()))
    throw Error(failure, "fixed-point eigenvector is traceless");
  x /= tr;
  x = hermitian_part(x);
  const HermitianEigen e = eigh(x);
  if (e.values.minCoeff() < -psd_tol)
    throw Error(failure, "fixed-point eigenvector has eigenvalue " + fmt(e.values.minCoeff()));
  return DensityMatrix::normalized(x);
}

Vector kernel_vector(const Matrix& a) {
  Eigen::BDCSVD<Matrix> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().col(a.cols() - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Superoperator

Superoperator::Superoperator(Matrix mat) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols())
    throw Error(ErrorKind::DimensionMismatch, "superoperator matrix must be square");
  dim_ = perfect_square_root(mat_.rows());
}

Superoperator Superoperator::identity(Index dim) { return Superoperator(Matrix::Identity(dim * dim, dim * dim)); }

Superoperator Superoperator::zero(Index dim) { return Superoperator(Matrix::Zero(dim * dim, dim * dim)); }

Matrix Superoperator::apply(const Matrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "superoperator of dimension " + std::to_string(dim_) +
                                                  " applied to " + std::to_string(x.rows()) + "x" +
                                                  std::to_string(x.cols()) + " matrix");
  return unvec(mat_ * vec(x), dim_);
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "composing superoperators");
  return Superoperator(a.mat_ * b.mat_);
}

Superoperator operator+(const Superoperator& a, const Superoperator& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "adding superoperators");
  return Superoperator(a.mat_ + b.mat_);
}

Superoperator operator-(const Superoperator& a, const Superoperator& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorKind::DimensionMismatch, "subtracting superoperators");
  return Superoperator(a.mat_ - b.mat_);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(const Matrix& m, const Tolerances& tol) {
  require_square_finite(m, "density matrix");
  const double herm = hermiticity_residual(m);
  if (herm > tol.herm * std::max(1.0, m.norm()))
    throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian (residual " + fmt(herm) + ")");
  mat_ = hermitian_part(m);
  const double trace = mat_.trace().real();
  if (std::abs(trace - 1.0) > tol.tr)
    throw Error(ErrorKind::InvalidState, "density matrix trace is " + fmt(trace));
  const double min_eig = eigh(mat_).values.minCoeff();
  if (min_eig < -tol.psd)
    throw Error(ErrorKind::InvalidState, "density matrix has eigenvalue " + fmt(min_eig));
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(Matrix(Matrix::Identity(dim, dim) / static_cast<double>(dim)), Unchecked{});
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n = psi.norm();
  if (n == 0.0 || !psi.allFinite()) throw Error(ErrorKind::InvalidState, "pure state vector is zero");
  const Vector u = psi / n;
  return DensityMatrix(Matrix(u * u.adjoint()), Unchecked{});
}

DensityMatrix DensityMatrix::basis_state(Index dim, Index i) {
  if (i < 0 || i >= dim) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  Matrix m = Matrix::Zero(dim, dim);
  m(i, i) = 1.0;
  return DensityMatrix(std::move(m), Unchecked{});
}

DensityMatrix DensityMatrix::diagonal(const RealVector& probabilities) {
  return DensityMatrix(Matrix(probabilities.cast<cplx>().asDiagonal()));
}

DensityMatrix DensityMatrix::normalized(const Matrix& m) {
  require_square_finite(m, "density matrix");
  const HermitianEigen e = eigh(m);
  const RealVector clipped = e.values.cwiseMax(0.0);
  const double total = clipped.sum();
  if (total <= 0.0) throw Error(ErrorKind::InvalidState, "matrix has no positive part");
  Matrix out = e.vectors * (clipped / total).cast<cplx>().asDiagonal() * e.vectors.adjoint();
  return DensityMatrix(hermitian_part(out), Unchecked{});
}

// ---------------------------------------------------------------------------
// KrausMap / QuantumChannel

KrausMap::KrausMap(std::vector<Matrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorKind::DimensionMismatch, "Kraus sequence is empty");
  const Index d = kraus_.front().rows();
  for (std::size_t mu = 0; mu < kraus_.size(); ++mu) {
    require_square_finite(kraus_[mu], "kraus[" + std::to_string(mu) + "]");
    if (kraus_[mu].rows() != d)
      throw Error(ErrorKind::DimensionMismatch, "kraus[" + std::to_string(mu) + "] has dimension " +
                                                    std::to_string(kraus_[mu].rows()) + ", expected " +
                                                    std::to_string(d));
  }
  Matrix s = Matrix::Zero(d * d, d * d);
  for (const Matrix& a : kraus_) s += kron(a, a.conjugate());
  superop_ = Superoperator(std::move(s));
}

Matrix KrausMap::apply(const Matrix& x) const {
  require_same_dim(x, kraus_.front(), "KrausMap::apply");
  Matrix out = Matrix::Zero(x.rows(), x.cols());
  for (const Matrix& a : kraus_) out += a * x * a.adjoint();
  return out;
}

QuantumChannel::QuantumChannel(KrausMap map) : map_(std::move(map)) {}

QuantumChannel QuantumChannel::from_kraus(std::vector<Matrix> kraus, double tol) {
  QuantumChannel t{KrausMap(std::move(kraus))};
  const Index d = t.dim();

  Matrix completeness = Matrix::Zero(d, d);
  for (const Matrix& a : t.kraus()) completeness += a.adjoint() * a;
  t.completeness_residual_ = (completeness - Matrix::Identity(d, d)).norm();
  if (t.completeness_residual_ > tol)
    throw Error(ErrorKind::CompletenessViolation, "||sum A^dag A - 1||_F = " + fmt(t.completeness_residual_) +
                                                      " exceeds tol " + fmt(tol));

  const Matrix c = choi(t.superop());
  const double min_choi = eigh(c).values.minCoeff();
  if (min_choi < -kDefaultTolerances.psd * std::max(1.0, c.norm()))
    throw Error(ErrorKind::NonPositiveChoi, "Choi matrix eigenvalue " + fmt(min_choi));

  const Tolerances tols;
  Eigen::ComplexEigenSolver<Matrix> solver(t.superop().matrix(), false);
  std::vector<cplx> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::stable_sort(eig.begin(), eig.end(), [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
  t.eigenvalues_ = eig;

  const Matrix id = Matrix::Identity(d, d);
  t.class_.unital = (t.apply(id) - id).norm() <= tols.cpt;
  for (const cplx& l : eig)
    if (std::abs(l) >= 1.0 - tols.spec) t.class_.peripheral_eigenvalues.push_back(l);

  t.class_.primitive = false;
  if (t.class_.peripheral_eigenvalues.size() == 1) {
    const Matrix shifted = t.superop().matrix() - Matrix::Identity(d * d, d * d);
    try {
      DensityMatrix s = density_from_kernel_vector(kernel_vector(shifted), d, tols.psd,
                                                   ErrorKind::NonPositiveFixedPoint);
      if (eigh(s.matrix()).values.minCoeff() > tols.psd) {
        t.class_.primitive = true;
        t.fixed_point_ = std::move(s);
      }
    } catch (const Error&) {
      t.class_.primitive = false;
    }
  }
  return t;
}

QuantumChannel QuantumChannel::from_superoperator(const Superoperator& s, double tol) {
  return from_kraus(kraus_from_choi(choi(s), s.dim()), tol);
}

QuantumChannel QuantumChannel::identity(Index dim) { return from_kraus({Matrix::Identity(dim, dim)}); }

QuantumChannel QuantumChannel::unitary(const Matrix& u) { return from_kraus({u}); }

DensityMatrix QuantumChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix::normalized(apply(rho.matrix()));
}

KrausMap dual(const QuantumChannel& t) { return dual(t.as_kraus_map()); }

KrausMap dual(const KrausMap& t) {
  std::vector<Matrix> k;
  k.reserve(t.kraus().size());
  for (const Matrix& a : t.kraus()) k.push_back(a.adjoint());
  return KrausMap(std::move(k));
}

DensityMatrix fixed_point(const QuantumChannel& t, double tol) {
  const auto& fp = t.cached_fixed_point();
  if (!fp) {
    std::ostringstream os;
    os << "channel has " << t.classification().peripheral_eigenvalues.size()
       << " peripheral eigenvalue(s) or a singular fixed point";
    throw Error(ErrorKind::NotPrimitive, os.str());
  }
  const double residual = (t.apply(fp->matrix()) - fp->matrix()).norm();
  if (residual > tol)
    throw Error(ErrorKind::InvariantViolation, "fixed point residual " + fmt(residual) + " exceeds " + fmt(tol));
  return *fp;
}

ChannelClass classify(const QuantumChannel& t) { return t.classification(); }

DensityMatrix reference_state(const QuantumChannel& t) {
  if (t.cached_fixed_point()) return *t.cached_fixed_point();
  if (t.classification().unital) return DensityMatrix::maximally_mixed(t.dim());
  return fixed_point(t);  // throws NotPrimitive
}

Matrix choi(const Superoperator& s) {
  const Index d = s.dim();
  const Matrix& m = s.matrix();
  Matrix c(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b) c(i * d + a, j * d + b) = m(a * d + b, i * d + j);
  return c;
}

std::vector<Matrix> kraus_from_choi(const Matrix& c, Index dim, double psd_tol) {
  const HermitianEigen e = eigh(c);
  const double scale = std::max(1.0, c.norm());
  if (e.values.minCoeff() < -psd_tol * scale)
    throw Error(ErrorKind::NonPositiveChoi, "Choi matrix eigenvalue " + fmt(e.values.minCoeff()));
  std::vector<Matrix> kraus;
  for (Index a = e.values.size() - 1; a >= 0; --a) {
    const double lambda = e.values(a);
    if (lambda <= 1e-14 * scale) continue;
    // C = sum w w^dag with w[i*d + a] = A(a, i), i.e. A = unvec(w)^T.
    kraus.push_back(std::sqrt(lambda) * unvec(e.vectors.col(a), dim).transpose());
  }
  if (kraus.empty()) kraus.push_back(Matrix::Zero(dim, dim));
  return kraus;
}

// ---------------------------------------------------------------------------
// Liouvillian

Liouvillian::Liouvillian(Matrix hamiltonian, std::vector<Matrix> jumps, const Tolerances& tol)
    : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
  require_square_finite(hamiltonian_, "hamiltonian");
  const Index d = hamiltonian_.rows();
  const double herm = hermiticity_residual(hamiltonian_);
  if (herm > tol.herm * std::max(1.0, hamiltonian_.norm()))
    throw Error(ErrorKind::NonHermitianHamiltonian, "||H - H^dag||_F = " + fmt(herm));
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    require_square_finite(jumps_[k], "jumps[" + std::to_string(k) + "]");
    if (jumps_[k].rows() != d)
      throw Error(ErrorKind::DimensionMismatch, "jumps[" + std::to_string(k) + "] has dimension " +
                                                    std::to_string(jumps_[k].rows()) + ", expected " +
                                                    std::to_string(d));
  }
  const Matrix id = Matrix::Identity(d, d);
  const cplx i(0.0, 1.0);
  Matrix l = -i * (left_mult(hamiltonian_) - right_mult(hamiltonian_));
  for (const Matrix& v : jumps_) {
    const Matrix vdv = v.adjoint() * v;
    l += kron(v, v.conjugate()) - 0.5 * (left_mult(vdv) + right_mult(vdv));
  }
  superop_ = Superoperator(std::move(l));
}

Matrix Liouvillian::apply(const Matrix& x) const {
  require_same_dim(x, hamiltonian_, "Liouvillian::apply");
  const cplx i(0.0, 1.0);
  Matrix out = -i * (hamiltonian_ * x - x * hamiltonian_);
  for (const Matrix& v : jumps_) {
    const Matrix vdv = v.adjoint() * v;
    out += v * x * v.adjoint() - 0.5 * (vdv * x + x * vdv);
  }
  return out;
}

Liouvillian lindblad(const Matrix& hamiltonian, const std::vector<Matrix>& jumps) {
  return Liouvillian(hamiltonian, jumps);
}

Superoperator semigroup(const Liouvillian& l, double t) {
  if (t < 0.0) throw Error(ErrorKind::NegativeTime, "semigroup time " + fmt(t) + " < 0");
  if (t == 0.0) return Superoperator::identity(l.dim());
  const Matrix scaled = t * l.superop().matrix();
  return Superoperator(scaled.exp());
}

DensityMatrix stationary_state(const Liouvillian& l, bool require_full_rank, const Tolerances& tol) {
  const Matrix& m = l.superop().matrix();
  const double scale = std::max(1.0, m.norm());
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  int zeros = 0;
  for (Index k = 0; k < solver.eigenvalues().size(); ++k)
    if (std::abs(solver.eigenvalues()(k)) <= tol.spec * scale) ++zeros;
  if (zeros != 1)
    throw Error(ErrorKind::NoStationaryState,
                "generator kernel has dimension " + std::to_string(zeros) + ", expected 1");
  DensityMatrix s = density_from_kernel_vector(kernel_vector(m), l.dim(), tol.psd, ErrorKind::NoStationaryState);
  if (require_full_rank && eigh(s.matrix()).values.minCoeff() <= tol.psd)
    throw Error(ErrorKind::NoStationaryState, "stationary state is not full rank");
  return s;
}

}  // namespace qmix
