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


#include "qmix/metric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qmix {

double ExtendedReal::value() const {
  if (infinite_) throw Error(ErrorKind::InfiniteChi2, "value is +infinity");
  return value_;
}

InversionOperator::InversionOperator(const DensityMatrix& sigma, KFunction k, double cutoff)
    : sigma_(sigma), k_(std::move(k)) {
  const HermitianEigen e = eigh(sigma.matrix());
  mu_ = e.values;
  v_ = e.vectors;
  const Index d = mu_.size();
  const double threshold = cutoff * mu_.maxCoeff();
  support_.resize(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) support_[static_cast<std::size_t>(i)] = mu_(i) > threshold && mu_(i) > 0.0;
  c_ = RealMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      if (in_support(i) && in_support(j)) c_(i, j) = k_eval(k_, mu_(i) / mu_(j)) / mu_(j);
}

bool InversionOperator::full_rank() const {
  return std::all_of(support_.begin(), support_.end(), [](bool b) { return b; });
}

RealMatrix InversionOperator::weights(double p) const {
  if (p == 1.0) return c_;
  RealMatrix w = RealMatrix::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i)
    for (Index j = 0; j < dim(); ++j)
      if (c_(i, j) > 0.0) w(i, j) = std::pow(c_(i, j), p);
  return w;
}

Superoperator InversionOperator::power(double p) const {
  const RealMatrix w = weights(p);
  const Index d = dim();
  Vector diag(d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) diag(i * d + j) = w(i, j);
  // X -> V X V^dag has matrix V (x) conj(V) under row vectorization.
  const Matrix basis = kron(v_, v_.conjugate());
  return Superoperator(basis * diag.asDiagonal() * basis.adjoint());
}

Matrix InversionOperator::apply(const Matrix& a, double p) const {
  require_same_dim(a, v_, "InversionOperator::apply");
  const Matrix in_basis = v_.adjoint() * a * v_;
  const Matrix scaled = in_basis.cwiseProduct(weights(p).cast<cplx>());
  return v_ * scaled * v_.adjoint();
}

InversionOperator omega(const DensityMatrix& sigma, const KFunction& k, double cutoff) {
  return InversionOperator(sigma, k, cutoff);
}

ExtendedReal chi2(const DensityMatrix& rho, const InversionOperator& om, double supp_tol) {
  require_same_dim(rho.matrix(), om.sigma().matrix(), "chi2");
  const Matrix& v = om.eigenvectors();
  const Matrix m = v.adjoint() * (rho.matrix() - om.sigma().matrix()) * v;
  double outside = 0.0;
  for (Index i = 0; i < om.dim(); ++i)
    if (!om.in_support(i)) outside += m(i, i).real();
  if (outside > supp_tol) return ExtendedReal::infinity();
  const RealMatrix c = om.weights(1.0);
  double total = 0.0;
  for (Index i = 0; i < om.dim(); ++i)
    for (Index j = 0; j < om.dim(); ++j) total += c(i, j) * std::norm(m(i, j));
  return ExtendedReal(total);
}

ExtendedReal chi2(const DensityMatrix& rho, const DensityMatrix& sigma, const KFunction& k, double cutoff,
                  double supp_tol) {
  require_same_dim(rho.matrix(), sigma.matrix(), "chi2");
  return chi2(rho, InversionOperator(sigma, k, cutoff), supp_tol);
}

double trace_distance(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "trace_distance");
  return trace_norm(a - b);
}

ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double cutoff,
                              double supp_tol) {
  require_same_dim(rho.matrix(), sigma.matrix(), "relative_entropy");
  const HermitianEigen es = eigh(sigma.matrix());
  const double threshold = cutoff * es.values.maxCoeff();
  const Matrix in_sigma_basis = es.vectors.adjoint() * rho.matrix() * es.vectors;
  double outside = 0.0;
  double cross = 0.0;  // tr[rho log sigma]
  for (Index i = 0; i < es.values.size(); ++i) {
    const double p = in_sigma_basis(i, i).real();
    if (es.values(i) <= threshold || es.values(i) <= 0.0)
      outside += p;
    else
      cross += p * std::log(es.values(i));
  }
  if (outside > supp_tol) return ExtendedReal::infinity();
  const HermitianEigen er = eigh(rho.matrix());
  double self = 0.0;  // tr[rho log rho], 0 log 0 = 0
  for (Index i = 0; i < er.values.size(); ++i)
    if (er.values(i) > 0.0) self += er.values(i) * std::log(er.values(i));
  const double s = self - cross;
  return ExtendedReal(s < 0.0 && s > -1e-12 ? 0.0 : s);
}

namespace {

// tr[A^dag (R_sig + s L_rh)^{-1} A] using the eigenbases of rh and sig, where
// the operator is diagonal with entries s r_a + mu_b on |a><b|.
double schwarz_form(const Matrix& rh, const Matrix& sig, const Matrix& a, double s, bool strict) {
  const HermitianEigen er = eigh(rh);
  const HermitianEigen es = eigh(sig);
  const Matrix m = er.vectors.adjoint() * a * es.vectors;
  const Index d = a.rows();
  double scale = 0.0;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      scale = std::max(scale, s * std::max(er.values(i), 0.0) + std::max(es.values(j), 0.0));
  const double cutoff = 1e-12 * scale;
  double total = 0.0;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const double den = s * std::max(er.values(i), 0.0) + std::max(es.values(j), 0.0);
      const double num = std::norm(m(i, j));
      if (den > cutoff) {
        total += num / den;
      } else if (strict && num > 1e-24) {
        throw Error(ErrorKind::SingularOperator, "R_sigma + s L_rho is singular on the support of A");
      }
    }
  return total;
}

}  // namespace

SchwarzResult schwarz_check(const QuantumChannel& t, const DensityMatrix& rho, const DensityMatrix& sigma,
                            const Matrix& a, double s) {
  if (!(s >= 0.0) || !std::isfinite(s))
    throw Error(ErrorKind::InvalidArgument, "schwarz_check requires finite s >= 0");
  require_same_dim(rho.matrix(), sigma.matrix(), "schwarz_check");
  require_same_dim(a, sigma.matrix(), "schwarz_check");
  if (t.dim() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "schwarz_check: channel dimension");
  SchwarzResult r;
  r.lhs = schwarz_form(rho.matrix(), sigma.matrix(), a, s, true);
  r.rhs = schwarz_form(t.apply(rho.matrix()), t.apply(sigma.matrix()), t.apply(a), s, false);
  r.holds = r.lhs >= r.rhs - 1e-9;
  return r;
}

}  // namespace qmix
