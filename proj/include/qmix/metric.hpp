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

// Quantum chi^2_k divergences and the inversion superoperator Omega^k_sigma,
// plus the trace distance and relative entropy they bound.

#pragma once

#include "qmix/channel.hpp"
#include "qmix/kfunction.hpp"

#include <vector>

namespace qmix {

/// A nonnegative real or +infinity. Infinity is never encoded as a float;
/// callers must test is_infinite() before value().
class ExtendedReal {
 public:
  ExtendedReal(double v) : value_(v), infinite_(false) {}
  static ExtendedReal infinity() {
    ExtendedReal r(0.0);
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  /// Throws InfiniteChi2 when infinite.
  double value() const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  double value_;
  bool infinite_;
};

/// Omega^k_sigma = R_sigma^{-1} k(Delta_{sigma,sigma}). In the eigenbasis
/// {|i>} of sigma it multiplies |i><j| by c(i,j) = k(mu_i/mu_j)/mu_j.
/// Eigenvalues below cutoff * mu_max are treated as zero, and every power
/// maps the corresponding matrix units to zero.
class InversionOperator {
 public:
  InversionOperator(const DensityMatrix& sigma, KFunction k, double cutoff = 1e-12);

  Index dim() const { return mu_.size(); }
  const KFunction& k() const { return k_; }
  const DensityMatrix& sigma() const { return sigma_; }
  /// Eigenvalues of sigma (ascending) and the matching eigenvectors.
  const RealVector& eigenvalues() const { return mu_; }
  const Matrix& eigenvectors() const { return v_; }
  bool in_support(Index i) const { return support_[static_cast<std::size_t>(i)]; }
  bool full_rank() const;

  /// c(i,j)^p on the support, 0 elsewhere.
  RealMatrix weights(double p = 1.0) const;
  /// Omega^p as a d^2 x d^2 superoperator.
  Superoperator power(double p = 1.0) const;
  /// Omega^p(a), computed in the eigenbasis without forming the superoperator.
  Matrix apply(const Matrix& a, double p = 1.0) const;

 private:
  DensityMatrix sigma_;
  KFunction k_;
  RealVector mu_;
  Matrix v_;
  std::vector<bool> support_;
  RealMatrix c_;
};

InversionOperator omega(const DensityMatrix& sigma, const KFunction& k, double cutoff = 1e-12);

inline constexpr double kSupportTolerance = 1e-10;

/// chi^2_k(rho, sigma) = <rho - sigma, Omega^k_sigma(rho - sigma)>, or +inf
/// when rho has weight above supp_tol outside supp(sigma).
ExtendedReal chi2(const DensityMatrix& rho, const DensityMatrix& sigma, const KFunction& k,
                  double cutoff = 1e-12, double supp_tol = kSupportTolerance);
/// Same, reusing a prepared inversion operator.
ExtendedReal chi2(const DensityMatrix& rho, const InversionOperator& om, double supp_tol = kSupportTolerance);

/// ||a - b||_1, the sum of singular values of the difference.
double trace_distance(const Matrix& a, const Matrix& b);

/// S(rho, sigma) = tr[rho (log rho - log sigma)], +inf if supp(rho) is not
/// contained in supp(sigma).
ExtendedReal relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma, double cutoff = 1e-12,
                              double supp_tol = kSupportTolerance);

struct SchwarzResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// lhs = tr[A^dag (R_sigma + s L_rho)^{-1} A] and the same with T(A), T(sigma),
/// T(rho) on the right; holds iff lhs >= rhs - 1e-9. The inverse on the right
/// is a pseudo-inverse. Throws SingularOperator if rho or sigma is singular
/// in a way that makes the left side undefined.
SchwarzResult schwarz_check(const QuantumChannel& t, const DensityMatrix& rho, const DensityMatrix& sigma,
                            const Matrix& a, double s);

}  // namespace qmix
