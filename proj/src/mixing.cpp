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


#include "qmix/mixing.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qmix {

namespace {

constexpr double kIntervalTol = 1e-9;
constexpr double kTrajectoryTol = 1e-9;
constexpr double kContinuousTol = 1e-8;

void require_full_rank(const InversionOperator& om) {
  if (!om.full_rank()) throw Error(ErrorKind::SingularSigma, "reference state is not full rank");
}

Matrix projector_complement(const Vector& u) {
  return Matrix::Identity(u.size(), u.size()) - u * u.adjoint();
}

Discriminant build(const QuantumChannel& t, const KFunction& k, const DensityMatrix& sigma) {
  if (sigma.dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "discriminant: sigma dimension");
  const InversionOperator om(sigma, k);
  require_full_rank(om);
  const Matrix half = om.power(0.5).matrix();
  const Matrix minus_half = om.power(-0.5).matrix();
  Matrix q = half * t.superop().matrix() * minus_half;
  Vector u = vec(om.apply(sigma.matrix(), 0.5));
  u /= u.norm();
  Discriminant d{Superoperator(q), singular_values(q), 0.0, k, sigma, u};
  d.s1 = deflated_top_singular_value(q, u);
  return d;
}

}  // namespace

double deflated_top_eigenvalue(const Matrix& h, const Vector& u) {
  const Matrix p = projector_complement(u);
  const double shift = 1.0 + 2.0 * spectral_norm(h);
  const Matrix m = p * hermitian_part(h) * p - shift * u * u.adjoint();
  return eigh(m).values.maxCoeff();
}

double deflated_top_singular_value(const Matrix& a, const Vector& u) {
  return spectral_norm(a * projector_complement(u));
}

Discriminant discriminant(const QuantumChannel& t, const KFunction& k) {
  Discriminant d = build(t, k, reference_state(t));
  if (d.singular_values(0) > 1.0 + kIntervalTol) {
    std::ostringstream os;
    os << "largest singular value of Q is " << d.singular_values(0);
    throw Error(ErrorKind::InvariantViolation, os.str());
  }
  return d;
}

Discriminant discriminant(const QuantumChannel& t, const KFunction& k, const DensityMatrix& sigma) {
  return build(t, k, sigma);
}

RealVector s_k_eigenvalues(const QuantumChannel& t, const KFunction& k) {
  const Discriminant d = build(t, k, reference_state(t));
  return eigh(d.s_k().matrix()).values;
}

bool spectral_interval_check(const QuantumChannel& t, const KFunction& k) {
  const RealVector ev = s_k_eigenvalues(t, k);
  return ev.minCoeff() >= -kIntervalTol && ev.maxCoeff() <= 1.0 + kIntervalTol;
}

std::optional<long> mixing_time_from_bound(double s1, double chi2_value, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const double c = std::sqrt(std::max(chi2_value, 0.0));
  if (c < eps) return 0L;
  if (s1 >= 1.0 - 1e-12) return std::nullopt;
  if (s1 <= 0.0) return 1L;
  const double guess = std::floor(std::log(eps / c) / std::log(s1));
  long n = std::max(0L, static_cast<long>(guess));
  while (std::pow(s1, static_cast<double>(n)) * c >= eps) ++n;
  while (n > 0 && std::pow(s1, static_cast<double>(n - 1)) * c < eps) --n;
  return n;
}

MixingReport mixing_bound(const QuantumChannel& t, const DensityMatrix& rho0, const KFunction& k, int n_max,
                          std::optional<double> eps) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be nonnegative");
  if (!t.classification().primitive)
    throw Error(ErrorKind::NotPrimitive, "mixing bound requires a primitive channel");
  require_same_dim(rho0.matrix(), Matrix::Zero(t.dim(), t.dim()), "mixing_bound");
  const Discriminant d = discriminant(t, k);
  const ExtendedReal c2 = chi2(rho0, d.sigma, k);
  if (c2.is_infinite()) throw Error(ErrorKind::InfiniteChi2, "initial state leaves the support of sigma");

  MixingReport r;
  r.s1 = d.s1;
  r.chi2_initial = c2.value();
  const double root = std::sqrt(r.chi2_initial);
  Matrix rho = rho0.matrix();
  for (int n = 0; n <= n_max; ++n) {
    MixingRow row;
    row.step = n;
    row.bound = std::pow(d.s1, n) * root;
    row.actual = trace_distance(rho, d.sigma.matrix());
    if (row.actual > row.bound + kTrajectoryTol) ++r.violations;
    r.rows.push_back(row);
    rho = t.apply(rho);
  }
  if (eps) r.mixing_time_estimate = mixing_time_from_bound(d.s1, r.chi2_initial, *eps);
  return r;
}

std::optional<long> mixing_time(const QuantumChannel& t, const DensityMatrix& rho0, const KFunction& k, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const Discriminant d = discriminant(t, k);
  const ExtendedReal c2 = chi2(rho0, d.sigma, k);
  if (c2.is_infinite()) throw Error(ErrorKind::InfiniteChi2, "initial state leaves the support of sigma");
  return mixing_time_from_bound(d.s1, c2.value(), eps);
}

AsymptoticsTable singular_value_asymptotics(const QuantumChannel& t, const KFunction& k,
                                            const std::vector<long>& n_list) {
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] <= 0) throw Error(ErrorKind::InvalidArgument, "n_list entries must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw Error(ErrorKind::InvalidArgument, "n_list must be ascending");
  }
  const Discriminant d = discriminant(t, k);
  const Matrix& q = d.q.matrix();
  const Index m = q.rows();

  Eigen::ComplexEigenSolver<Matrix> solver(q, false);
  std::vector<double> mags;
  for (Index i = 0; i < m; ++i) mags.push_back(std::abs(solver.eigenvalues()(i)));
  std::sort(mags.begin(), mags.end(), std::greater<>());

  AsymptoticsTable table;
  table.abs_eigenvalues = Eigen::Map<RealVector>(mags.data(), m);

  const double eps = std::numeric_limits<double>::epsilon();
  Matrix power = Matrix::Identity(m, m);
  long current = 0;
  for (long n : n_list) {
    while (current < n) {
      power = power * q;
      ++current;
    }
    const RealVector s = singular_values(power);
    // Rounding in an n-fold product leaves entries of order n m eps ||Q||^n.
    const double floor = 16.0 * static_cast<double>(n) * static_cast<double>(m) * eps * std::max(1.0, s(0));
    AsymptoticsRow row;
    row.n = n;
    row.roots = RealVector::Zero(m);
    row.underflow.assign(static_cast<std::size_t>(m), false);
    for (Index i = 0; i < m; ++i) {
      if (s(i) <= floor) {
        row.underflow[static_cast<std::size_t>(i)] = true;
        continue;
      }
      row.roots(i) = std::pow(s(i), 1.0 / static_cast<double>(n));
      row.max_deviation = std::max(row.max_deviation, std::abs(row.roots(i) - table.abs_eigenvalues(i)));
    }
    table.rows.push_back(row);
  }
  if (!table.rows.empty()) table.max_deviation_at_largest_n = table.rows.back().max_deviation;
  return table;
}

GeneratorForm generator_form(const Liouvillian& l, const KFunction& k) {
  DensityMatrix sigma = stationary_state(l, true);
  const InversionOperator om(sigma, k);
  require_full_rank(om);
  const Matrix half = om.power(0.5).matrix();
  const Matrix minus_half = om.power(-0.5).matrix();
  const Matrix& lm = l.superop().matrix();
  const Matrix lambda = minus_half * lm.adjoint() * half + half * lm * minus_half;

  Vector u = vec(om.apply(sigma.matrix(), 0.5));
  u /= u.norm();
  const HermitianEigen e = eigh(lambda);
  const Index top = e.values.size() - 1;

  GeneratorForm g{Superoperator(lambda), sigma, e.values(top), 0.0, 0.0, hermiticity_residual(lambda)};
  g.top_overlap = std::abs(u.dot(e.vectors.col(top)));
  g.l1 = deflated_top_eigenvalue(lambda, u);
  if (g.top > kContinuousTol) {
    std::ostringstream os;
    os << "Lambda_k has eigenvalue " << g.top << " > 0";
    throw Error(ErrorKind::PositiveSpectrum, os.str());
  }
  return g;
}

MixingReport continuous_bound(const Liouvillian& l, const DensityMatrix& rho0, const KFunction& k,
                              const std::vector<double>& t_grid) {
  for (double t : t_grid)
    if (t < 0.0) throw Error(ErrorKind::NegativeTime, "time grid contains a negative entry");
  require_same_dim(rho0.matrix(), l.hamiltonian(), "continuous_bound");
  const GeneratorForm g = generator_form(l, k);
  const ExtendedReal c2 = chi2(rho0, g.sigma, k);
  if (c2.is_infinite()) throw Error(ErrorKind::InfiniteChi2, "initial state leaves the support of sigma");

  MixingReport r;
  r.chi2_initial = c2.value();
  r.l1 = g.l1;
  r.lambda_top = g.top;
  r.s1 = std::exp(g.l1);
  const Vector v0 = vec(rho0.matrix());
  for (double t : t_grid) {
    const Matrix evolved = unvec(semigroup(l, t).matrix() * v0, l.dim());
    const double dist = trace_distance(evolved, g.sigma.matrix());
    MixingRow row{t, std::exp(g.l1 * t) * r.chi2_initial, dist * dist};
    if (row.actual > row.bound + kContinuousTol) ++r.violations;
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace qmix
