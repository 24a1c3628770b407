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


#include "qmix/contraction.hpp"

#include "qmix/metric.hpp"
#include "qmix/mixing.hpp"
#include "qmix/optimize.hpp"
#include "qmix/parallel.hpp"
#include "qmix/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qmix {

std::string to_string(EstimateKind kind) {
  return kind == EstimateKind::ExactFixedPoint ? "exact_fixed_point" : "lower_bound_sampled";
}

namespace {

using Params = std::vector<double>;

constexpr double kGammaTol = 1e-9;

Rng start_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), 0x71a3u};
  return Rng(seq);
}

Params random_params(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Params x(n);
  for (double& v : x) v = g(rng);
  return x;
}

void require_full_rank_p(const DensityMatrix& p) {
  const RealVector ev = eigh(p.matrix()).values;
  if (ev.minCoeff() <= 1e-12 * ev.maxCoeff()) throw Error(ErrorKind::SingularP, "P must be full rank");
}

// --- parametrizations -------------------------------------------------------

Vector complex_vector(const Params& x, std::size_t offset, Index d) {
  Vector v(d);
  for (Index i = 0; i < d; ++i) {
    const std::size_t k = offset + 2 * static_cast<std::size_t>(i);
    v(i) = cplx(x[k], x[k + 1]);
  }
  return v;
}

void push_vector(Params& x, const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    x.push_back(v(i).real());
    x.push_back(v(i).imag());
  }
}

// Orthonormal pair from two raw vectors by Gram-Schmidt.
bool orthonormal_pair(const Params& x, Index d, Vector& psi, Vector& phi) {
  psi = complex_vector(x, 0, d);
  phi = complex_vector(x, 2 * static_cast<std::size_t>(d), d);
  const double a = psi.norm();
  if (a < 1e-12) return false;
  psi /= a;
  phi -= psi.dot(phi) * psi;
  const double b = phi.norm();
  if (b < 1e-12) return false;
  phi /= b;
  return true;
}

// P = (C C^dag + 1e-10) / tr with C lower triangular: d real diagonal
// entries followed by complex entries below the diagonal.
std::size_t cholesky_size(Index d) { return static_cast<std::size_t>(d * d); }

Matrix cholesky_density(const Params& x, std::size_t offset, Index d) {
  Matrix c = Matrix::Zero(d, d);
  std::size_t k = offset;
  for (Index i = 0; i < d; ++i) c(i, i) = x[k++];
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < i; ++j) {
      c(i, j) = cplx(x[k], x[k + 1]);
      k += 2;
    }
  Matrix p = c * c.adjoint() + 1e-10 * Matrix::Identity(d, d);
  return p / p.trace().real();
}

void push_cholesky(Params& x, const Matrix& p) {
  const Index d = p.rows();
  Eigen::LLT<Matrix> llt(hermitian_part(p));
  const Matrix c = llt.matrixL();
  for (Index i = 0; i < d; ++i) x.push_back(c(i, i).real());
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < i; ++j) {
      x.push_back(c(i, j).real());
      x.push_back(c(i, j).imag());
    }
}

// Traceless Hermitian N from d^2 - 1 reals.
Matrix traceless_hermitian(const Params& x, Index d) {
  Matrix n = Matrix::Zero(d, d);
  std::size_t k = 0;
  double tr = 0.0;
  for (Index i = 0; i + 1 < d; ++i) {
    n(i, i) = x[k];
    tr += x[k++];
  }
  n(d - 1, d - 1) = -tr;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      n(i, j) = cplx(x[k], x[k + 1]);
      n(j, i) = std::conj(n(i, j));
      k += 2;
    }
  return n;
}

Params traceless_params(const Matrix& n) {
  const Index d = n.rows();
  Params x;
  for (Index i = 0; i + 1 < d; ++i) x.push_back(n(i, i).real());
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      x.push_back(n(i, j).real());
      x.push_back(n(i, j).imag());
    }
  return x;
}

// --- Gamma ------------------------------------------------------------------

struct GammaParts {
  Matrix h;  // Omega_P^{-1/2} T^dag Omega_{T(P)} T Omega_P^{-1/2}, Hermitian
  Vector u;  // vec(sqrt P), normalized: the eigenvector of h at 1
  Matrix p_quarter;
};

GammaParts gamma_parts(const QuantumChannel& t, const Matrix& p) {
  const Matrix tp = t.apply(p);
  const Matrix p_quarter = psd_power(p, 0.25);
  const Matrix tp_inv_half = psd_power(tp, -0.5);
  const Matrix& tm = t.superop().matrix();
  const Matrix outer = sandwich(p_quarter, p_quarter);
  const Matrix h = outer * tm.adjoint() * sandwich(tp_inv_half, tp_inv_half) * tm * outer;
  Vector u = vec(psd_power(p, 0.5));
  u /= u.norm();
  return {hermitian_part(h), u, p_quarter};
}

double lambda1_fast(const QuantumChannel& t, const Matrix& p) {
  const GammaParts g = gamma_parts(t, p);
  return deflated_top_eigenvalue(g.h, g.u);
}

// Traceless Hermitian directions from the leading nontrivial eigenvectors
// of Gamma at P.
std::vector<Matrix> gamma_directions(const QuantumChannel& t, const Matrix& p, int count) {
  const GammaParts g = gamma_parts(t, p);
  const Index m = g.h.rows();
  const Index d = t.dim();
  const Matrix proj = Matrix::Identity(m, m) - g.u * g.u.adjoint();
  const double shift = 1.0 + 2.0 * spectral_norm(g.h);
  const HermitianEigen e = eigh(proj * g.h * proj - shift * g.u * g.u.adjoint());
  std::vector<Matrix> dirs;
  for (Index c = m - 1; c >= 0 && static_cast<int>(dirs.size()) < count; --c) {
    const Matrix y = unvec(e.vectors.col(c), d);
    const Matrix x = g.p_quarter * y * g.p_quarter;
    Matrix n = hermitian_part(x);
    const Matrix alt = hermitian_part(cplx(0, 1) * x);
    if (alt.norm() > n.norm()) n = alt;
    n -= (n.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    if (n.norm() > 1e-12) dirs.push_back(n / n.norm());
  }
  return dirs;
}

std::vector<Matrix> seed_states(const QuantumChannel& t) {
  const Index d = t.dim();
  std::vector<Matrix> ps{Matrix::Identity(d, d) / static_cast<double>(d)};
  if (t.cached_fixed_point()) ps.push_back(t.cached_fixed_point()->matrix());
  return ps;
}

// --- multi-start driver -----------------------------------------------------

struct StartResult {
  double value = -1.0;
  Params x;
};

bool better(const StartResult& a, const StartResult& b) {
  if (a.value != b.value) return a.value > b.value;
  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

// Maximizes `objective` from each start, in parallel; ties go to the
// lexicographically smallest parameter vector.
StartResult maximize(const std::function<double(const Params&)>& objective, const std::vector<Params>& starts,
                     const std::vector<double>& steps, int iterations) {
  std::vector<StartResult> results(starts.size());
  parallel_for(starts.size(), [&](std::size_t i) {
    const double v0 = objective(starts[i]);
    const SimplexResult r = nelder_mead([&](const Params& x) { return -objective(x); }, starts[i], steps[i],
                                        iterations);
    results[i] = -r.value >= v0 ? StartResult{-r.value, r.x} : StartResult{v0, starts[i]};
  });
  StartResult best;
  for (const StartResult& r : results)
    if (best.value < 0.0 || better(r, best)) best = r;
  return best;
}

}  // namespace

double trace_pair_value(const QuantumChannel& t, const Vector& psi, const Vector& phi) {
  return 0.5 * trace_norm(t.apply(Matrix(psi * psi.adjoint())) - t.apply(Matrix(phi * phi.adjoint())));
}

ContractionEstimate eta_tr(const QuantumChannel& t, int trials, std::uint64_t seed, const SearchOptions& opts) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  const Index d = t.dim();
  const std::size_t n = 4 * static_cast<std::size_t>(d);
  std::vector<Params> starts;
  std::vector<double> steps;
  for (int i = 0; i < trials; ++i) {
    Rng rng = start_rng(seed, static_cast<std::size_t>(i));
    starts.push_back(random_params(n, rng));
    steps.push_back(0.5);
  }
  for (const Matrix& p : seed_states(t))
    for (const Matrix& dir : gamma_directions(t, p, 3)) {
      const HermitianEigen e = eigh(dir);
      Params x;
      push_vector(x, e.vectors.col(d - 1));
      push_vector(x, e.vectors.col(0));
      starts.push_back(x);
      steps.push_back(0.1);
    }
  auto objective = [&](const Params& x) {
    Vector psi, phi;
    if (!orthonormal_pair(x, d, psi, phi)) return 0.0;
    return trace_pair_value(t, psi, phi);
  };
  const StartResult best = maximize(objective, starts, steps, opts.iterations);
  Vector psi, phi;
  orthonormal_pair(best.x, d, psi, phi);
  return {best.value, EstimateKind::LowerBoundSampled, static_cast<int>(starts.size()), {Matrix(psi), Matrix(phi)}};
}

Superoperator gamma_map(const QuantumChannel& t, const DensityMatrix& p) {
  if (p.dim() != t.dim()) throw Error(ErrorKind::DimensionMismatch, "gamma_map: P dimension");
  require_full_rank_p(p);
  const Matrix tp = t.apply(p.matrix());
  const Matrix p_half = psd_power(p.matrix(), 0.5);
  const Matrix tp_inv_half = psd_power(tp, -0.5);
  const Matrix& tm = t.superop().matrix();
  const Matrix g = sandwich(p_half, p_half) * tm.adjoint() * sandwich(tp_inv_half, tp_inv_half) * tm;
  Superoperator gamma(g);

  const double fixed = (gamma.apply(p.matrix()) - p.matrix()).norm();
  if (fixed > kGammaTol) {
    std::ostringstream os;
    os << "Gamma(P) differs from P by " << fixed;
    throw Error(ErrorKind::InvariantViolation, os.str());
  }
  Eigen::ComplexEigenSolver<Matrix> solver(g, false);
  const double radius = solver.eigenvalues().cwiseAbs().maxCoeff();
  if (radius > 1.0 + kGammaTol) {
    std::ostringstream os;
    os << "Gamma has spectral radius " << radius;
    throw Error(ErrorKind::InvariantViolation, os.str());
  }
  const Matrix c = choi(gamma);
  const double min_choi = eigh(c).values.minCoeff();
  if (min_choi < -kGammaTol * std::max(1.0, c.norm())) {
    std::ostringstream os;
    os << "Gamma is not completely positive (Choi eigenvalue " << min_choi << ")";
    throw Error(ErrorKind::InvariantViolation, os.str());
  }
  return gamma;
}

double lambda1(const QuantumChannel& t, const DensityMatrix& p) {
  const Superoperator gamma = gamma_map(t, p);
  Eigen::ComplexEigenSolver<Matrix> solver(gamma.matrix(), false);
  const double imag = solver.eigenvalues().imag().cwiseAbs().maxCoeff();
  if (imag > kGammaTol) {
    std::ostringstream os;
    os << "Gamma has an eigenvalue with imaginary part " << imag;
    throw Error(ErrorKind::InvariantViolation, os.str());
  }
  return lambda1_fast(t, p.matrix());
}

double lambda1_rayleigh(const QuantumChannel& t, const DensityMatrix& p, const Matrix& n) {
  require_full_rank_p(p);
  require_same_dim(n, p.matrix(), "lambda1_rayleigh");
  const Matrix tp_inv_half = psd_power(t.apply(p.matrix()), -0.5);
  const Matrix p_inv_half = psd_power(p.matrix(), -0.5);
  const Matrix tn = t.apply(n);
  const double num = hs_inner(tn, tp_inv_half * tn * tp_inv_half).real();
  const double den = hs_inner(n, p_inv_half * n * p_inv_half).real();
  return num / den;
}

ContractionEstimate eta_chi(const QuantumChannel& t, double alpha, int trials, std::uint64_t seed,
                            const SearchOptions& opts) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream os;
    os << "eta_chi requires alpha in (0, 1], got " << alpha;
    throw Error(ErrorKind::ParameterOutOfRange, os.str());
  }
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  const Index d = t.dim();
  const std::size_t n = cholesky_size(d);
  std::vector<Params> starts;
  std::vector<double> steps;

  if (alpha == 0.5) {
    for (const Matrix& p : seed_states(t)) {
      Params x;
      push_cholesky(x, p);
      starts.push_back(x);
      steps.push_back(0.1);
    }
    for (int i = 0; i < trials; ++i) {
      Rng rng = start_rng(seed, static_cast<std::size_t>(i));
      starts.push_back(random_params(n, rng));
      steps.push_back(0.5);
    }
    auto objective = [&](const Params& x) { return lambda1_fast(t, cholesky_density(x, 0, d)); };
    const StartResult best = maximize(objective, starts, steps, opts.iterations);
    return {best.value, EstimateKind::LowerBoundSampled, static_cast<int>(starts.size()),
            {cholesky_density(best.x, 0, d)}};
  }

  const KFunction k = KFunction::mean_alpha(alpha);
  for (int i = 0; i < trials; ++i) {
    Rng rng = start_rng(seed, static_cast<std::size_t>(i));
    starts.push_back(random_params(2 * n, rng));
    steps.push_back(0.5);
  }
  auto objective = [&](const Params& x) {
    const DensityMatrix rho = DensityMatrix::normalized(cholesky_density(x, 0, d));
    const DensityMatrix sigma = DensityMatrix::normalized(cholesky_density(x, n, d));
    const ExtendedReal before = chi2(rho, sigma, k);
    if (before.is_infinite() || before.value() < 1e-14) return 0.0;
    const ExtendedReal after = chi2(t.apply(rho), t.apply(sigma), k);
    if (after.is_infinite()) return 0.0;
    return after.value() / before.value();
  };
  const StartResult best = maximize(objective, starts, steps, opts.iterations);
  return {best.value, EstimateKind::LowerBoundSampled, static_cast<int>(starts.size()),
          {cholesky_density(best.x, 0, d), cholesky_density(best.x, n, d)}};
}

double eta_bar(const QuantumChannel& t, const KFunction& k) {
  const DensityMatrix sigma = fixed_point(t);
  if (k == KFunction::mean_alpha(0.5)) return lambda1(t, sigma);
  const Discriminant d = discriminant(t, k);
  return deflated_top_eigenvalue(d.s_k().matrix(), d.fixed_vector);
}

ContractionEstimate eta_bar_tr(const QuantumChannel& t, int trials, std::uint64_t seed, const SearchOptions& opts) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
  const Index d = t.dim();
  const std::size_t n = static_cast<std::size_t>(d * d - 1);
  std::vector<Params> starts;
  std::vector<double> steps;
  for (const Matrix& p : seed_states(t))
    for (const Matrix& dir : gamma_directions(t, p, 3)) {
      starts.push_back(traceless_params(dir));
      steps.push_back(0.1);
    }
  for (int i = 0; i < trials; ++i) {
    Rng rng = start_rng(seed, static_cast<std::size_t>(i));
    starts.push_back(random_params(n, rng));
    steps.push_back(0.5);
  }
  auto objective = [&](const Params& x) {
    const Matrix m = traceless_hermitian(x, d);
    const double den = trace_norm(m);
    if (den < 1e-12) return 0.0;
    return trace_norm(t.apply(m)) / den;
  };
  const StartResult best = maximize(objective, starts, steps, opts.iterations);
  Matrix witness = traceless_hermitian(best.x, d);
  const double norm = trace_norm(witness);
  if (norm > 0.0) witness /= norm;
  return {best.value, EstimateKind::LowerBoundSampled, static_cast<int>(starts.size()), {witness}};
}

}  // namespace qmix
