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

// Discriminant Q_k = Omega^{1/2} T Omega^{-1/2}, its singular values, and
// the discrete and continuous-time mixing bounds built from them.

#pragma once

#include "qmix/channel.hpp"
#include "qmix/kfunction.hpp"
#include "qmix/metric.hpp"

#include <optional>
#include <vector>

namespace qmix {

struct Discriminant {
  Superoperator q;
  /// All singular values of Q, descending.
  RealVector singular_values;
  /// Largest singular value of Q on the complement of the fixed direction.
  double s1 = 0.0;
  KFunction k;
  DensityMatrix sigma;
  /// Unit vector vec(Omega^{1/2}(sigma)), fixed by Q and Q^dag.
  Vector fixed_vector;

  /// S_k = Q^dag Q.
  Superoperator s_k() const { return q.adjoint() * q; }
};

/// Discriminant at the reference state of T (fixed point, or 1/d for a
/// non-primitive unital channel). Throws InvariantViolation if a singular
/// value exceeds 1 + 1e-9.
Discriminant discriminant(const QuantumChannel& t, const KFunction& k);
/// Discriminant at an explicitly chosen full-rank sigma; no interval check.
Discriminant discriminant(const QuantumChannel& t, const KFunction& k, const DensityMatrix& sigma);

/// True iff every eigenvalue of S_k lies in [-1e-9, 1 + 1e-9].
bool spectral_interval_check(const QuantumChannel& t, const KFunction& k);
/// Eigenvalues of S_k, ascending.
RealVector s_k_eigenvalues(const QuantumChannel& t, const KFunction& k);

struct MixingRow {
  double step = 0.0;  // n for channels, t for generators
  double bound = 0.0;
  double actual = 0.0;
};

struct MixingReport {
  /// Discrete case: deflated s1 of Q_k. Continuous case: e^{l1}, the decay
  /// factor of the bound per unit time.
  double s1 = 0.0;
  double chi2_initial = 0.0;
  std::vector<MixingRow> rows;
  std::optional<long> mixing_time_estimate;
  /// Continuous case only: second eigenvalue of Lambda_k and its top eigenvalue.
  std::optional<double> l1;
  std::optional<double> lambda_top;
  /// Rows where actual exceeds bound by more than the tolerance.
  int violations = 0;
};

/// Rows n = 0..n_max with bound s1^n sqrt(chi2) and actual ||T^n(rho0) - sigma||_1.
/// When eps is given, mixing_time_estimate is filled from the bound.
MixingReport mixing_bound(const QuantumChannel& t, const DensityMatrix& rho0, const KFunction& k, int n_max,
                          std::optional<double> eps = std::nullopt);

/// Smallest n with s1^n sqrt(chi2) < eps; none when s1 >= 1 - 1e-12.
std::optional<long> mixing_time_from_bound(double s1, double chi2_value, double eps);
std::optional<long> mixing_time(const QuantumChannel& t, const DensityMatrix& rho0, const KFunction& k, double eps);

struct AsymptoticsRow {
  long n = 0;
  /// s_i(Q^n)^{1/n}, descending; zero where flagged.
  RealVector roots;
  /// s_i(Q^n) fell below the rounding floor of Q^n.
  std::vector<bool> underflow;
  /// max_i |root_i - |lambda_i|| over entries that are not flagged.
  double max_deviation = 0.0;
};

struct AsymptoticsTable {
  /// |lambda_i(Q)|, descending.
  RealVector abs_eigenvalues;
  std::vector<AsymptoticsRow> rows;
  double max_deviation_at_largest_n = 0.0;
};

AsymptoticsTable singular_value_asymptotics(const QuantumChannel& t, const KFunction& k,
                                            const std::vector<long>& n_list);

/// Lambda_k = Omega^{-1/2} L^* Omega^{1/2} + Omega^{1/2} L Omega^{-1/2} at the
/// stationary state sigma of L.
struct GeneratorForm {
  Superoperator lambda;
  DensityMatrix sigma;
  double top = 0.0;
  double l1 = 0.0;
  /// |<u, top eigenvector>| with u = vec(Omega^{1/2} sigma) normalized.
  double top_overlap = 0.0;
  double hermiticity_residual = 0.0;
};

/// Throws NoStationaryState, or PositiveSpectrum when an eigenvalue of
/// Lambda_k exceeds 1e-8.
GeneratorForm generator_form(const Liouvillian& l, const KFunction& k);

/// Rows t with bound e^{l1 t} chi2 and actual ||e^{tL}(rho0) - sigma||_1^2.
MixingReport continuous_bound(const Liouvillian& l, const DensityMatrix& rho0, const KFunction& k,
                              const std::vector<double>& t_grid);

/// Largest eigenvalue of the Hermitian matrix h on the orthogonal complement
/// of the unit vector u.
double deflated_top_eigenvalue(const Matrix& h, const Vector& u);
/// Largest singular value of a (1 - u u^dag).
double deflated_top_singular_value(const Matrix& a, const Vector& u);

}  // namespace qmix
