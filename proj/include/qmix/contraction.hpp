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

// Contraction coefficients of channels for the trace norm and the chi^2
// divergences. Suprema are estimated by seeded multi-start simplex search,
// so every estimate is a lower bound on the true coefficient.

#pragma once

#include "qmix/channel.hpp"
#include "qmix/kfunction.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmix {

enum class EstimateKind { LowerBoundSampled, ExactFixedPoint };

std::string to_string(EstimateKind kind);

struct ContractionEstimate {
  double value = 0.0;
  EstimateKind kind = EstimateKind::LowerBoundSampled;
  int trials = 0;
  /// eta_tr: {psi, phi} as d x 1 columns. eta_chi at alpha = 1/2: {P}.
  /// Other alpha: {rho, sigma}. eta_bar_tr: {N}.
  std::vector<Matrix> witness;
};

/// `trials` arguments below count random starts; a few deterministic starts
/// derived from the spectrum of Gamma are always added.
struct SearchOptions {
  int iterations = 200;
};

/// 1/2 ||T(psi) - T(phi)||_1 for orthonormalized psi, phi.
double trace_pair_value(const QuantumChannel& t, const Vector& psi, const Vector& phi);

/// sup over orthonormal pairs of 1/2 ||T(psi) - T(phi)||_1.
ContractionEstimate eta_tr(const QuantumChannel& t, int trials, std::uint64_t seed,
                           const SearchOptions& opts = {});

/// Gamma = Omega_P^{-1} T^dag Omega_{T(P)} T with Omega_X(A) = X^{-1/2} A X^{-1/2}.
/// Throws SingularP, or InvariantViolation if Gamma(P) != P, the spectral
/// radius exceeds 1, or Gamma is not completely positive.
Superoperator gamma_map(const QuantumChannel& t, const DensityMatrix& p);

/// Second largest eigenvalue of Gamma. Throws InvariantViolation if an
/// eigenvalue of Gamma has imaginary part above 1e-9.
double lambda1(const QuantumChannel& t, const DensityMatrix& p);

/// Rayleigh quotient <N, T^dag Omega_{T(P)} T N> / <N, Omega_P N> whose
/// supremum over traceless Hermitian N is lambda1(T, P).
double lambda1_rayleigh(const QuantumChannel& t, const DensityMatrix& p, const Matrix& n);

/// alpha = 1/2 maximizes lambda1(T, P) over full-rank P; other alpha
/// maximize chi2(T rho, T sigma) / chi2(rho, sigma). Throws ParameterOutOfRange
/// unless alpha is in (0, 1].
ContractionEstimate eta_chi(const QuantumChannel& t, double alpha, int trials, std::uint64_t seed,
                            const SearchOptions& opts = {});

/// Contraction towards the fixed point: lambda1(T, sigma) for mean-alpha(1/2),
/// the second eigenvalue of S_k otherwise. Throws NotPrimitive.
double eta_bar(const QuantumChannel& t, const KFunction& k);

/// sup over rho of ||T(rho) - sigma||_1 / ||rho - sigma||_1, sampled over
/// traceless Hermitian directions N = rho - sigma.
ContractionEstimate eta_bar_tr(const QuantumChannel& t, int trials, std::uint64_t seed,
                               const SearchOptions& opts = {});

}  // namespace qmix
