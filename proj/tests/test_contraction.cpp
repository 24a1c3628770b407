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


#include "qmix/catalog.hpp"
#include "qmix/contraction.hpp"
#include "qmix/metric.hpp"
#include "qmix/random.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qmix {
namespace {

using testing::max_abs_diff;

TEST(EtaTr, DepolarizingIsOneMinusP) {
  const ContractionEstimate e = eta_tr(depolarizing_channel(2, 0.3), 8, 1);
  EXPECT_NEAR(e.value, 0.7, 1e-6);
  EXPECT_EQ(e.kind, EstimateKind::LowerBoundSampled);
  ASSERT_EQ(e.witness.size(), 2u);
}

TEST(EtaTr, UnitaryIsOne) { EXPECT_NEAR(eta_tr(z_rotation_channel(0.4), 8, 2).value, 1.0, 1e-9); }

TEST(EtaTr, OrthogonalPairOracle) {
  // Replacement channel rho -> tr(rho) |0><0| maps every pair to the same state.
  Matrix a0 = Matrix::Zero(2, 2), a1 = Matrix::Zero(2, 2);
  a0(0, 0) = 1.0;
  a1(0, 1) = 1.0;
  const QuantumChannel t = QuantumChannel::from_kraus({a0, a1});
  EXPECT_NEAR(eta_tr(t, 4, 3).value, 0.0, 1e-12);
  Vector psi(2), phi(2);
  psi << 1.0, 0.0;
  phi << 0.0, 1.0;
  EXPECT_NEAR(trace_pair_value(depolarizing_channel(2, 0.5), psi, phi), 0.5, 1e-12);
}

TEST(EtaTr, DeterministicForSeed) {
  Rng rng(61);
  const QuantumChannel t = random_channel(2, 2, rng);
  EXPECT_EQ(eta_tr(t, 8, 77).value, eta_tr(t, 8, 77).value);
  EXPECT_EQ(eta_chi(t, 0.5, 8, 77).value, eta_chi(t, 0.5, 8, 77).value);
}

TEST(Gamma, FixesPAndIsSelfAdjointInOmega) {
  Rng rng(62);
  const QuantumChannel t = random_channel(3, 2, rng);
  const DensityMatrix p = random_density(3, rng);
  const Superoperator g = gamma_map(t, p);
  EXPECT_LT(max_abs_diff(g.apply(p.matrix()), p.matrix()), 1e-9);
  const double l1 = lambda1(t, p);
  EXPECT_GE(l1, -1e-12);
  EXPECT_LE(l1, 1.0 + 1e-9);
  for (int i = 0; i < 20; ++i) {
    Matrix n = random_hermitian(3, rng);
    n -= n.trace() / 3.0 * Matrix::Identity(3, 3);
    EXPECT_LE(lambda1_rayleigh(t, p, n), l1 + 1e-8);
  }
}

TEST(Gamma, SingularP) {
  try {
    gamma_map(depolarizing_channel(2, 0.5), DensityMatrix::basis_state(2, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularP);
  }
}

TEST(EtaChi, DepolarizingLowerBound) {
  // At P = 1/2 the depolarizing channel scales traceless N by (1 - p).
  const ContractionEstimate e = eta_chi(depolarizing_channel(2, 0.4), 0.5, 8, 5);
  EXPECT_GE(e.value, 0.36 - 1e-9);
  EXPECT_LE(e.value, 1.0 + 1e-9);
}

TEST(EtaChi, OtherAlphaIsChi2Ratio) {
  Rng rng(63);
  const QuantumChannel t = random_channel(2, 2, rng);
  const ContractionEstimate e = eta_chi(t, 0.8, 8, 6);
  ASSERT_EQ(e.witness.size(), 2u);
  const KFunction k = KFunction::mean_alpha(0.8);
  const DensityMatrix rho(e.witness[0]), sigma(e.witness[1]);
  const double ratio = chi2(DensityMatrix(t.apply(rho.matrix())), DensityMatrix(t.apply(sigma.matrix())), k).value() /
                       chi2(rho, sigma, k).value();
  EXPECT_NEAR(ratio, e.value, 1e-8);
}

TEST(EtaChi, AlphaRange) {
  for (double a : {0.0, -0.1, 1.5}) {
    try {
      eta_chi(depolarizing_channel(2, 0.4), a, 2, 1);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParameterOutOfRange);
    }
  }
}

TEST(EtaBar, DepolarizingIsSquared) {
  for (const auto& k : standard_k_functions())
    EXPECT_NEAR(eta_bar(depolarizing_channel(2, 0.3), k), 0.49, 1e-10) << k.name();
  EXPECT_NEAR(eta_bar(paper_qubit_channel(), KFunction::mean_alpha(0.5)), 0.49, 1e-10);
  EXPECT_THROW(eta_bar(z_rotation_channel(0.3), KFunction::bures()), Error);
}

TEST(EtaBarTr, BoundedByEtaTr) {
  Rng rng(64);
  for (int i = 0; i < 5; ++i) {
    const QuantumChannel t = random_channel(2, 2, rng);
    const double bar = eta_bar_tr(t, 8, i).value;
    const double tr = eta_tr(t, 8, i).value;
    EXPECT_LE(bar, tr + 2e-3);
    EXPECT_LE(eta_bar(t, KFunction::mean_alpha(0.5)), bar + 2e-3);
  }
}

}  // namespace
}  // namespace qmix
