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


#include "qmix/balance.hpp"
#include "qmix/catalog.hpp"
#include "qmix/metric.hpp"
#include "qmix/random.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qmix {
namespace {

using testing::mat2;
using testing::max_abs_diff;

Matrix y_matrix() { return mat2(0.0, -1.0, 1.0, 0.0); }

TEST(Symmetrize, ExampleQubitKrausOperators) {
  const QuantumChannel ts = symmetrize(paper_qubit_channel(), DensityMatrix(paper_qubit_fixed_point()));
  const double r2 = std::sqrt(2.0);
  const std::vector<Matrix> expected{
      0.6 * mat2(1.0, 1.0, 0.5, 0.5),
      r2 / 5.0 * mat2(1.0, -1.0, 0.5, -0.5),
      r2 / 20.0 * mat2(3.0, 3.0, -1.0, -1.0),
      0.2 * mat2(3.0, -3.0, -1.0, 1.0),
  };
  ASSERT_EQ(ts.kraus().size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT(max_abs_diff(ts.kraus()[i], expected[i]), 1e-10) << i;
}

TEST(DetailedBalance, ExampleQubitBuresResidual) {
  const DensityMatrix sigma(paper_qubit_fixed_point());
  const QuantumChannel ts = symmetrize(paper_qubit_channel(), sigma);
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix expected = 7.0 / 600.0 * (kron(id, y_matrix()) + kron(y_matrix(), id));
  const DetailedBalanceReport bures = db_residual(ts, sigma, KFunction::bures());
  EXPECT_LT(max_abs_diff(bures.residual_matrix, expected), 1e-10);
  EXPECT_FALSE(bures.holds);
  const DetailedBalanceReport half = db_residual(ts, sigma, KFunction::mean_alpha(0.5));
  EXPECT_LE(half.residual_norm, 1e-10);
  EXPECT_TRUE(half.holds);
}

TEST(DetailedBalance, ResidualOracle) {
  Rng rng(71);
  const QuantumChannel t = random_channel(2, 2, rng);
  const DensityMatrix sigma = random_density(2, rng);
  const Matrix s = sigma.matrix();
  // Bures inverse: (L + R) / 2.
  const Matrix inv = 0.5 * (left_mult(s) + right_mult(s));
  const Matrix oracle = inv * t.superop().matrix().adjoint() - t.superop().matrix() * inv;
  EXPECT_LT(max_abs_diff(db_residual(t, sigma, KFunction::bures()).residual_matrix, oracle), 1e-10);
}

TEST(DetailedBalance, SingularSigma) {
  try {
    db_residual(paper_qubit_channel(), DensityMatrix::basis_state(2, 0), KFunction::bures());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularSigma);
  }
}

TEST(DetailedBalance, ClassicalChainsForEveryK) {
  Rng rng(72);
  for (int i = 0; i < 10; ++i) {
    RealVector pi;
    const RealMatrix p = random_reversible_chain(2 + i % 4, rng, &pi);
    for (Index a = 0; a < p.rows(); ++a)
      for (Index b = 0; b < p.cols(); ++b) ASSERT_NEAR(p(a, b) * pi(b), p(b, a) * pi(a), 1e-12);
    const QuantumChannel t = classical_embed(p);
    const DensityMatrix sigma = DensityMatrix::diagonal(pi);
    for (const auto& k : standard_k_functions()) {
      EXPECT_LE(db_residual(t, sigma, k).residual_norm, 1e-9) << k.name();
      EXPECT_TRUE(db_fixed_point_check(t, sigma, k));
    }
  }
}

TEST(DetailedBalance, ClassicalEmbedMatchesChain) {
  RealMatrix p(2, 2);
  p << 0.9, 0.2, 0.1, 0.8;
  const QuantumChannel t = classical_embed(p);
  RealVector q(2);
  q << 0.3, 0.7;
  const Matrix out = t.apply(DensityMatrix::diagonal(q).matrix());
  const RealVector oracle = p * q;
  EXPECT_NEAR(out(0, 0).real(), oracle(0), 1e-15);
  EXPECT_NEAR(out(1, 1).real(), oracle(1), 1e-15);
  EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-15);
  p(0, 0) = 0.5;
  try {
    classical_embed(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStochastic);
  }
}

TEST(DetailedBalance, ElementwiseAgreesWithResidual) {
  const DensityMatrix sigma(paper_qubit_fixed_point());
  const QuantumChannel ts = symmetrize(paper_qubit_channel(), sigma);
  const HermitianEigen e = eigh(sigma.matrix());
  for (const auto& k : standard_k_functions()) {
    const bool matrix_verdict = db_residual(ts, sigma, k).holds;
    EXPECT_EQ(db_elementwise(ts, e.values, e.vectors, k).holds, matrix_verdict) << k.name();
  }
  RealVector bad(2);
  bad << 0.5, 0.6;
  try {
    db_elementwise(ts, bad, e.vectors, KFunction::bures());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::InvalidDistribution);
  }
}

TEST(Symmetrize, RandomChannelIsBalanced) {
  Rng rng(73);
  for (int i = 0; i < 10; ++i) {
    const QuantumChannel t = random_channel(2 + i % 2, 2, rng);
    const DensityMatrix sigma = fixed_point(t);
    const QuantumChannel ts = symmetrize(t, sigma);
    EXPECT_LT(max_abs_diff(ts.apply(sigma.matrix()), sigma.matrix()), 1e-9);
    EXPECT_TRUE(db_residual(ts, sigma, KFunction::mean_alpha(0.5)).holds);
    for (const cplx& l : ts.eigenvalues()) EXPECT_LT(std::abs(l.imag()), 1e-8);
  }
}

TEST(Symmetrize, RequiresFixedPoint) {
  try {
    symmetrize(paper_qubit_channel(), DensityMatrix::maximally_mixed(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CompletenessViolation);
  }
}

}  // namespace
}  // namespace qmix
