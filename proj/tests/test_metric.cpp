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
#include "qmix/metric.hpp"
#include "qmix/random.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qmix {
namespace {

using testing::max_abs_diff;

Matrix inverse(const Matrix& m) { return m.inverse(); }

TEST(KFunction, ClosedForms) {
  EXPECT_NEAR(KFunction::bures()(3.0), 0.5, 1e-15);
  EXPECT_NEAR(KFunction::maximal()(3.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(KFunction::log()(std::exp(1.0)), 1.0 / (std::exp(1.0) - 1.0), 1e-15);
  EXPECT_NEAR(KFunction::mean_alpha(0.5)(4.0), 0.5, 1e-15);
  EXPECT_NEAR(KFunction::hansen(0.5)(4.0), 0.5, 1e-15);
  EXPECT_NEAR(KFunction::log()(1.0), 1.0, 1e-12);
}

TEST(KFunction, NormalizationAndSymmetry) {
  for (const auto& k : standard_k_functions()) {
    EXPECT_NEAR(k(1.0), 1.0, 1e-12) << k.name();
    for (double w : {0.01, 0.3, 1.7, 25.0}) EXPECT_NEAR(k(1.0 / w), w * k(w), 1e-9 * w * k(w)) << k.name();
  }
}

TEST(KFunction, DomainAndParameters) {
  try {
    k_eval(KFunction::bures(), 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
  EXPECT_THROW(KFunction::mean_alpha(1.5), Error);
  EXPECT_THROW(KFunction::wyd(0.0), Error);
  EXPECT_EQ(KFunction::from_family("mean-alpha", 0.25), KFunction::mean_alpha(0.25));
  EXPECT_THROW(KFunction::from_family("nope", std::nullopt), Error);
}

class OmegaOracle : public ::testing::Test {
 protected:
  Rng rng{31};
};

TEST_F(OmegaOracle, BuresIsInverseOfAnticommutator) {
  const DensityMatrix s = random_density(3, rng);
  const Matrix oracle = 2.0 * inverse(left_mult(s.matrix()) + right_mult(s.matrix()));
  EXPECT_LT(max_abs_diff(omega(s, KFunction::bures()).power(1.0).matrix(), oracle), 1e-8);
}

TEST_F(OmegaOracle, MaximalIsMeanOfInverses) {
  const DensityMatrix s = random_density(3, rng);
  const Matrix l = inverse(left_mult(s.matrix())), r = inverse(right_mult(s.matrix()));
  EXPECT_LT(max_abs_diff(omega(s, KFunction::maximal()).power(1.0).matrix(), 0.5 * (l + r)), 1e-8);
}

TEST_F(OmegaOracle, MeanAlphaIsSymmetrizedProduct) {
  const DensityMatrix s = random_density(2, rng);
  const double a = 0.3;
  const Matrix la = left_mult(psd_power(s.matrix(), -a)), lb = left_mult(psd_power(s.matrix(), a - 1.0));
  const Matrix ra = right_mult(psd_power(s.matrix(), -a)), rb = right_mult(psd_power(s.matrix(), a - 1.0));
  const Matrix oracle = 0.5 * (la * rb + lb * ra);
  EXPECT_LT(max_abs_diff(omega(s, KFunction::mean_alpha(a)).power(1.0).matrix(), oracle), 1e-8);
}

TEST_F(OmegaOracle, PowersCompose) {
  const DensityMatrix s = random_density(3, rng);
  const InversionOperator om = omega(s, KFunction::log());
  const Matrix half = om.power(0.5).matrix();
  EXPECT_LT(max_abs_diff(half * half, om.power(1.0).matrix()), 1e-8);
  EXPECT_LT(max_abs_diff(om.power(-1.0).matrix() * om.power(1.0).matrix(), Matrix::Identity(9, 9)), 1e-8);
  const Matrix x = ginibre(3, 3, rng);
  EXPECT_LT(max_abs_diff(om.apply(x, 0.5), om.power(0.5).apply(x)), 1e-10);
}

TEST_F(OmegaOracle, HalfPowerOfSigmaIsSquareRoot) {
  const DensityMatrix s = random_density(3, rng);
  for (const auto& k : standard_k_functions())
    EXPECT_LT(max_abs_diff(omega(s, k).apply(s.matrix(), 0.5), psd_power(s.matrix(), 0.5)), 1e-12) << k.name();
}

TEST(Chi2, ClassicalDistributionsAgreeForEveryK) {
  RealVector p(3), q(3);
  p << 0.5, 0.3, 0.2;
  q << 0.2, 0.2, 0.6;
  double oracle = 0.0;
  for (int i = 0; i < 3; ++i) oracle += (p(i) - q(i)) * (p(i) - q(i)) / q(i);
  for (const auto& k : standard_k_functions())
    EXPECT_NEAR(chi2(DensityMatrix::diagonal(p), DensityMatrix::diagonal(q), k).value(), oracle, 1e-12) << k.name();
}

TEST(Chi2, InfiniteOutsideSupport) {
  const DensityMatrix rho = DensityMatrix::basis_state(2, 1);
  const DensityMatrix sigma = DensityMatrix::basis_state(2, 0);
  const ExtendedReal x = chi2(rho, sigma, KFunction::bures());
  EXPECT_TRUE(x.is_infinite());
  try {
    (void)x.value();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteChi2);
  }
  EXPECT_EQ(chi2(sigma, sigma, KFunction::bures()).value(), 0.0);
}

TEST(Chi2, HierarchyAndBounds) {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const Index d = 2 + i % 3;
    const DensityMatrix rho = random_density(d, rng), sigma = random_density(d, rng);
    const double lo = chi2(rho, sigma, KFunction::bures()).value();
    const double hi = chi2(rho, sigma, KFunction::maximal()).value();
    const double td = trace_distance(rho.matrix(), sigma.matrix());
    const double s = relative_entropy(rho, sigma).value();
    for (const auto& k : standard_k_functions()) {
      const double c = chi2(rho, sigma, k).value();
      EXPECT_LE(lo, c + 1e-10) << k.name();
      EXPECT_LE(c, hi + 1e-10) << k.name();
      EXPECT_LE(td * td, c + 1e-9) << k.name();
      EXPECT_LE(s, c + 1e-9) << k.name();
    }
  }
}

TEST(Chi2, Monotonicity) {
  Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    const QuantumChannel t = random_channel(3, 2, rng);
    const DensityMatrix rho = random_density(3, rng), sigma = random_density(3, rng);
    for (const auto& k : standard_k_functions()) {
      const double before = chi2(rho, sigma, k).value();
      const double after = chi2(DensityMatrix(t.apply(rho.matrix())), DensityMatrix(t.apply(sigma.matrix())), k).value();
      EXPECT_LE(after, before + 1e-9) << k.name();
    }
  }
}

TEST(Distances, TraceDistanceAndEntropy) {
  const DensityMatrix a = DensityMatrix::basis_state(2, 0), b = DensityMatrix::basis_state(2, 1);
  EXPECT_NEAR(trace_distance(a.matrix(), b.matrix()), 2.0, 1e-15);
  RealVector p(2), q(2);
  p << 0.7, 0.3;
  q << 0.4, 0.6;
  const double kl = 0.7 * std::log(0.7 / 0.4) + 0.3 * std::log(0.3 / 0.6);
  EXPECT_NEAR(relative_entropy(DensityMatrix::diagonal(p), DensityMatrix::diagonal(q)).value(), kl, 1e-12);
  EXPECT_TRUE(relative_entropy(a, b).is_infinite());
}

TEST(DensityMatrix, Validation) {
  Matrix m = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix{m}, Error);
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  EXPECT_THROW(DensityMatrix{m}, Error);
}

TEST(Schwarz, HoldsOnRandomInputs) {
  Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    const QuantumChannel t = random_channel(2, 2, rng);
    const DensityMatrix rho = random_density(2, rng), sigma = random_density(2, rng);
    const SchwarzResult r = schwarz_check(t, rho, sigma, ginibre(2, 2, rng), 0.1 + i * 0.2);
    EXPECT_TRUE(r.holds) << r.lhs << " " << r.rhs;
  }
}

}  // namespace
}  // namespace qmix
