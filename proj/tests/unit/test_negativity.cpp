// Copyright 2026 The dqc1 Authors
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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "dqc1/negativity.hpp"
#include "dqc1/state.hpp"
#include "test_support.hpp"

namespace dqc1 {
namespace {

ComplexMatrix pure(const Eigen::VectorXcd& psi) { return psi * psi.adjoint(); }

TEST(NegativityEigen, BellStateIsTwo) {
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const auto r = negativity_eigen(pure(bell), Bipartition(2, {1}));
  EXPECT_NEAR(r.m_value, 2.0, 1e-12);
  EXPECT_NEAR(r.n_value, 0.5, 1e-12);
  EXPECT_FALSE(r.is_ppt());
  EXPECT_EQ(r.method, NegativityMethod::kEigen);
}

TEST(NegativityEigen, ProductStateIsPpt) {
  std::mt19937_64 rng(31);
  const Eigen::VectorXcd a = testing::random_complex(2, 1, rng).normalized();
  const Eigen::VectorXcd b = testing::random_complex(4, 1, rng).normalized();
  const ComplexMatrix rho = tensor_product(pure(a), pure(b));
  const auto r = negativity_eigen(rho, Bipartition(3, {1, 2}));
  EXPECT_NEAR(r.m_value, 1.0, 1e-12);
  EXPECT_TRUE(r.is_ppt());
}

TEST(NegativityEigen, MaximallyMixedIsOne) {
  const ComplexMatrix rho = ComplexMatrix::Identity(8, 8) / 8.0;
  EXPECT_NEAR(negativity_eigen(rho, Bipartition(3, {0})).m_value, 1.0, 1e-15);
}

// Schmidt form sum_j sqrt(mu_j) |j>|j> checked against the pure-state formula.
TEST(NegativityEigen, PureStateFormula) {
  const std::array<double, 4> mu = {0.4, 0.3, 0.2, 0.1};
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(16);
  for (int j = 0; j < 4; ++j) psi(4 * j + j) = std::sqrt(mu[j]);
  const double m = negativity_eigen(pure(psi), Bipartition::trailing(4, 2)).m_value;
  EXPECT_NEAR(m, pure_state_negativity(mu), 1e-12);
}

TEST(NegativityEigen, RelationBetweenMAndN) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const Dqc1State s = build_state(testing::haar_unitary(3, rng), 1.0);
    const auto r = negativity_eigen(s.rho(), Bipartition::trailing(4, 2));
    EXPECT_NEAR(r.m_value, 1.0 + 2.0 * r.n_value, 1e-12);
  }
}

TEST(NegativityEigen, ComplementGivesSameValue) {
  std::mt19937_64 rng(33);
  const Dqc1State s = build_state(testing::haar_unitary(3, rng), 1.0);
  const Bipartition p(4, {1, 3});
  EXPECT_NEAR(negativity_eigen(s.rho(), p).m_value,
              negativity_eigen(s.rho(), p.complement()).m_value, 1e-12);
}

TEST(NegativityEigen, RejectsNonDensityMatrices) {
  EXPECT_THROW(negativity_eigen(ComplexMatrix::Identity(4, 4), Bipartition(2, {0})),
               std::invalid_argument);
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  m(0, 1) = 0.1;
  EXPECT_THROW(negativity_eigen(m, Bipartition(2, {0})), std::invalid_argument);
}

TEST(NegativitySingular, AgreesWithEigenOnRandomStates) {
  std::mt19937_64 rng(34);
  for (int n = 1; n <= 5; ++n) {
    const ComplexMatrix u = testing::haar_unitary(n, rng);
    for (double alpha : {0.2, 0.7, 1.0}) {
      const Dqc1State s = build_state(u, alpha);
      for (int k = 1; k <= n; ++k) {
        const Bipartition p = Bipartition::trailing(n + 1, k);
        const auto e = negativity_eigen(s.rho(), p);
        const auto v = negativity_singular(s, p);
        EXPECT_NEAR(e.m_value, v.m_value, 1e-9) << "n=" << n << " k=" << k;
        EXPECT_NEAR(e.n_value, v.n_value, 1e-9);
      }
    }
  }
}

TEST(NegativitySingular, PartContainingSpecialQubitUsesComplement) {
  std::mt19937_64 rng(35);
  const Dqc1State s = build_state(testing::haar_unitary(3, rng), 1.0);
  const Bipartition p(4, {0, 1});
  const auto v = negativity_singular(s, p);
  EXPECT_TRUE(v.used_complement);
  EXPECT_NEAR(v.m_value, negativity_eigen(s.rho(), p).m_value, 1e-9);
}

TEST(NegativitySingular, PartitionMustMatch) {
  const Dqc1State s = build_state(ComplexMatrix::Identity(4, 4), 1.0);
  EXPECT_THROW(negativity_singular(s, Bipartition(4, {1})), std::invalid_argument);
}

TEST(SpecialQubit, NeverEntangledWithTheRest) {
  std::mt19937_64 rng(36);
  for (int n = 1; n <= 5; ++n) {
    const Dqc1State s = build_state(testing::haar_unitary(n, rng), 1.0);
    EXPECT_NEAR(negativity_eigen(s.rho(), Bipartition(n + 1, {0})).m_value, 1.0, 1e-10);
  }
}

TEST(Polarization, ZeroAlphaIsSeparable) {
  std::mt19937_64 rng(37);
  const Dqc1State s = build_state(testing::haar_unitary(3, rng), 0.0);
  EXPECT_NEAR(negativity_eigen(s.rho(), Bipartition::trailing(4, 2)).m_value, 1.0, 1e-12);
  EXPECT_NEAR(negativity_singular(s, Bipartition::trailing(4, 2)).m_value, 1.0, 1e-15);
}

TEST(UnitaryPartialTranspose, MatchesReference) {
  std::mt19937_64 rng(38);
  const ComplexMatrix u = testing::haar_unitary(3, rng);
  // Register qubits {2, 3} are operator qubits {1, 2}.
  const ComplexMatrix got = unitary_partial_transpose(u, Bipartition(4, {2, 3}));
  EXPECT_EQ(max_abs(got - testing::reference_partial_transpose(u, 3, {1, 2})), 0.0);
  EXPECT_THROW(unitary_partial_transpose(u, Bipartition(4, {0})), std::invalid_argument);
  EXPECT_THROW(unitary_partial_transpose(u, Bipartition(3, {1})), std::invalid_argument);
}

TEST(PureStateNegativity, Examples) {
  const std::array<double, 2> bell = {0.5, 0.5};
  EXPECT_NEAR(pure_state_negativity(bell), 2.0, 1e-15);
  const std::array<double, 1> product = {1.0};
  EXPECT_NEAR(pure_state_negativity(product), 1.0, 1e-15);
  const std::array<double, 4> uniform = {0.25, 0.25, 0.25, 0.25};
  EXPECT_NEAR(pure_state_negativity(uniform), 4.0, 1e-14);
  const std::array<double, 2> negative = {1.5, -0.5};
  EXPECT_THROW(pure_state_negativity(negative), std::invalid_argument);
  const std::array<double, 2> unnormalized = {0.5, 0.4};
  EXPECT_THROW(pure_state_negativity(unnormalized), std::invalid_argument);
}

}  // namespace
}  // namespace dqc1
