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

#include <cmath>
#include <numbers>
#include <random>

#include "dqc1/state.hpp"
#include "test_support.hpp"

namespace dqc1 {
namespace {

// The circuit itself: (H (x) I) controlled-U applied to
// (I + alpha Z)/2 (x) I/N, written out with explicit gate matrices.
ComplexMatrix circuit_state(const ComplexMatrix& u, double alpha) {
  const Eigen::Index dim = u.rows();
  const double r = std::numbers::sqrt2 / 2.0;
  ComplexMatrix h(2, 2);
  h << r, r, r, -r;
  ComplexMatrix special(2, 2);
  special << (1.0 + alpha) / 2.0, 0.0, 0.0, (1.0 - alpha) / 2.0;
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix cu = ComplexMatrix::Zero(2 * dim, 2 * dim);
  cu.topLeftCorner(dim, dim) = id;
  cu.bottomRightCorner(dim, dim) = u;
  const ComplexMatrix g = cu * tensor_product(h, id);
  const ComplexMatrix in = tensor_product(special, id / static_cast<double>(dim));
  return g * in * g.adjoint();
}

TEST(BuildState, MatchesCircuitEvolution) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    const ComplexMatrix u = testing::haar_unitary(n, rng);
    for (double alpha : {0.0, 0.3, 1.0}) {
      const Dqc1State s = build_state(u, alpha);
      EXPECT_EQ(s.n(), n);
      EXPECT_EQ(s.total_qubits(), n + 1);
      EXPECT_LT(max_abs(s.rho() - circuit_state(u, alpha)), 1e-14);
    }
  }
}

TEST(BuildState, DensityMatrixProperties) {
  std::mt19937_64 rng(22);
  const Dqc1State s = build_state(testing::haar_unitary(3, rng), 0.7);
  EXPECT_TRUE(is_hermitian(s.rho()));
  EXPECT_NEAR(s.rho().trace().real(), 1.0, 1e-14);
  for (double v : hermitian_eigenvalues(s.rho()).values) EXPECT_GT(v, -1e-14);
}

TEST(BuildState, RejectsBadInput) {
  ComplexMatrix not_unitary = ComplexMatrix::Identity(2, 2);
  not_unitary(0, 1) = 0.5;
  EXPECT_THROW(build_state(not_unitary, 1.0), std::invalid_argument);
  EXPECT_THROW(build_state(ComplexMatrix::Identity(2, 2), 1.5), std::invalid_argument);
  EXPECT_THROW(build_state(ComplexMatrix::Identity(2, 2), std::nan("")), std::invalid_argument);
  EXPECT_THROW(build_state(ComplexMatrix::Identity(3, 3), 1.0), std::invalid_argument);
  EXPECT_THROW(build_state(ComplexMatrix::Identity(2, 4), 1.0), std::invalid_argument);
}

TEST(NormalizedTrace, Examples) {
  EXPECT_EQ(normalized_trace(ComplexMatrix::Identity(4, 4)), Complex(1.0, 0.0));
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  EXPECT_EQ(normalized_trace(z), Complex(0.0, 0.0));
}

TEST(PauliExpectations, OperatorRouteMatchesTraceRoute) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const ComplexMatrix u = testing::haar_unitary(n, rng);
    const double alpha = 0.05 * (trial + 1);
    const Dqc1State s = build_state(u, alpha);
    const auto op = pauli_expectations(s);
    const auto tr = pauli_expectations_from_trace(u, alpha);
    EXPECT_NEAR(op.x, tr.x, 1e-14);
    EXPECT_NEAR(op.y, tr.y, 1e-14);
  }
}

// Independent check with explicit Pauli matrices: <P> = tr(rho (P (x) I)).
TEST(PauliExpectations, ExplicitPauliOperators) {
  std::mt19937_64 rng(24);
  const ComplexMatrix u = testing::haar_unitary(2, rng);
  const Dqc1State s = build_state(u, 0.8);
  ComplexMatrix x(2, 2), y(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  const auto p = pauli_expectations(s);
  EXPECT_NEAR(p.x, (s.rho() * tensor_product(x, id)).trace().real(), 1e-14);
  EXPECT_NEAR(p.y, (s.rho() * tensor_product(y, id)).trace().real(), 1e-14);
}

TEST(RequiredRuns, Formula) {
  EXPECT_EQ(required_runs(1.0, 0.05, 0.01),
            static_cast<std::int64_t>(std::ceil(2.0 * std::log(400.0) / 0.0025)));
  EXPECT_EQ(required_runs(0.25, 0.05, 0.01),
            static_cast<std::int64_t>(std::ceil(2.0 * std::log(400.0) / (0.0625 * 0.0025))));
  EXPECT_THROW(required_runs(0.0, 0.05, 0.01), std::invalid_argument);
  EXPECT_THROW(required_runs(1.0, 0.0, 0.01), std::invalid_argument);
  EXPECT_THROW(required_runs(1.0, 0.05, 1.0), std::invalid_argument);
}

TEST(EstimateTrace, IdentityHasExactRealPart) {
  const auto est = estimate_trace(ComplexMatrix::Identity(8, 8), 1.0, 0.05, 0.01, 1);
  EXPECT_EQ(est.estimate.real(), 1.0);
  EXPECT_LE(std::abs(est.estimate.imag()), 0.05);
  EXPECT_EQ(est.runs_used, required_runs(1.0, 0.05, 0.01));
}

TEST(EstimateTrace, DeterministicPerSeed) {
  std::mt19937_64 rng(25);
  const ComplexMatrix u = testing::haar_unitary(3, rng);
  const auto a = estimate_trace(u, 0.5, 0.1, 0.05, 9);
  const auto b = estimate_trace(u, 0.5, 0.1, 0.05, 9);
  const auto c = estimate_trace(u, 0.5, 0.1, 0.05, 10);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_NE(a.estimate, c.estimate);
}

TEST(EstimateTrace, WithinEpsilon) {
  std::mt19937_64 rng(26);
  int within = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const ComplexMatrix u = testing::haar_unitary(2, rng);
    const auto est = estimate_trace(u, 1.0, 0.05, 0.01, trial);
    within += std::abs(est.estimate - normalized_trace(u)) <= 0.05;
  }
  EXPECT_GE(within, 39);
}

TEST(EstimateTrace, RejectsNonUnitary) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 2.0;
  EXPECT_THROW(estimate_trace(m, 1.0, 0.1, 0.1, 0), std::invalid_argument);
}

TEST(SeparableDecomposition, ReproducesStateWithProductTerms) {
  std::mt19937_64 rng(27);
  for (double alpha : {0.0, 0.4, 1.0}) {
    const Dqc1State s = build_state(testing::haar_unitary(3, rng), alpha);
    const auto terms = separable_decomposition(s);
    ASSERT_EQ(terms.size(), 16u);
    double total = 0.0;
    for (const auto& t : terms) {
      EXPECT_GE(t.weight, 0.0);
      EXPECT_NEAR(t.special.norm(), 1.0, 1e-12);
      EXPECT_NEAR(t.rest.norm(), 1.0, 1e-12);
      total += t.weight;
    }
    EXPECT_NEAR(total, 1.0, 1e-14);
    EXPECT_LT(max_abs(mixture(terms) - s.rho()), 1e-12);
  }
}

TEST(SeparableDecomposition, DegenerateSpectrum) {
  // Z (x) Z has twofold degenerate eigenvalues.
  ComplexMatrix zz = ComplexMatrix::Identity(4, 4);
  zz(1, 1) = zz(2, 2) = -1.0;
  const Dqc1State s = build_state(zz, 1.0);
  EXPECT_LT(max_abs(mixture(separable_decomposition(s)) - s.rho()), 1e-12);
}

TEST(SeparableBall, Thresholds) {
  const auto b = separable_ball_alpha(2);
  EXPECT_NEAR(b.proven_separable, 2.0 / std::pow(3.0, 1.5), 1e-15);
  EXPECT_NEAR(b.entangled_family_limit, 2.0 / std::pow(2.0, 1.5), 1e-15);
  EXPECT_LT(b.proven_separable, b.entangled_family_limit);
  EXPECT_THROW(separable_ball_alpha(0), std::invalid_argument);
}

TEST(SeparableBall, DistanceFromMaximallyMixed) {
  std::mt19937_64 rng(28);
  for (int n = 1; n <= 4; ++n) {
    const Dqc1State s = build_state(testing::haar_unitary(n, rng), 0.6);
    const double expected = 0.6 / std::sqrt(2.0 * std::pow(2.0, n));
    EXPECT_NEAR(distance_from_maximally_mixed(s.rho()), expected, 1e-13);
  }
}

}  // namespace
}  // namespace dqc1
