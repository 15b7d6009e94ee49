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

#include "dqc1/matrix.hpp"
#include "test_support.hpp"

namespace dqc1 {
namespace {

using testing::random_complex;

TEST(QubitCount, PowersOfTwo) {
  EXPECT_EQ(qubit_count(1), 0);
  EXPECT_EQ(qubit_count(2), 1);
  EXPECT_EQ(qubit_count(64), 6);
  EXPECT_THROW(qubit_count(0), std::invalid_argument);
  EXPECT_THROW(qubit_count(6), std::invalid_argument);
}

TEST(Bipartition, RejectsImproperParts) {
  EXPECT_THROW(Bipartition(3, {}), std::invalid_argument);
  EXPECT_THROW(Bipartition(3, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Bipartition(3, {3}), std::invalid_argument);
  EXPECT_THROW(Bipartition(3, {-1}), std::invalid_argument);
  EXPECT_THROW(Bipartition(1, {0}), std::invalid_argument);
  EXPECT_THROW(Bipartition(kMaxQubits + 1, {0}), std::invalid_argument);
}

TEST(Bipartition, TrailingAndMasks) {
  const auto p = Bipartition::trailing(4, 2);
  EXPECT_EQ(p.transposed_part(), (std::set<int>{2, 3}));
  EXPECT_EQ(p.index_mask(), 0b0011u);
  EXPECT_EQ(Bipartition(3, {0}).index_mask(), 0b100u);
  EXPECT_EQ(p.complement().transposed_part(), (std::set<int>{0, 1}));
  EXPECT_TRUE(p.transposes(3));
  EXPECT_FALSE(p.transposes(0));
  EXPECT_THROW(Bipartition::trailing(4, 0), std::invalid_argument);
  EXPECT_THROW(Bipartition::trailing(4, 4), std::invalid_argument);
}

TEST(TensorProduct, MatchesIndexFormula) {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = random_complex(2, 2, rng);
  const ComplexMatrix b = random_complex(4, 4, rng);
  const ComplexMatrix k = tensor_product(a, b);
  ASSERT_EQ(k.rows(), 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) EXPECT_EQ(k(4 * i + r, 4 * j + c), a(i, j) * b(r, c));
}

TEST(PartialTranspose, MatchesDigitSwapReference) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 4; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix m = random_complex(dim, dim, rng);
      std::set<int> part;
      while (part.empty() || static_cast<int>(part.size()) == n) {
        part.clear();
        for (int q = 0; q < n; ++q)
          if (rng() & 1) part.insert(q);
      }
      const ComplexMatrix got = partial_transpose(m, Bipartition(n, part));
      EXPECT_EQ(max_abs(got - testing::reference_partial_transpose(m, n, part)), 0.0);
    }
  }
}

TEST(PartialTranspose, ProductOperatorTransposesOneFactor) {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_complex(2, 2, rng);
  const ComplexMatrix b = random_complex(4, 4, rng);
  const ComplexMatrix got = partial_transpose(tensor_product(a, b), Bipartition::trailing(3, 2));
  EXPECT_LT(max_abs(got - tensor_product(a, b.transpose())), 1e-15);
}

TEST(PartialTranspose, InvolutionTracePreservingHermitian) {
  std::mt19937_64 rng(4);
  const ComplexMatrix h = testing::random_hermitian(16, rng);
  const Bipartition p(4, {1, 3});
  const ComplexMatrix t = partial_transpose(h, p);
  EXPECT_EQ(max_abs(partial_transpose(t, p) - h), 0.0);
  EXPECT_NEAR(std::abs(t.trace() - h.trace()), 0.0, 1e-12);
  EXPECT_TRUE(is_hermitian(t));
}

TEST(PartialTranspose, RejectsWrongDimension) {
  EXPECT_THROW(partial_transpose(ComplexMatrix::Identity(4, 4), Bipartition(3, {1})),
               std::invalid_argument);
}

// tr(A^PT B^PT) = tr(A B): the partial transpose permutes matrix entries
// and pairs them up the same way in both products.
TEST(PartialTranspose, TraceOfProductInvariant) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    const ComplexMatrix a = random_complex(dim, dim, rng);
    const ComplexMatrix b = random_complex(dim, dim, rng);
    const Bipartition p = Bipartition::trailing(n, 1 + static_cast<int>(rng() % (n - 1)));
    const Complex lhs = (partial_transpose(a, p) * partial_transpose(b, p)).trace();
    const Complex rhs = (a * b).trace();
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(HermitianEigenvalues, SortedAndSumToTrace) {
  std::mt19937_64 rng(6);
  const ComplexMatrix h = testing::random_hermitian(8, rng);
  const Spectrum s = hermitian_eigenvalues(h);
  ASSERT_EQ(s.size(), 8u);
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sum += s[i];
    if (i > 0) {
      EXPECT_GE(s[i - 1], s[i]);
    }
  }
  EXPECT_NEAR(sum, h.trace().real(), 1e-12);
}

TEST(HermitianEigenvalues, DiagonalMatrix) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = -1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 0.5;
  const Spectrum s = hermitian_eigenvalues(d);
  EXPECT_NEAR(s[0], 2.0, 1e-15);
  EXPECT_NEAR(s[1], 0.5, 1e-15);
  EXPECT_NEAR(s[2], -1.0, 1e-15);
  EXPECT_NEAR(s.sum_abs(), 3.5, 1e-15);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigenvalues(m), std::invalid_argument);
}

TEST(SingularValues, UnitaryHasUnitSingularValues) {
  std::mt19937_64 rng(7);
  const ComplexMatrix u = testing::haar_unitary(3, rng);
  for (double s : singular_values(u).values) EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(SingularValues, KnownMatrix) {
  ComplexMatrix m(2, 2);
  m << 3.0, 0.0, 0.0, Complex(0.0, -2.0);
  const Spectrum s = singular_values(m);
  EXPECT_NEAR(s[0], 3.0, 1e-15);
  EXPECT_NEAR(s[1], 2.0, 1e-15);
}

TEST(IsUnitary, DetectsDeviation) {
  std::mt19937_64 rng(8);
  ComplexMatrix u = testing::haar_unitary(2, rng);
  EXPECT_TRUE(is_unitary(u));
  u(0, 0) += 1e-6;
  EXPECT_FALSE(is_unitary(u));
  EXPECT_FALSE(is_unitary(ComplexMatrix::Identity(2, 3)));
}

TEST(ApplyOneQubitLeft, MatchesKroneckerEmbedding) {
  std::mt19937_64 rng(9);
  const int n = 3;
  const ComplexMatrix m = random_complex(8, 8, rng);
  const ComplexMatrix g2 = random_complex(2, 2, rng);
  const Eigen::Matrix2cd g = g2;
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  for (int q = 0; q < n; ++q) {
    ComplexMatrix full = ComplexMatrix::Identity(1, 1);
    for (int k = 0; k < n; ++k) full = tensor_product(full, k == q ? g2 : id2);
    ComplexMatrix got = m;
    apply_one_qubit_left(got, g, q, n);
    EXPECT_LT(max_abs(got - full * m), 1e-13) << "qubit " << q;
  }
}

}  // namespace
}  // namespace dqc1
