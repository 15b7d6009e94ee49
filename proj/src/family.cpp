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

#include "dqc1/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dqc1 {

namespace {

ComplexMatrix matrix2(double m00, double m01, double m10, double m11) {
  ComplexMatrix m(2, 2);
  m << m00, m01, m10, m11;
  return m;
}

ComplexMatrix pauli_x_power(int count) {
  ComplexMatrix x = matrix2(0, 1, 1, 0);
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i = 0; i < count; ++i) out = tensor_product(out, x);
  return out;
}

}  // namespace

U2Blocks canonical_u2() {
  return {
      matrix2(0, 0, 0, 1),  // A
      matrix2(1, 0, 0, 0),  // B
      matrix2(0, 1, 0, 0),  // C
      matrix2(0, 0, 1, 0),  // D
  };
}

ComplexMatrix assemble_seed(const U2Blocks& blocks) {
  const Eigen::Index d = blocks.a.rows();
  ComplexMatrix u(2 * d, 2 * d);
  u.topLeftCorner(d, d) = blocks.a;
  u.topRightCorner(d, d) = blocks.c;
  u.bottomLeftCorner(d, d) = blocks.d;
  u.bottomRightCorner(d, d) = blocks.b;
  return u;
}

double blocks_unitarity_residual(const U2Blocks& blk) {
  const Eigen::Index d = blk.a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return std::max({
      max_abs(blk.a.adjoint() * blk.a + blk.d.adjoint() * blk.d - id),
      max_abs(blk.b.adjoint() * blk.b + blk.c.adjoint() * blk.c - id),
      max_abs(blk.a.adjoint() * blk.c + blk.d.adjoint() * blk.b),
  });
}

ComplexMatrix build_family(int n, const U2Blocks& blocks) {
  const Eigen::Index d = blocks.a.rows();
  for (const ComplexMatrix* m : {&blocks.a, &blocks.b, &blocks.c, &blocks.d}) {
    if (m->rows() != d || m->cols() != d) {
      throw std::invalid_argument("build_family: blocks must share one square shape");
    }
  }
  const int seed_qubits = qubit_count(d) + 1;
  if (n < std::max(2, seed_qubits)) {
    throw std::invalid_argument("build_family: n = " + std::to_string(n) +
                                " is smaller than the " +
                                std::to_string(seed_qubits) + "-qubit seed");
  }
  if (n > kMaxQubits - 1) {
    throw std::invalid_argument("build_family: register too large");
  }
  if (blocks_unitarity_residual(blocks) > 1e-12) {
    throw std::invalid_argument("build_family: seed blocks are not unitary");
  }

  const int middle = n - seed_qubits;
  const ComplexMatrix id = ComplexMatrix::Identity(Eigen::Index{1} << middle,
                                                   Eigen::Index{1} << middle);
  const ComplexMatrix flips = pauli_x_power(middle);
  const Eigen::Index half = Eigen::Index{1} << (n - 1);
  ComplexMatrix u(2 * half, 2 * half);
  u.topLeftCorner(half, half) = tensor_product(id, blocks.a);
  u.topRightCorner(half, half) = tensor_product(flips, blocks.c);
  u.bottomLeftCorner(half, half) = tensor_product(flips, blocks.d);
  u.bottomRightCorner(half, half) = tensor_product(id, blocks.b);
  return u;
}

void append_canonical_seed(GateCircuit& c, int first, int last) {
  // The seed swaps |00> <-> |11> and fixes |01>, |10>:
  // CNOT(f, l) X_l CNOT(l, f) X_l CNOT(f, l), with X = H T^4 H.
  auto x_gate = [&](int q) {
    c.add(Gate::h(q));
    for (int i = 0; i < 4; ++i) c.add(Gate::t(q));
    c.add(Gate::h(q));
  };
  c.add(Gate::cnot(first, last));
  x_gate(last);
  c.add(Gate::cnot(last, first));
  x_gate(last);
  c.add(Gate::cnot(first, last));
}

GateCircuit circuit_family(int n) {
  if (n < 2) throw std::invalid_argument("circuit_family: n must be >= 2");
  GateCircuit c(n);
  for (int q = 1; q <= n - 2; ++q) c.add(Gate::cnot(0, q));
  append_canonical_seed(c, 0, n - 1);
  for (int q = n - 2; q >= 1; --q) c.add(Gate::cnot(0, q));
  return c;
}

bool separates_first_and_last(const Bipartition& part) {
  const int n = part.total_qubits() - 1;
  return part.transposes(1) != part.transposes(n);
}

double family_negativity(int n, double alpha, const Bipartition& part) {
  if (n < 2) throw std::invalid_argument("family_negativity: n must be >= 2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("family_negativity: alpha must lie in [0, 1]");
  }
  if (part.total_qubits() != n + 1) {
    throw std::invalid_argument("family_negativity: partition size mismatch");
  }
  if (!separates_first_and_last(part)) return 1.0;
  return std::max(1.0, (2.0 * alpha + 3.0) / 4.0);
}

}  // namespace dqc1
