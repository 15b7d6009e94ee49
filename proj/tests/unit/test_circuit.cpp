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
#include <sstream>

#include "dqc1/circuit.hpp"
#include "dqc1/io.hpp"
#include "test_support.hpp"

namespace dqc1 {
namespace {

TEST(GateCircuit, ValidatesOperands) {
  GateCircuit c(3);
  EXPECT_NO_THROW(c.add(Gate::toffoli(0, 1, 2)));
  EXPECT_THROW(c.add(Gate::h(3)), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::cnot(1, 1)), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::toffoli(0, 2, 2)), std::invalid_argument);
  EXPECT_THROW(c.add(Gate::t(-1)), std::invalid_argument);
  EXPECT_THROW(GateCircuit(0), std::invalid_argument);
  EXPECT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.count(GateKind::kToffoli), 1u);
  EXPECT_EQ(Gate::cnot(0, 2).target(), 2);
}

TEST(CircuitFormat, RoundTrip) {
  std::mt19937_64 rng(61);
  const GateCircuit c = testing::random_t_circuit(4, 30, 100, rng);
  std::stringstream ss;
  write_circuit(ss, c);
  EXPECT_EQ(read_circuit(ss), c);
}

TEST(CircuitFormat, CommentsAndBlankLines) {
  std::istringstream in("# header\n\nqubits 3\nH 0  # first\nTOFFOLI 0 1 2\n\nCNOT 2 0\nT 1\n");
  const GateCircuit c = read_circuit(in);
  ASSERT_EQ(c.gates().size(), 4u);
  EXPECT_EQ(c.gates()[1], Gate::toffoli(0, 1, 2));
  EXPECT_EQ(c.gates()[2], Gate::cnot(2, 0));
}

int error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_circuit(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(CircuitFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 0);
  EXPECT_EQ(error_line("H 0\n"), 1);
  EXPECT_EQ(error_line("qubits 2\nH 0\nX 1\n"), 3);
  EXPECT_EQ(error_line("qubits 2\nCNOT 0\n"), 2);
  EXPECT_EQ(error_line("qubits 2\n\nH 2\n"), 3);
  EXPECT_EQ(error_line("qubits 2\nH a\n"), 2);
  EXPECT_EQ(error_line("qubits 0\n"), 1);
  EXPECT_EQ(error_line("qubits 2\nCNOT 1 1\n"), 2);
}

TEST(CircuitUnitary, SingleGates) {
  GateCircuit h(1);
  h.add(Gate::h(0));
  EXPECT_NEAR(std::abs(circuit_unitary(h).trace()), 0.0, 1e-15);

  GateCircuit t(1);
  t.add(Gate::t(0));
  EXPECT_NEAR(std::abs(circuit_unitary(t).trace() -
                       (1.0 + std::polar(1.0, std::numbers::pi / 4))),
              0.0, 1e-15);

  // Qubit 0 is the most significant index bit: CNOT(0, 1) maps |10> to |11>.
  GateCircuit cx(2);
  cx.add(Gate::cnot(0, 1));
  const ComplexMatrix u = circuit_unitary(cx);
  EXPECT_EQ(u(0b11, 0b10), Complex(1.0, 0.0));
  EXPECT_EQ(u(0b01, 0b01), Complex(1.0, 0.0));
  EXPECT_EQ(u.trace(), Complex(2.0, 0.0));

  GateCircuit tof(3);
  tof.add(Gate::toffoli(0, 1, 2));
  const ComplexMatrix v = circuit_unitary(tof);
  EXPECT_EQ(v(0b111, 0b110), Complex(1.0, 0.0));
  EXPECT_EQ(v.trace(), Complex(6.0, 0.0));
}

TEST(CircuitUnitary, GateOrderIsLeftToRight) {
  // H then T: U = T H.
  GateCircuit c(1);
  c.add(Gate::h(0));
  c.add(Gate::t(0));
  const double r = std::numbers::sqrt2 / 2;
  ComplexMatrix expected(2, 2);
  const Complex w = std::polar(1.0, std::numbers::pi / 4);
  expected << r, r, w * r, -w * r;
  EXPECT_LT(max_abs(circuit_unitary(c) - expected), 1e-15);
}

TEST(CircuitUnitary, RandomCircuitsAreUnitary) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(is_unitary(circuit_unitary(testing::random_t_circuit(4, 25, 100, rng))));
    EXPECT_TRUE(is_unitary(circuit_unitary(testing::random_toffoli_circuit(4, 25, 100, rng))));
  }
  EXPECT_THROW(circuit_unitary(GateCircuit(kMaxDenseCircuitQubits + 1)), std::invalid_argument);
}

}  // namespace
}  // namespace dqc1
