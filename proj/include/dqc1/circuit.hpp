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

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dqc1/matrix.hpp"

namespace dqc1 {

enum class GateKind { kH, kT, kCnot, kToffoli };

std::string_view gate_name(GateKind kind);

struct Gate {
  GateKind kind;
  /// Operands in order: target for H/T; control, target for CNOT;
  /// control, control, target for TOFFOLI.  Unused slots are -1.
  std::array<int, 3> qubits;

  static Gate h(int q) { return {GateKind::kH, {q, -1, -1}}; }
  static Gate t(int q) { return {GateKind::kT, {q, -1, -1}}; }
  static Gate cnot(int c, int t) { return {GateKind::kCnot, {c, t, -1}}; }
  static Gate toffoli(int c1, int c2, int t) {
    return {GateKind::kToffoli, {c1, c2, t}};
  }

  int arity() const;
  int target() const { return qubits[arity() - 1]; }

  bool operator==(const Gate&) const = default;
};

/// Ordered H / T / CNOT / TOFFOLI gate list on n qubits.  Qubit 0 is the
/// most significant bit of the unitary's index.
class GateCircuit {
 public:
  explicit GateCircuit(int n_qubits);

  /// Throws std::invalid_argument on out-of-range or repeated operands.
  void add(const Gate& gate);

  int n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t count(GateKind kind) const;

  bool operator==(const GateCircuit&) const = default;

 private:
  int n_;
  std::vector<Gate> gates_;
};

// Circuit text format:
//   qubits <n>
//   H <q> | T <q> | CNOT <c> <t> | TOFFOLI <c1> <c2> <t>
// one gate per line; blank lines and '#' comments are ignored.
// Malformed input throws ParseError with the offending line number.
GateCircuit read_circuit(std::istream& in);
void write_circuit(std::ostream& out, const GateCircuit& c);
GateCircuit load_circuit_file(const std::string& path);

inline constexpr int kMaxDenseCircuitQubits = 10;

/// Dense product of the gate matrices (first gate applied first).
ComplexMatrix circuit_unitary(const GateCircuit& c);

}  // namespace dqc1
