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

#include "dqc1/circuit.hpp"
#include "dqc1/matrix.hpp"

// A family of n-qubit unitaries whose one-clean-qubit output state has the
// same partial-transpose negativity for every n >= 2.
//
// A seed unitary on k qubits is written in blocks [[A, C], [D, B]] over its
// first qubit, and extended to n qubits as
//
//   U_n = |0><0| (x) I_{n-k} (x) A + |1><1| (x) I_{n-k} (x) B
//       + |0><1| (x) X_{n-k} (x) C + |1><0| (x) X_{n-k} (x) D,
//
// so the seed acts on the first and last k-1 qubits and the middle qubits
// are flipped whenever the first qubit is.

namespace dqc1 {

/// Blocks of the seed [[a, c], [d, b]].  All four share one power-of-2
/// dimension (2 for the two-qubit seed).
struct U2Blocks {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix c;
  ComplexMatrix d;
};

/// The 0/1 blocks that give negativity (2 alpha + 3)/4.
U2Blocks canonical_u2();

ComplexMatrix assemble_seed(const U2Blocks& blocks);

/// Largest deviation in A^dag A + D^dag D = I, B^dag B + C^dag C = I and
/// A^dag C + D^dag B = 0.
double blocks_unitarity_residual(const U2Blocks& blocks);

/// Throws std::invalid_argument if n is smaller than the seed, the blocks
/// are inconsistent, or the seed is not unitary to 1e-12.
ComplexMatrix build_family(int n, const U2Blocks& blocks);

/// Gate-level realization for the canonical seed: CNOTs from qubit 0 onto
/// qubits 1..n-2, the seed on qubits (0, n-1) as an H/T/CNOT sequence, then
/// the CNOTs mirrored.
GateCircuit circuit_family(int n);

/// The canonical seed as H/T/CNOT gates on qubits (first, last).
void append_canonical_seed(GateCircuit& c, int first, int last);

/// True when unpolarized qubits 1 and n of the (n+1)-qubit register lie on
/// different sides of the split.
bool separates_first_and_last(const Bipartition& part);

/// Closed-form negativity of the canonical family state: 1 when qubits 1 and
/// n share a side, max(1, (2 alpha + 3)/4) otherwise.
double family_negativity(int n, double alpha, const Bipartition& part);

}  // namespace dqc1
