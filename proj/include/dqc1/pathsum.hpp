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
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dqc1/circuit.hpp"
#include "dqc1/matrix.hpp"

// Sum-over-paths evaluation of tr U for circuits over {H, Toffoli} or
// {H, T, CNOT}.
//
// The circuit is bracketed by a layer of H on every qubit.  A path is then
// fixed by the n input bits, the n outputs of the first H layer and the h
// outputs of the remaining internal H gates; the outputs of the last layer
// are tied to the input bits, which closes the trace.  With 2n + h path bits
//
//   tr U = 2^{-(n + h/2)} sum_x (-1)^{psi(x)}                  ({H, Toffoli})
//   tr U = 2^{-(n + h/2)} sum_x w^{chi(x)} (-1)^{phi(x)}       ({H, T, CNOT})
//
// with w = exp(i pi/4), psi cubic and phi quadratic over Z2, and chi a Z8
// linear form.

namespace dqc1::pathsum {

enum class Mode { kToffoli, kTGate };

/// A monomial is a sorted list of distinct path-bit indices; the empty list
/// is the constant 1.
using Monomial = std::vector<int>;

/// Multilinear polynomial over Z2, monomials in canonical order (by degree,
/// then lexicographic).
struct Z2Polynomial {
  std::vector<Monomial> terms;

  int degree() const;
  bool evaluate(const std::vector<std::uint8_t>& bits) const;
  friend bool operator==(const Z2Polynomial&, const Z2Polynomial&) = default;
};

struct PathPolynomials {
  Mode mode = Mode::kToffoli;
  int n_qubits = 0;
  int n_path_bits = 0;     // 2n + h
  int hadamard_count = 0;  // h: H gates besides the two bracket layers
  Z2Polynomial psi;        // kToffoli
  Z2Polynomial phi;        // kTGate
  std::vector<int> chi;    // kTGate: coefficient per path bit, in [0, 8)

  /// The Z2 part of the phase, psi or phi by mode.
  const Z2Polynomial& sign_polynomial() const;
  /// Exponent k of w^k for one path: 4 * sign + chi, mod 8.
  int phase_index(const std::vector<std::uint8_t>& bits) const;
};

/// H on every qubit, then c, then H on every qubit.
GateCircuit hadamard_bracket(const GateCircuit& c);

/// kToffoli: inserts H H on the target after every Toffoli.
/// kTGate: inserts H H on the operand before every T.
/// Throws std::invalid_argument if c uses a gate outside the mode's set
/// ({H, TOFFOLI} or {H, T, CNOT}).
GateCircuit rewrite_for_degree(const GateCircuit& c, Mode mode);

/// Symbolic forward pass.  c must start and end with H(0), ..., H(n-1)
/// (std::invalid_argument otherwise).  Path bits are numbered input bits,
/// first-layer outputs, then internal H outputs in circuit order.  Throws
/// std::logic_error when psi would exceed degree 3, or when a T acts on a
/// wire that is not a single path bit, both of which mean the circuit was
/// not rewritten.
PathPolynomials compile(const GateCircuit& c, Mode mode);

/// rewrite_for_degree, hadamard_bracket and compile in one step.
PathPolynomials compile_circuit(const GateCircuit& c, Mode mode);

inline constexpr int kEnumerationBudget = 26;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int required, int budget);
  int required() const { return required_; }
  int budget() const { return budget_; }

 private:
  int required_;
  int budget_;
};

/// Element of Z[w]: coords[0] + coords[1] w + coords[2] w^2 + coords[3] w^3,
/// using w^4 = -1.
struct CyclotomicInt {
  std::array<std::int64_t, 4> coords{};

  void add_power(int k);  // += w^k
  Complex to_complex() const;
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;
};

/// 2^{-(n + h/2)}.
double path_normalization(const PathPolynomials& p);

/// Sum over every path of its phase, accumulated exactly, times the
/// normalization.  Throws BudgetExceeded above kEnumerationBudget bits.
Complex exact_trace_enumeration(const PathPolynomials& p);

/// Path counts per class: counts[j][s] = #{x : chi(x) = j, sign(x) = s}.
/// In kToffoli mode only j = 0 is populated.
using PhaseCounts = std::array<std::array<std::uint64_t, 2>, 8>;
PhaseCounts count_paths(const PathPolynomials& p);

/// 2^{-(n + h/2)} sum_j w^j (#{chi = j, sign = 0} - #{chi = j, sign = 1}).
Complex trace_by_counting(const PathPolynomials& p);

struct SampledTrace {
  Complex estimate;  // of the normalized trace tr U / 2^n
  double standard_error = 0.0;
  int samples = 0;
};

/// Mean of 2^{h/2} w^{k(x)} over uniformly drawn paths x.  samples >= 2.
SampledTrace sampled_trace(const PathPolynomials& p, int samples, std::uint64_t seed);

/// tr of the dense circuit unitary; at most kMaxDenseCircuitQubits qubits.
Complex dense_trace(const GateCircuit& c);

}  // namespace dqc1::pathsum
