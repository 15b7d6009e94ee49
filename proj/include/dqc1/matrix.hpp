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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Dense>

// Dense complex linear algebra over qubit registers.
//
// Index convention: in a matrix acting on q qubits, qubit 0 is the most
// significant bit of the row/column index and qubit q-1 the least.  Every
// module of the library uses this convention.

namespace dqc1 {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Hard cap on register size for dense qubit-indexed matrices.
inline constexpr int kMaxQubits = 14;

inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-12;

/// Number of qubits q with dim == 2^q; throws std::invalid_argument otherwise.
int qubit_count(Eigen::Index dim);

double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTolerance);

/// A split of a qubit register into two parts.  The part that gets
/// transposed is stored explicitly; the other part is its complement.
class Bipartition {
 public:
  /// Throws std::invalid_argument unless transposed_part is a proper,
  /// nonempty subset of {0, ..., total_qubits - 1}.
  Bipartition(int total_qubits, std::set<int> transposed_part);

  /// The (total - k, k) split: the last k qubits form the transposed part.
  static Bipartition trailing(int total_qubits, int k);

  int total_qubits() const { return total_qubits_; }
  const std::set<int>& transposed_part() const { return part_; }
  bool transposes(int qubit) const { return part_.count(qubit) != 0; }
  int transposed_count() const { return static_cast<int>(part_.size()); }

  Bipartition complement() const;

  /// Bits of the matrix index that belong to the transposed part.
  std::uint64_t index_mask() const;

  bool operator==(const Bipartition&) const = default;

 private:
  int total_qubits_;
  std::set<int> part_;
};

/// Real spectrum, sorted descending; multiplicity by repetition.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double sum_abs() const;
};

/// Kronecker product; a's indices are the more significant ones.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transposes the matrix indices of the qubits in part.transposed_part().
/// Throws std::invalid_argument when m is not 2^total_qubits square.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const Bipartition& part);

/// Partial transpose over the index bits set in `index_mask`.
ComplexMatrix partial_transpose_bits(const ComplexMatrix& m,
                                     std::uint64_t index_mask);

/// Eigenvalues of a Hermitian matrix (rejects non-Hermitian input).
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

Spectrum singular_values(const ComplexMatrix& m);

/// In-place m <- G m, with the 2x2 gate G acting on `qubit` of an
/// n_qubits register.
void apply_one_qubit_left(ComplexMatrix& m, const Eigen::Matrix2cd& gate,
                          int qubit, int n_qubits);

}  // namespace dqc1
