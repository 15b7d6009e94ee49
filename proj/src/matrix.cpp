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

#include "dqc1/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace dqc1 {

namespace {

Spectrum sorted_descending(std::vector<double> values) {
  std::stable_sort(values.begin(), values.end(), std::greater<double>());
  return Spectrum{std::move(values)};
}

}  // namespace

int qubit_count(Eigen::Index dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of 2");
  }
  int q = 0;
  while ((Eigen::Index{1} << q) < dim) ++q;
  return q;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix residual =
      m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
  return max_abs(residual) <= tol;
}

Bipartition::Bipartition(int total_qubits, std::set<int> transposed_part)
    : total_qubits_(total_qubits), part_(std::move(transposed_part)) {
  if (total_qubits_ < 2 || total_qubits_ > kMaxQubits) {
    throw std::invalid_argument("bipartition needs 2.." +
                                std::to_string(kMaxQubits) + " qubits, got " +
                                std::to_string(total_qubits_));
  }
  if (part_.empty() || static_cast<int>(part_.size()) >= total_qubits_) {
    throw std::invalid_argument(
        "transposed part must be a proper nonempty subset");
  }
  if (*part_.begin() < 0 || *part_.rbegin() >= total_qubits_) {
    throw std::invalid_argument("qubit index out of range in bipartition");
  }
}

Bipartition Bipartition::trailing(int total_qubits, int k) {
  std::set<int> part;
  for (int q = total_qubits - k; q < total_qubits; ++q) part.insert(q);
  return Bipartition(total_qubits, std::move(part));
}

Bipartition Bipartition::complement() const {
  std::set<int> rest;
  for (int q = 0; q < total_qubits_; ++q) {
    if (!transposes(q)) rest.insert(q);
  }
  return Bipartition(total_qubits_, std::move(rest));
}

std::uint64_t Bipartition::index_mask() const {
  std::uint64_t mask = 0;
  for (int q : part_) mask |= std::uint64_t{1} << (total_qubits_ - 1 - q);
  return mask;
}

double Spectrum::sum_abs() const {
  double s = 0.0;
  for (double v : values) s += std::abs(v);
  return s;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                const Bipartition& part) {
  const Eigen::Index dim = Eigen::Index{1} << part.total_qubits();
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument(
        "partial_transpose: matrix dimension " + std::to_string(m.rows()) +
        "x" + std::to_string(m.cols()) + " does not match " +
        std::to_string(part.total_qubits()) + " qubits");
  }
  return partial_transpose_bits(m, part.index_mask());
}

ComplexMatrix partial_transpose_bits(const ComplexMatrix& m,
                                     std::uint64_t index_mask) {
  const auto mask = static_cast<Eigen::Index>(index_mask);
  const Eigen::Index dim = m.rows();
  ComplexMatrix out(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      out((r & ~mask) | (c & mask), (c & ~mask) | (r & mask)) = m(r, c);
    }
  }
  return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!is_hermitian(m)) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: solver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return sorted_descending(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

Spectrum singular_values(const ComplexMatrix& m) {
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  return sorted_descending(std::vector<double>(sv.data(), sv.data() + sv.size()));
}

void apply_one_qubit_left(ComplexMatrix& m, const Eigen::Matrix2cd& gate,
                          int qubit, int n_qubits) {
  const Eigen::Index stride = Eigen::Index{1} << (n_qubits - 1 - qubit);
  const Eigen::Index dim = m.rows();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r0 = 0; r0 < dim; ++r0) {
      if (r0 & stride) continue;
      const Eigen::Index r1 = r0 | stride;
      const Complex a = m(r0, c);
      const Complex b = m(r1, c);
      m(r0, c) = gate(0, 0) * a + gate(0, 1) * b;
      m(r1, c) = gate(1, 0) * a + gate(1, 1) * b;
    }
  }
}

}  // namespace dqc1
