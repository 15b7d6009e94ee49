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

#include "dqc1/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dqc1 {

std::string_view to_string(NegativityMethod method) {
  return method == NegativityMethod::kEigen ? "eigen" : "singular";
}

void check_density_matrix(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  if (!is_hermitian(rho)) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-12) {
    throw std::invalid_argument("density matrix does not have unit trace");
  }
}

NegativityResult negativity_eigen(const ComplexMatrix& rho,
                                  const Bipartition& part) {
  check_density_matrix(rho);
  const Spectrum spectrum = hermitian_eigenvalues(partial_transpose(rho, part));
  double m = 0.0;
  double negative = 0.0;
  for (double v : spectrum.values) {
    if (v <= -kNegativeCutoff) {
      negative -= v;
      m -= v;
    } else if (v > 0.0) {
      m += v;
    }
  }
  return {m, negative, part, NegativityMethod::kEigen};
}

ComplexMatrix unitary_partial_transpose(const ComplexMatrix& u,
                                        const Bipartition& part) {
  if (part.transposes(0)) {
    throw std::invalid_argument(
        "unitary_partial_transpose: transposed part contains qubit 0");
  }
  const int n = part.total_qubits() - 1;
  if (u.rows() != (Eigen::Index{1} << n) || u.cols() != u.rows()) {
    throw std::invalid_argument(
        "unitary_partial_transpose: unitary does not act on " +
        std::to_string(n) + " qubits");
  }
  // Register qubit q is qubit q - 1 of the operator.
  std::uint64_t mask = 0;
  for (int q : part.transposed_part()) mask |= std::uint64_t{1} << (n - q);
  return partial_transpose_bits(u, mask);
}

NegativityResult negativity_singular(const Dqc1State& s,
                                     const Bipartition& part) {
  if (part.total_qubits() != s.total_qubits()) {
    throw std::invalid_argument(
        "negativity_singular: partition does not match the register");
  }
  const bool flip = part.transposes(0);
  const Bipartition effective = flip ? part.complement() : part;
  const Spectrum sv =
      singular_values(unitary_partial_transpose(s.unitary(), effective));

  const double a = std::abs(s.alpha());
  double m = 0.0;
  for (double v : sv.values) m += std::max(a * v, 1.0);
  m /= static_cast<double>(sv.size());
  // Each s_j contributes eigenvalues (1 +- a s_j)/2N; only 1 - a s_j can be
  // negative.
  double negative = 0.0;
  const double two_n = 2.0 * static_cast<double>(sv.size());
  for (double v : sv.values) {
    const double lambda = (1.0 - a * v) / two_n;
    if (lambda <= -kNegativeCutoff) negative -= lambda;
  }
  return {m, negative, part, NegativityMethod::kSingular, flip};
}

double pure_state_negativity(std::span<const double> schmidt) {
  double total = 0.0;
  double root_sum = 0.0;
  for (double mu : schmidt) {
    if (!(mu >= 0.0)) {
      throw std::invalid_argument("Schmidt coefficients must be nonnegative");
    }
    total += mu;
    root_sum += std::sqrt(mu);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("Schmidt coefficients must sum to 1");
  }
  return root_sum * root_sum;
}

}  // namespace dqc1
