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

#include <span>
#include <string_view>

#include "dqc1/matrix.hpp"
#include "dqc1/state.hpp"

namespace dqc1 {

enum class NegativityMethod { kEigen, kSingular };

std::string_view to_string(NegativityMethod method);

/// Eigenvalues of the partial transpose in (-kNegativeCutoff, 0) count as 0.
inline constexpr double kNegativeCutoff = 1e-12;

struct NegativityResult {
  double m_value;  // multiplicative negativity tr|rho^PT|
  double n_value;  // magnitude of the negative part of the PT spectrum
  Bipartition partition;
  NegativityMethod method;
  /// Singular route only: the requested part contained qubit 0, so the
  /// complement (same PT spectrum) was transposed instead.
  bool used_complement = false;

  /// M == 1.  A PPT state may still carry bound entanglement.
  bool is_ppt(double tol = 1e-10) const { return m_value <= 1.0 + tol; }
};

/// Throws std::invalid_argument unless rho is Hermitian with unit trace.
void check_density_matrix(const ComplexMatrix& rho);

/// M from the full eigenvalue spectrum of the partial transpose.
NegativityResult negativity_eigen(const ComplexMatrix& rho,
                                  const Bipartition& part);

/// M = (1/N) sum_j max(|alpha| s_j, 1), with s_j the singular values of the
/// partial transpose of U over the unpolarized qubits of the transposed part.
NegativityResult negativity_singular(const Dqc1State& s,
                                     const Bipartition& part);

/// Partial transpose of U (an n-qubit operator) for a bipartition of the
/// (n+1)-qubit register whose transposed part excludes qubit 0.
ComplexMatrix unitary_partial_transpose(const ComplexMatrix& u,
                                        const Bipartition& part);

/// (sum_j sqrt(mu_j))^2 for Schmidt coefficients mu_j.
/// Throws std::invalid_argument for negative or non-normalized input.
double pure_state_negativity(std::span<const double> schmidt);

}  // namespace dqc1
