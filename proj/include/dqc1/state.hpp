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

#include <cstdint>
#include <vector>

#include "dqc1/matrix.hpp"

namespace dqc1 {

/// Output of the one-clean-qubit circuit: the special qubit (qubit 0)
/// starts in (I + alpha Z)/2, the n other qubits maximally mixed, then a
/// Hadamard on qubit 0 and a controlled-U on the rest give
///
///   rho = 1/(2N) [[ I, alpha U^dag ], [ alpha U, I ]],   N = 2^n.
///
/// Immutable once built.
class Dqc1State {
 public:
  int n() const { return n_; }
  int total_qubits() const { return n_ + 1; }
  double alpha() const { return alpha_; }
  const ComplexMatrix& unitary() const { return unitary_; }
  const ComplexMatrix& rho() const { return rho_; }

 private:
  friend Dqc1State build_state(const ComplexMatrix& u, double alpha);
  Dqc1State(int n, double alpha, ComplexMatrix u, ComplexMatrix rho)
      : n_(n), alpha_(alpha), unitary_(std::move(u)), rho_(std::move(rho)) {}

  int n_;
  double alpha_;
  ComplexMatrix unitary_;
  ComplexMatrix rho_;
};

/// Throws std::invalid_argument for a non-unitary u, |alpha| > 1, or a
/// register larger than kMaxQubits.
Dqc1State build_state(const ComplexMatrix& u, double alpha);

/// tr(U) / 2^n.
Complex normalized_trace(const ComplexMatrix& u);

struct PauliExpectations {
  double x;
  double y;
};

/// <X> and <Y> of the special qubit, evaluated as operator expectations
/// tr(rho (P (x) I)) on the full state.  With the standard Pauli Y these are
/// <X> = alpha Re tr(U)/N and <Y> = alpha Im tr(U)/N.
PauliExpectations pauli_expectations(const Dqc1State& s);

/// The same pair computed from tr(U) alone.
PauliExpectations pauli_expectations_from_trace(const ComplexMatrix& u,
                                                double alpha);

struct TraceEstimate {
  Complex estimate;  // normalized trace
  std::int64_t runs_used;
  double epsilon;
  double p_error;
  std::uint64_t seed;
};

/// Runs per observable, L = ceil(2 ln(4/P_e) / (alpha^2 eps^2)).
std::int64_t required_runs(double alpha, double epsilon, double p_error);

/// Simulates L single-shot X measurements and L Y measurements of the
/// special qubit and returns (mean_X + i mean_Y) / alpha.
///
/// Run r of observable b (0 = X, 1 = Y) reports +1 iff
/// counter_uniform(stream_seed(seed, b), r) < (1 + <P>)/2.
TraceEstimate estimate_trace(const ComplexMatrix& u, double alpha,
                             double epsilon, double p_error, std::uint64_t seed);

/// One product term weight * |special><special| (x) |rest><rest|.
struct SeparableTerm {
  double weight;
  Eigen::Vector2cd special;
  Eigen::VectorXcd rest;
};

/// Explicit separable decomposition across the special qubit / rest cut,
/// built from an orthonormal eigenbasis of U (complex Schur form).
std::vector<SeparableTerm> separable_decomposition(const Dqc1State& s);

/// Sum of the terms as a density matrix.
ComplexMatrix mixture(const std::vector<SeparableTerm>& terms);

struct SeparableBallAlpha {
  /// alpha below which rho lies in the proven separable ball, 2 * 3^{-(n+1)/2}.
  double proven_separable;
  /// alpha above which rho leaves the ball bounded by the known entangled
  /// family, 2 * 2^{-(n+1)/2}.
  double entangled_family_limit;
};

SeparableBallAlpha separable_ball_alpha(int n);

/// Hilbert-Schmidt distance sqrt(tr (rho - I/d)^2).
double distance_from_maximally_mixed(const ComplexMatrix& rho);

}  // namespace dqc1
