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

#include "dqc1/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dqc1/random.hpp"

namespace dqc1 {

Dqc1State build_state(const ComplexMatrix& u, double alpha) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("build_state: unitary must be square");
  }
  const int n = qubit_count(u.rows());
  if (n + 1 > kMaxQubits) {
    throw std::invalid_argument("build_state: " + std::to_string(n + 1) +
                                " qubits exceeds the cap of " +
                                std::to_string(kMaxQubits));
  }
  if (!std::isfinite(alpha) || std::abs(alpha) > 1.0) {
    throw std::invalid_argument("build_state: polarization must lie in [-1, 1]");
  }
  if (!is_unitary(u)) {
    throw std::invalid_argument("build_state: matrix is not unitary");
  }
  const Eigen::Index dim = u.rows();
  const double scale = 1.0 / (2.0 * static_cast<double>(dim));
  ComplexMatrix rho = ComplexMatrix::Zero(2 * dim, 2 * dim);
  rho.diagonal().setConstant(Complex(scale, 0.0));
  rho.topRightCorner(dim, dim) = (alpha * scale) * u.adjoint();
  rho.bottomLeftCorner(dim, dim) = (alpha * scale) * u;
  return Dqc1State(n, alpha, u, std::move(rho));
}

Complex normalized_trace(const ComplexMatrix& u) {
  return u.trace() / static_cast<double>(u.rows());
}

PauliExpectations pauli_expectations(const Dqc1State& s) {
  // X (x) I = [[0, I], [I, 0]],  Y (x) I = [[0, -iI], [iI, 0]].
  const ComplexMatrix& rho = s.rho();
  const Eigen::Index dim = rho.rows() / 2;
  Complex upper = 0.0, lower = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    upper += rho(i, dim + i);
    lower += rho(dim + i, i);
  }
  const Complex i_unit(0.0, 1.0);
  return {(upper + lower).real(), (i_unit * upper - i_unit * lower).real()};
}

PauliExpectations pauli_expectations_from_trace(const ComplexMatrix& u,
                                                double alpha) {
  const Complex t = normalized_trace(u);
  return {alpha * t.real(), alpha * t.imag()};
}

std::int64_t required_runs(double alpha, double epsilon, double p_error) {
  if (alpha == 0.0 || std::abs(alpha) > 1.0) {
    throw std::invalid_argument(
        "estimate_trace: polarization must satisfy 0 < |alpha| <= 1");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("estimate_trace: epsilon must lie in (0, 1)");
  }
  if (!(p_error > 0.0 && p_error < 1.0)) {
    throw std::invalid_argument("estimate_trace: p_error must lie in (0, 1)");
  }
  const double runs =
      2.0 * std::log(4.0 / p_error) / (alpha * alpha * epsilon * epsilon);
  return static_cast<std::int64_t>(std::ceil(runs));
}

TraceEstimate estimate_trace(const ComplexMatrix& u, double alpha,
                             double epsilon, double p_error,
                             std::uint64_t seed) {
  const std::int64_t runs = required_runs(alpha, epsilon, p_error);
  const PauliExpectations expect = pauli_expectations_from_trace(u, alpha);
  if (!is_unitary(u)) {
    throw std::invalid_argument("estimate_trace: matrix is not unitary");
  }

  auto sample_mean = [&](std::uint64_t stream, double expectation) {
    const double p_plus = 0.5 * (1.0 + expectation);
    const std::uint64_t key = stream_seed(seed, stream);
    std::int64_t plus = 0;
    for (std::int64_t r = 0; r < runs; ++r) {
      if (counter_uniform(key, static_cast<std::uint64_t>(r)) < p_plus) ++plus;
    }
    return static_cast<double>(2 * plus - runs) / static_cast<double>(runs);
  };

  const double mean_x = sample_mean(0, expect.x);
  const double mean_y = sample_mean(1, expect.y);
  return {Complex(mean_x, mean_y) / alpha, runs, epsilon, p_error, seed};
}

std::vector<SeparableTerm> separable_decomposition(const Dqc1State& s) {
  // U = Q T Q^dag with T diagonal for a normal matrix, Q unitary even when
  // eigenvalues are degenerate.
  Eigen::ComplexSchur<ComplexMatrix> schur(s.unitary());
  const ComplexMatrix& q = schur.matrixU();
  const ComplexMatrix& t = schur.matrixT();

  const double theta = 0.5 * std::asin(s.alpha());
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  const double weight = 1.0 / (2.0 * static_cast<double>(q.rows()));

  std::vector<SeparableTerm> terms;
  terms.reserve(2 * q.rows());
  for (Eigen::Index j = 0; j < q.rows(); ++j) {
    const Complex phase = t(j, j) / std::abs(t(j, j));
    Eigen::Vector2cd a(c, phase * sn);
    Eigen::Vector2cd b(sn, phase * c);
    terms.push_back({weight, a, q.col(j)});
    terms.push_back({weight, b, q.col(j)});
  }
  return terms;
}

ComplexMatrix mixture(const std::vector<SeparableTerm>& terms) {
  if (terms.empty()) return ComplexMatrix();
  const Eigen::Index rest_dim = terms.front().rest.size();
  ComplexMatrix out = ComplexMatrix::Zero(2 * rest_dim, 2 * rest_dim);
  for (const auto& term : terms) {
    const ComplexMatrix special = term.special * term.special.adjoint();
    const ComplexMatrix rest = term.rest * term.rest.adjoint();
    out += term.weight * tensor_product(special, rest);
  }
  return out;
}

SeparableBallAlpha separable_ball_alpha(int n) {
  if (n < 1) throw std::invalid_argument("separable_ball_alpha: n must be >= 1");
  const double exponent = -0.5 * static_cast<double>(n + 1);
  return {2.0 * std::pow(3.0, exponent), 2.0 * std::pow(2.0, exponent)};
}

double distance_from_maximally_mixed(const ComplexMatrix& rho) {
  const ComplexMatrix diff =
      rho - ComplexMatrix::Identity(rho.rows(), rho.cols()) /
                static_cast<double>(rho.rows());
  return std::sqrt((diff * diff).trace().real());
}

}  // namespace dqc1
