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

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

// Upper bounds on the negativity of a one-clean-qubit state that hold for
// every unitary and every bipartition.  The partial transpose of the state
// has 2N eigenvalues whose first three power sums are fixed:
//
//   sum_k lambda_k^s = [(1 + alpha)^s + (1 - alpha)^s] / (2^s N^{s-1})
//
// and the bounds maximize sum_k |lambda_k| under s = 1,2 or s = 1,2,3.
//
// N is the dimension of the unpolarized register.  Any N >= 2 is accepted;
// only powers of 2 correspond to qubit registers.

namespace dqc1::bounds {

/// Throws std::invalid_argument unless s is 1, 2 or 3.
double trace_power(long N, double alpha, int s);

/// Eigenvalues with multiplicities.
struct SpectrumSolution {
  std::vector<double> distinct_values;
  std::vector<long> degeneracies;
  long total = 0;  // sum of degeneracies, 2N
  double m_value = 0.0;
};

enum class BoundKind { kS12Continuous, kS12Integer, kS123Numeric, kS123Asymptotic };

std::string_view to_string(BoundKind kind);

struct BoundResult {
  long N = 0;
  double alpha = 0.0;
  double bound = 0.0;
  BoundKind kind = BoundKind::kS12Continuous;
  // s = 1,2: the number of negative eigenvalues.  Real valued for the
  // continuous bound.
  double t = 0.0;
  bool degenerate = false;  // alpha = 0, the state is maximally mixed
  std::optional<SpectrumSolution> witness;
};

/// M(t) = (N - t + alpha sqrt(t (2N - t))) / N, the s = 1,2 value for t
/// negative eigenvalues.
double s12_value(long N, double alpha, double t);

/// t* = N (1 - 1/sqrt(1 + alpha^2)).
double s12_optimal_t(long N, double alpha);

/// The two-valued spectrum {lambda_-: t, lambda_+: 2N - t} for real t.
SpectrumSolution s12_spectrum(long N, double alpha, double t);

struct S12Bounds {
  BoundResult continuous;
  BoundResult integer;
};

/// Requires N >= 2 and 0 <= alpha <= 1.  The integer bound maximizes over
/// t in {floor t*, ceil t*} within [1, 2N-1]; on a tie the smaller t wins.
S12Bounds bound_s12(long N, double alpha);

/// Largest residual of the three power-sum constraints at alpha = 1.
double s123_residual(long N, const SpectrumSolution& s);

/// Every real solution (A, B, C) of
///   uA + vB + wC = 1,  uA^2 + vB^2 + wC^2 = 1/N,  uA^3 + vB^3 + wC^3 = 1/N^2
/// with residual <= 1e-10, as spectra.  Zero degeneracies are allowed.
std::vector<SpectrumSolution> solve_s123(long N, long u, long v, long w);

/// Canonical labels of a three-valued solution: u for the smallest value,
/// v for the largest, w for the middle one.
struct Degeneracies {
  long u = 0;
  long v = 0;
  long w = 0;
  double a = 0.0;  // value with degeneracy u
  double b = 0.0;  // v
  double c = 0.0;  // w
};
Degeneracies canonical_degeneracies(const SpectrumSolution& s);

/// The maximizing pattern u = round(N (1 - 1/sqrt 2)), v = 1, w = 2N - 1 - u.
Degeneracies expected_maximizer(long N);

/// s = 1,2,3 bound at alpha = 1.  For 2N <= kExhaustiveLimit every triple
/// (u, v, w) with u + v + w = 2N is solved; beyond that only triples within
/// 3 of expected_maximizer(N) in u and v.  Ties keep the lexicographically
/// smallest canonical (u, v, w).  Throws std::runtime_error if no triple has
/// a real solution.
inline constexpr long kExhaustiveLimit = 78;
BoundResult bound_s123(long N);

/// sqrt 2 - 2^{-7/6} N^{-1/3}.
double bound_s123_asymptotic(long N);

/// Header two_N,kind,bound,u,v,w,A,B,C.  s = 1,2 rows put t and 2N - t in
/// u and w with lambda_- in A and lambda_+ in C; asymptote rows leave the
/// spectrum columns empty.
void write_bounds_csv_header(std::ostream& out);
void write_bounds_csv_row(std::ostream& out, const BoundResult& r);

}  // namespace dqc1::bounds
