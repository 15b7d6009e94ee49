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
#include <iosfwd>
#include <vector>

#include "dqc1/matrix.hpp"
#include "dqc1/random.hpp"

// Pseudo-random unitaries built from alternating layers of independent
// single-qubit SU(2) rotations and a fixed nearest-neighbour ZZ mixing
// operator, and negativity statistics of the resulting one-clean-qubit
// states.

namespace dqc1 {

/// [[e^{i phi} cos t, e^{i chi} sin t], [-e^{-i chi} sin t, e^{-i phi} cos t]]
Eigen::Matrix2cd su2(double theta, double phi, double chi);

/// Draws theta ~ U[0, pi/2], phi ~ U[0, 2 pi), chi ~ U[0, 2 pi), in that
/// order.  Note theta is uniform, not Haar distributed.
Eigen::Matrix2cd random_su2(Rng& rng);

/// Diagonal of exp(i pi/4 sum_j Z_j Z_{j+1}): basis state b gets the phase
/// exp(i pi/4 sum_j (-1)^{b_j xor b_{j+1}}).
Eigen::VectorXcd mixing_phases(int n);
ComplexMatrix mixing_operator(int n);

struct RandomCircuitParams {
  int n = 1;
  int j = 40;  // number of random single-qubit layers
  std::uint64_t seed = 0;
};

/// R_j M R_{j-1} ... M R_1.  The generator is std::mt19937_64 seeded with
/// p.seed; layers are drawn first to last, qubits 0..n-1 within a layer.
ComplexMatrix pseudo_random_unitary(const RandomCircuitParams& p);

/// Which (n+1-k, k) splits a sweep evaluates.
struct SplitSelection {
  enum class Rule {
    kHalf,      // k = ceil(n/2), i.e. (floor(n/2)+1, ceil(n/2))
    kOne,       // k = 1
    kAll,       // k = 1..n
    kExplicit,  // ks as given
  };
  Rule rule = Rule::kHalf;
  std::vector<int> ks;
};

int half_split_k(int n);
std::vector<int> split_sizes(int n_plus_1, const SplitSelection& sel);

/// Samples per register size when a sweep does not specify one:
/// 100 up to 8 qubits, 30 beyond.
int default_samples(int n_plus_1);

struct SweepRequest {
  std::vector<int> n_plus_1_values;
  SplitSelection splits;
  int samples = 0;  // 0 = default_samples(n+1)
  std::uint64_t seed = 0;
  int j = 40;
  int threads = 1;
};

struct SweepStats {
  int n_plus_1;
  int k;
  Bipartition partition;
  int samples;
  double mean_m;
  double std_m;  // sample standard deviation (divisor samples - 1)
  std::uint64_t seed;
};

/// Sample s at register size n+1 uses the unitary with seed
/// stream_seed(seed, (n+1) << 32 | s); all splits at one size share the same
/// samples.  Output order follows the request regardless of threads.
std::vector<SweepStats> negativity_sweep(const SweepRequest& req);

/// Header n_plus_1,k,samples,mean_m,std_m,seed, one row per stats entry.
void write_sweep_csv(std::ostream& out, const std::vector<SweepStats>& stats);

}  // namespace dqc1
