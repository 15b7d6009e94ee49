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

#include "dqc1/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "dqc1/io.hpp"
#include "dqc1/negativity.hpp"
#include "dqc1/state.hpp"

namespace dqc1 {

namespace {

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

Eigen::Matrix2cd su2(double theta, double phi, double chi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2cd r;
  r << std::polar(c, phi), std::polar(s, chi),
      -std::polar(s, -chi), std::polar(c, -phi);
  return r;
}

Eigen::Matrix2cd random_su2(Rng& rng) {
  const double theta = uniform(rng, 0.0, std::numbers::pi / 2.0);
  const double phi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  const double chi = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return su2(theta, phi, chi);
}

Eigen::VectorXcd mixing_phases(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("mixing_operator: bad qubit count");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    int total = 0;
    for (int q = 0; q + 1 < n; ++q) {
      const int bit_a = static_cast<int>((b >> (n - 1 - q)) & 1);
      const int bit_b = static_cast<int>((b >> (n - 2 - q)) & 1);
      total += (bit_a ^ bit_b) ? -1 : 1;
    }
    phases(b) = std::polar(1.0, std::numbers::pi / 4.0 * total);
  }
  return phases;
}

ComplexMatrix mixing_operator(int n) {
  return mixing_phases(n).asDiagonal();
}

ComplexMatrix pseudo_random_unitary(const RandomCircuitParams& p) {
  if (p.n < 1 || p.n > kMaxQubits - 1) {
    throw std::invalid_argument("pseudo_random_unitary: bad qubit count");
  }
  if (p.j < 1) throw std::invalid_argument("pseudo_random_unitary: j must be >= 1");
  Rng rng(p.seed);
  const Eigen::Index dim = Eigen::Index{1} << p.n;
  const Eigen::VectorXcd mix = mixing_phases(p.n);
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (int layer = 0; layer < p.j; ++layer) {
    if (layer > 0) u = mix.asDiagonal() * u;
    for (int q = 0; q < p.n; ++q) {
      apply_one_qubit_left(u, random_su2(rng), q, p.n);
    }
  }
  return u;
}

int half_split_k(int n) { return (n + 1) / 2; }

std::vector<int> split_sizes(int n_plus_1, const SplitSelection& sel) {
  const int n = n_plus_1 - 1;
  std::vector<int> ks;
  switch (sel.rule) {
    case SplitSelection::Rule::kHalf: ks = {half_split_k(n)}; break;
    case SplitSelection::Rule::kOne: ks = {1}; break;
    case SplitSelection::Rule::kAll:
      for (int k = 1; k <= n; ++k) ks.push_back(k);
      break;
    case SplitSelection::Rule::kExplicit: ks = sel.ks; break;
  }
  for (int k : ks) {
    if (k < 1 || k > n) {
      throw std::invalid_argument("split k = " + std::to_string(k) +
                                  " invalid for " + std::to_string(n_plus_1) +
                                  " qubits");
    }
  }
  return ks;
}

int default_samples(int n_plus_1) { return n_plus_1 <= 8 ? 100 : 30; }

std::vector<SweepStats> negativity_sweep(const SweepRequest& req) {
  std::vector<SweepStats> out;
  for (int n_plus_1 : req.n_plus_1_values) {
    if (n_plus_1 < 2 || n_plus_1 > kMaxQubits) {
      throw std::invalid_argument("sweep: register size " +
                                  std::to_string(n_plus_1) + " out of range");
    }
    const int n = n_plus_1 - 1;
    const int samples = req.samples > 0 ? req.samples : default_samples(n_plus_1);
    if (samples < 2) throw std::invalid_argument("sweep: need at least 2 samples");
    const std::vector<int> ks = split_sizes(n_plus_1, req.splits);
    std::vector<Bipartition> parts;
    for (int k : ks) parts.push_back(Bipartition::trailing(n_plus_1, k));

    // values[s * ks.size() + i] = M of sample s under split ks[i].
    std::vector<double> values(static_cast<std::size_t>(samples) * ks.size());
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int s = next++; s < samples; s = next++) {
        const std::uint64_t sample_seed = stream_seed(
            req.seed, (static_cast<std::uint64_t>(n_plus_1) << 32) |
                          static_cast<std::uint64_t>(s));
        const Dqc1State state =
            build_state(pseudo_random_unitary({n, req.j, sample_seed}), 1.0);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          values[static_cast<std::size_t>(s) * ks.size() + i] =
              negativity_eigen(state.rho(), parts[i]).m_value;
        }
      }
    };
    const int threads = std::clamp(req.threads, 1, samples);
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < ks.size(); ++i) {
      CompensatedSum sum;
      for (int s = 0; s < samples; ++s) sum.add(values[s * ks.size() + i]);
      const double mean = sum.value() / samples;
      CompensatedSum sq;
      for (int s = 0; s < samples; ++s) {
        const double d = values[s * ks.size() + i] - mean;
        sq.add(d * d);
      }
      const double sd = std::sqrt(sq.value() / (samples - 1));
      out.push_back({n_plus_1, ks[i], parts[i], samples, mean, sd, req.seed});
    }
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepStats>& stats) {
  out << "n_plus_1,k,samples,mean_m,std_m,seed\n";
  for (const auto& s : stats) {
    out << s.n_plus_1 << ',' << s.k << ',' << s.samples << ','
        << format_double(s.mean_m) << ',' << format_double(s.std_m) << ','
        << s.seed << '\n';
  }
}

}  // namespace dqc1
