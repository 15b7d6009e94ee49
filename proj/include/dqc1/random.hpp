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
#include <random>

// Seeded randomness.  Everything that consumes randomness derives an
// independent stream from (seed, index) with the SplitMix64 finalizer, so
// results do not depend on execution order or thread count:
//
//   stream_seed(seed, i) = splitmix64(splitmix64(seed) ^ (i * golden))
//
// Sequential streams are std::mt19937_64 seeded with a stream seed.  Uniform
// doubles use the top 53 bits of each draw, so the full sequence is fixed by
// the standard and reproducible bit for bit.

namespace dqc1 {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * kGolden));
}

/// Maps 64 random bits to [0, 1).
constexpr double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_double(rng());
}

/// Counter-based uniform in [0, 1): draw number `counter` of the SplitMix64
/// sequence seeded with `key`.  Stateless, so draws may run in any order.
constexpr double counter_uniform(std::uint64_t key, std::uint64_t counter) {
  return unit_double(splitmix64(key + counter * kGolden));
}

}  // namespace dqc1
