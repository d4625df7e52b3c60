//
// Copyright 2026 The cumdev Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef CUMDEV_RANDOM_H_
#define CUMDEV_RANDOM_H_

#include <cstdint>
#include <random>

namespace cumdev {

// Stream identifiers. Each consumer of randomness draws from its own stream
// so that, for example, changing the subpopulation selection of a generator
// never shifts the outcome draws.
enum class Stream : std::uint64_t {
  kTieBreak = 1,
  kBinPermutation = 2,
  kBootstrap = 3,
  kOutcomes = 4,
  kSubset = 5,
};

// SplitMix64 finalizer. Used only to turn (seed, stream) pairs into
// well-separated 64-bit seeds.
std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Portable random source: std::mt19937_64 (whose output sequence the C++
// standard pins exactly) seeded with derive_seed(seed, stream). All derived
// quantities are computed here rather than through <random> distributions,
// whose algorithms differ between standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, Stream stream);
  Rng(std::uint64_t seed, Stream stream, std::uint64_t substream);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform on {0, ..., bound - 1}; bound must be positive. Unbiased
  // (rejection of the 2^64 mod bound lowest draws).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cumdev

#endif  // CUMDEV_RANDOM_H_
