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

#include "cumdev/random.h"

#include <gtest/gtest.h>

#include <vector>

namespace cumdev {
namespace {

TEST(SplitMix64, MatchesReferenceOutput) {
  // First output of the reference generator started from state 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Rng, SameSeedAndStreamRepeat) {
  Rng a(42, Stream::kOutcomes);
  Rng b(42, Stream::kOutcomes);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, StreamsAndSubstreamsDiffer) {
  Rng a(42, Stream::kOutcomes);
  Rng b(42, Stream::kBootstrap);
  Rng c(42, Stream::kBootstrap, 1);
  Rng d(42, Stream::kBootstrap, 2);
  const auto x = a.next_u64();
  const auto y = b.next_u64();
  const auto z = c.next_u64();
  const auto w = d.next_u64();
  EXPECT_NE(x, y);
  EXPECT_NE(y, z);
  EXPECT_NE(z, w);
}

TEST(Rng, UniformStaysInUnitInterval) {
  Rng rng(7, Stream::kSubset);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(Rng, BelowCoversRangeEvenly) {
  Rng rng(3, Stream::kSubset);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_EQ(rng.below(1), 0u);
}

}  // namespace
}  // namespace cumdev
