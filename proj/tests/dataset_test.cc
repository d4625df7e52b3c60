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

#include "cumdev/dataset.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

namespace cumdev {
namespace {

Dataset small(std::vector<double> results = {0, 1, 0, 1}) {
  return Dataset({1, 2, 3, 4}, std::move(results), {}, {1, 3});
}

TEST(Dataset, AcceptsValidInput) {
  const Dataset d = small();
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(d.subpop_size(), 2u);
  EXPECT_FALSE(d.weighted());
  EXPECT_TRUE(d.binary());
  EXPECT_EQ(d.weight(2), 1.0);
}

TEST(Dataset, DetectsRealValuedResults) {
  EXPECT_FALSE(small({0, 0.5, 0, 1}).binary());
}

TEST(Dataset, RejectsMalformedInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Dataset({}, {}, {}, {}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0}, {}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({1, 1}, {0, 1}, {}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({2, 1}, {0, 1}, {}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({1, nan}, {0, 1}, {}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, nan}, {}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, 1}, {1, 0}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, 1}, {1, -1}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, 1}, {1}, {0}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, 1}, {}, {}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, 1}, {}, {2}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, 1}, {}, {1, 0}), InvalidInput);
  EXPECT_THROW(Dataset({1, 2}, {0, 1}, {}, {1, 1}), InvalidInput);
}

TEST(Dataset, WithoutWeightsAndWithResults) {
  const Dataset d({1, 2, 3}, {0, 1, 0}, {2, 3, 4}, {1});
  EXPECT_TRUE(d.weighted());
  EXPECT_FALSE(d.without_weights().weighted());
  const Dataset e = d.with_results({0.25, 0.5, 0.75});
  EXPECT_FALSE(e.binary());
  EXPECT_EQ(e.results()[1], 0.5);
  EXPECT_EQ(e.weight(2), 4.0);
  EXPECT_THROW(d.with_results({0.0}), InvalidInput);
}

}  // namespace
}  // namespace cumdev
