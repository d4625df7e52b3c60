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

#include "cumdev/calibration.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracle.h"

namespace cumdev {
namespace {

TEST(Calibration, TwoPointExample) {
  const CalibrationData data({0.25, 0.75}, {1, 0});
  const auto curve = calib_curve(data);
  ASSERT_EQ(curve.ordinates.size(), 2u);
  EXPECT_NEAR(curve.ordinates[0], 0.375, 1e-15);
  EXPECT_NEAR(curve.ordinates[1], 0.0, 1e-15);
  EXPECT_EQ(curve.abscissae, (std::vector<double>{0.5, 1.0}));
  EXPECT_NEAR(curve.sigma, 0.5 * std::sqrt(0.375), 1e-15);
  const auto stats = calib_stats(curve);
  EXPECT_NEAR(stats.g, 0.375, 1e-15);
  EXPECT_NEAR(stats.d, 0.375, 1e-15);
}

TEST(Calibration, RejectsInvalidData) {
  EXPECT_THROW(CalibrationData({}, {}), InvalidInput);
  EXPECT_THROW(CalibrationData({0.5}, {0.5}), InvalidInput);
  EXPECT_THROW(CalibrationData({1.5}, {1}), InvalidInput);
  EXPECT_THROW(CalibrationData({0.6, 0.5}, {1, 0}), InvalidInput);
  EXPECT_THROW(CalibrationData({0.5}, {1, 0}), InvalidInput);
  EXPECT_NO_THROW(CalibrationData({0.5, 0.5}, {1, 0}));
}

TEST(Calibration, MatchesOracle) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 60;
    std::vector<double> s(n);
    for (double& x : s) x = unit(gen);
    std::sort(s.begin(), s.end());
    std::vector<double> r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = unit(gen) < s[k] ? 1.0 : 0.0;
    const CalibrationData data(s, r);
    const auto curve = calib_curve(data);
    double var = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double observed = 0.0;
      double expected = 0.0;
      for (std::size_t j = 0; j <= k; ++j) {
        observed += r[j];
        expected += s[j];
      }
      EXPECT_NEAR(curve.ordinates[k], (observed - expected) / double(n), 1e-12);
      var += s[k] * (1 - s[k]);
    }
    EXPECT_NEAR(curve.sigma, std::sqrt(var) / double(n), 1e-12);

    const std::size_t bins = 1 + gen() % n;
    const auto diagram =
        calib_reliability(data, {BinKind::kEqualCount, bins, 0});
    EXPECT_TRUE(diagram.diagonal_reference);
    EXPECT_TRUE(diagram.full_points.empty());
    const std::vector<double> ones(n, 1.0);
    const auto want = oracle::grouped_means(
        s, r, ones, oracle::equal_count_groups(n, bins));
    ASSERT_EQ(diagram.sub_points.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      EXPECT_NEAR(diagram.sub_points[k].x, want[k].x, 1e-12);
      EXPECT_NEAR(diagram.sub_points[k].y, want[k].y, 1e-12);
    }
  }
}

CalibrationData sample_data() {
  std::vector<double> s(200);
  std::vector<double> r(200);
  for (std::size_t k = 0; k < s.size(); ++k) {
    s[k] = (double(k) + 0.5) / 200;
    r[k] = (k * 7919) % 200 < k ? 1.0 : 0.0;
  }
  return CalibrationData(s, r);
}

TEST(Bootstrap, ProducesRequestedReplicates) {
  const auto data = sample_data();
  const BinScheme scheme{BinKind::kEqualCount, 10, 0};
  const auto bands = bootstrap_bands(data, scheme);
  EXPECT_EQ(bands.size(), kDefaultBootstrapReps);
  EXPECT_EQ(bands.size(), 20u);
  EXPECT_EQ(bands, bootstrap_bands(data, scheme, 20, 0));
  EXPECT_NE(bands, bootstrap_bands(data, scheme, 20, 1));
  EXPECT_NE(bands[0], bands[1]);
  EXPECT_EQ(bootstrap_bands(data, scheme, 3, 0).size(), 3u);
  EXPECT_THROW(bootstrap_bands(data, scheme, 0, 0), InvalidInput);
}

TEST(Bootstrap, ResampleKeepsSizeAndOrder) {
  const auto data = sample_data();
  const auto sample = bootstrap_resample(data, 4, 2);
  EXPECT_EQ(sample.size(), data.size());
  EXPECT_TRUE(std::is_sorted(sample.probs().begin(), sample.probs().end()));
  for (std::size_t k = 0; k < sample.size(); ++k) {
    const auto it = std::lower_bound(data.probs().begin(), data.probs().end(),
                                     sample.probs()[k]);
    ASSERT_NE(it, data.probs().end());
    EXPECT_EQ(*it, sample.probs()[k]);
    EXPECT_EQ(data.outcomes()[it - data.probs().begin()],
              sample.outcomes()[k]);
  }
}

TEST(Bootstrap, ConstantDataReproducesBaseDiagram) {
  const CalibrationData data(std::vector<double>(50, 0.3),
                             std::vector<double>(50, 1.0));
  const BinScheme scheme{BinKind::kEqualCount, 5, 0};
  const auto base = calib_reliability(data, scheme);
  for (const auto& band : bootstrap_bands(data, scheme, 20, 7)) {
    EXPECT_EQ(band, base);
  }
}

}  // namespace
}  // namespace cumdev
