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

#include "cumdev/synth.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace cumdev {
namespace {

void expect_probabilities(const std::vector<double>& p) {
  for (double v : p) {
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

double expected_slope(const GroundTruth& truth, double lo, double hi) {
  const auto range = members_in_scores(truth.dataset, lo, hi);
  return secant_slope(expected_curve(truth), range.first, range.last);
}

TEST(Synth, NotchShape) {
  const GroundTruth truth = gen_notch(0);
  EXPECT_EQ(truth.dataset.size(), kSyntheticPopulation);
  EXPECT_EQ(truth.dataset.subpop_size(), 5000u);
  expect_probabilities(truth.probs);
  EXPECT_LT(std::abs(expected_slope(truth, 0.235, 0.265)), 1e-3);
  // Members sit 0.2 above their group; the bin averages include them.
  const double deviation = expected_slope(truth, 0.05, 0.2);
  EXPECT_GT(deviation, 0.19);
  EXPECT_LT(deviation, 0.24);
  EXPECT_GT(summarize(expected_curve(truth)).d_normalized.value(), 10.0);
}

TEST(Synth, SameSeedSameDraw) {
  const GroundTruth a = gen_notch(5);
  const GroundTruth b = gen_notch(5);
  const GroundTruth c = gen_notch(6);
  EXPECT_TRUE(std::equal(a.dataset.results().begin(),
                         a.dataset.results().end(),
                         b.dataset.results().begin()));
  EXPECT_FALSE(std::equal(a.dataset.results().begin(),
                          a.dataset.results().end(),
                          c.dataset.results().begin()));
  EXPECT_EQ(a.probs, c.probs);
}

TEST(Synth, SmoothOscillationShape) {
  const GroundTruth truth = gen_smooth_oscillation(0);
  EXPECT_EQ(truth.dataset.subpop_size(), 3300u);
  expect_probabilities(truth.probs);
  // Members get sparser with score.
  const auto subpop = truth.dataset.subpop();
  EXPECT_LT(subpop[10] - subpop[9], subpop[3299] - subpop[3298]);
  // A real deviation that mostly averages away: the summary statistics
  // stay modest even without noise.
  const auto stats = summarize(expected_curve(truth));
  EXPECT_GT(stats.d, 0.01);
  EXPECT_LT(stats.d_normalized.value(), 3.0);
}

TEST(Synth, StepOscillationShape) {
  const GroundTruth a = gen_step_oscillation(0);
  const GroundTruth b = gen_step_oscillation(1);
  EXPECT_EQ(a.dataset.subpop_size(), 2500u);
  expect_probabilities(a.probs);
  EXPECT_FALSE(std::equal(a.dataset.subpop().begin(), a.dataset.subpop().end(),
                          b.dataset.subpop().begin()));
  // Inside one step the expected slope is constant up to bin effects.
  const double s1 = expected_slope(a, 0.52, 0.58);
  const double s2 = expected_slope(a, 0.62, 0.68);
  EXPECT_GT(s2 - s1, 0.2);
}

TEST(Synth, WeightedOutlierLayout) {
  const GroundTruth truth = gen_weighted_outliers(0);
  const Dataset& d = truth.dataset;
  EXPECT_EQ(d.subpop_size(), 2500u);
  const std::size_t k = weighted_outlier_member(truth);
  const std::size_t i = d.subpop()[k];
  EXPECT_EQ(d.weight(i), 50.0);
  EXPECT_EQ(truth.probs[i], 1.0);
  EXPECT_EQ(d.weight(i - 1), 100.0);
  EXPECT_EQ(d.weight(i + 1), 100.0);
  EXPECT_EQ(truth.probs[i - 1], 0.0);
  EXPECT_EQ(truth.probs[i + 1], 1.0);
  EXPECT_NEAR(d.scores()[i], 0.75, 0.01);
  std::size_t heavy = 0;
  for (std::size_t j = 0; j < d.size(); ++j) heavy += d.weight(j) != 1.0;
  EXPECT_EQ(heavy, 3u);

  const GroundTruth base = gen_weighted_outliers(0, false);
  std::size_t differing = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d.results()[j] != base.dataset.results()[j]) {
      ++differing;
      EXPECT_TRUE(j + 1 >= i && j <= i + 1);
    }
  }
  EXPECT_LE(differing, 3u);
}

TEST(Synth, CalibrationKinds) {
  EXPECT_EQ(parse_calibration_kind("complex"), CalibrationKind::kComplex);
  EXPECT_THROW(parse_calibration_kind("cubic"), InvalidInput);
  for (auto kind : {CalibrationKind::kLinear,
                    CalibrationKind::kOverconfidentNotch,
                    CalibrationKind::kComplex}) {
    const auto truth = gen_calibration(kind, 1000, 3);
    EXPECT_EQ(truth.data.size(), 1000u);
    expect_probabilities(truth.probs);
  }
  const auto linear = gen_calibration(CalibrationKind::kLinear, 1000, 3);
  const auto curve = expected_calib_curve(linear);
  // P - S = 0.25 - 0.5 S integrates to zero over the equispaced grid.
  EXPECT_NEAR(curve.ordinates.back(), 0.0, 1e-12);
  EXPECT_NEAR(curve.ordinates[499], 0.0625, 1e-3);
  EXPECT_THROW(gen_calibration(CalibrationKind::kLinear, 0, 0), InvalidInput);
}

TEST(Synth, NullIsPerfectlyCalibrated) {
  const auto truth = gen_null(100, 0);
  const auto curve = expected_calib_curve(truth);
  for (double v : curve.ordinates) EXPECT_EQ(v, 0.0);
  EXPECT_GT(curve.sigma, 0.0);
}

}  // namespace
}  // namespace cumdev
