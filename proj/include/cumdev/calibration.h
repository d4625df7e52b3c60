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

#ifndef CUMDEV_CALIBRATION_H_
#define CUMDEV_CALIBRATION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cumdev/binning.h"
#include "cumdev/core.h"

namespace cumdev {

// Predicted success probabilities paired with observed 0/1 outcomes, sorted
// by probability. Ties are permitted: a resampled data set necessarily has
// them, and none of the calibration formulas needs strict ordering.
class CalibrationData {
 public:
  // Throws InvalidInput unless the data are nonempty, equally long, sorted,
  // probabilities lie in [0, 1] and outcomes are 0 or 1.
  CalibrationData(std::vector<double> probs, std::vector<double> outcomes);

  std::span<const double> probs() const { return probs_; }
  std::span<const double> outcomes() const { return outcomes_; }
  std::size_t size() const { return probs_.size(); }

 private:
  std::vector<double> probs_;
  std::vector<double> outcomes_;
};

// Cumulative observed minus cumulative predicted response, at abscissae
// k/n, with sigma = sqrt(sum S(1 - S)) / n.
CumulativeCurve calib_curve(const CalibrationData& data);

SummaryStats calib_stats(const CumulativeCurve& curve);

// Per-bin (mean probability, success frequency), drawn against y = x.
ReliabilityDiagram calib_reliability(const CalibrationData& data,
                                     const BinScheme& scheme);

inline constexpr std::size_t kDefaultBootstrapReps = 20;

// Reliability diagrams of `reps` bootstrap resamples. Replicate r draws from
// its own substream of `seed`, so the result does not depend on evaluation
// order.
std::vector<ReliabilityDiagram> bootstrap_bands(
    const CalibrationData& data, const BinScheme& scheme,
    std::size_t reps = kDefaultBootstrapReps, std::uint64_t seed = 0);

// One resample of `data`, drawn with replacement and re-sorted. Duplicates
// keep the order of their original indices.
CalibrationData bootstrap_resample(const CalibrationData& data,
                                   std::uint64_t seed, std::size_t replicate);

}  // namespace cumdev

#endif  // CUMDEV_CALIBRATION_H_
