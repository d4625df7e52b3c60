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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cumdev/random.h"

namespace cumdev {

CalibrationData::CalibrationData(std::vector<double> probs,
                                 std::vector<double> outcomes)
    : probs_(std::move(probs)), outcomes_(std::move(outcomes)) {
  if (probs_.empty()) throw InvalidInput("calibration data are empty");
  if (probs_.size() != outcomes_.size()) {
    throw InvalidInput("probabilities and outcomes differ in length");
  }
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    if (!(probs_[j] >= 0.0 && probs_[j] <= 1.0)) {
      throw InvalidInput("probability " + std::to_string(j) +
                         " lies outside [0, 1]");
    }
    if (j > 0 && probs_[j] < probs_[j - 1]) {
      throw InvalidInput("probabilities must be sorted");
    }
    if (outcomes_[j] != 0.0 && outcomes_[j] != 1.0) {
      throw InvalidInput("outcome " + std::to_string(j) + " is not 0 or 1");
    }
  }
}

CumulativeCurve calib_curve(const CalibrationData& data) {
  const auto probs = data.probs();
  const auto outcomes = data.outcomes();
  const std::size_t n = data.size();
  const auto count = static_cast<double>(n);
  CumulativeCurve curve;
  curve.n = n;
  double observed = 0.0;
  double expected = 0.0;
  double variance = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    observed += outcomes[j];
    expected += probs[j];
    variance += probs[j] * (1.0 - probs[j]);
    curve.ordinates.push_back(observed / count - expected / count);
    curve.abscissae.push_back(static_cast<double>(j + 1) / count);
    curve.scores_at.push_back(probs[j]);
  }
  curve.sigma = std::sqrt(variance) / count;
  return curve;
}

SummaryStats calib_stats(const CumulativeCurve& curve) {
  return summarize(curve);
}

ReliabilityDiagram calib_reliability(const CalibrationData& data,
                                     const BinScheme& scheme) {
  ReliabilityDiagram diagram;
  diagram.diagonal_reference = true;
  diagram.sub_edges = bin_edges(scheme, data.probs(), {});
  auto averages =
      binned_averages(data.probs(), data.outcomes(), {}, diagram.sub_edges);
  diagram.sub_points = std::move(averages.points);
  diagram.sub_mass = std::move(averages.mass);
  return diagram;
}

CalibrationData bootstrap_resample(const CalibrationData& data,
                                   std::uint64_t seed, std::size_t replicate) {
  const std::size_t n = data.size();
  Rng rng(seed, Stream::kBootstrap, replicate);
  std::vector<std::size_t> picks(n);
  for (auto& pick : picks) pick = static_cast<std::size_t>(rng.below(n));
  // The source is sorted by probability, so sorting indices sorts the
  // resample and orders duplicates by original index.
  std::sort(picks.begin(), picks.end());
  std::vector<double> probs(n);
  std::vector<double> outcomes(n);
  for (std::size_t j = 0; j < n; ++j) {
    probs[j] = data.probs()[picks[j]];
    outcomes[j] = data.outcomes()[picks[j]];
  }
  return CalibrationData(std::move(probs), std::move(outcomes));
}

std::vector<ReliabilityDiagram> bootstrap_bands(const CalibrationData& data,
                                                const BinScheme& scheme,
                                                std::size_t reps,
                                                std::uint64_t seed) {
  if (reps < 1) throw InvalidInput("need at least one bootstrap replicate");
  std::vector<ReliabilityDiagram> bands;
  bands.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    bands.push_back(calib_reliability(bootstrap_resample(data, seed, r), scheme));
  }
  return bands;
}

}  // namespace cumdev
