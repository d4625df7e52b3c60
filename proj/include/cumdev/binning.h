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

#ifndef CUMDEV_BINNING_H_
#define CUMDEV_BINNING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cumdev/dataset.h"

namespace cumdev {

enum class BinKind {
  // Thresholds equispaced between the least and greatest score.
  kEquispacedScores,
  // Equal numbers of scores per bin; the remainder goes to the rightmost bin.
  kEqualCount,
  // Bins grown greedily until ||W||_2 / ||W||_1 drops to a common target.
  kEqualNormRatio,
};

BinKind parse_bin_kind(std::string_view name);
std::string_view bin_kind_name(BinKind kind);

struct BinScheme {
  BinKind kind = BinKind::kEqualCount;
  // Number of bins (the desired number for kEqualNormRatio).
  std::size_t target_bins = 10;
  // Seeds the random permutation that sets the kEqualNormRatio target.
  std::uint64_t seed = 0;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Classical binned comparison. Bins are (B_{k-1}, B_k] with B_0 = -inf and
// B_l = +inf; the edge vectors hold the interior thresholds B_1..B_{l-1}.
// Empty bins contribute no point but keep a zero entry in the mass vectors.
struct ReliabilityDiagram {
  std::vector<Point> sub_points;
  std::vector<Point> full_points;
  std::vector<double> sub_edges;
  std::vector<double> full_edges;
  // Per-bin counts (uniform weights) or weight sums.
  std::vector<double> sub_mass;
  std::vector<double> full_mass;
  // Calibration diagrams compare against the line y = x instead of a second
  // population; full_points is then empty.
  bool diagonal_reference = false;

  friend bool operator==(const ReliabilityDiagram&,
                         const ReliabilityDiagram&) = default;
};

// Interior thresholds for `scores` (nondecreasing). `weights` may be empty
// for uniform weighting. Throws InvalidInput when the requested number of
// bins exceeds the number of scores.
std::vector<double> bin_edges(const BinScheme& scheme,
                              std::span<const double> scores,
                              std::span<const double> weights);

// ||W||_2 / ||W||_1 of the first floor(count / target_bins) entries of a
// seeded uniformly random permutation of the weights.
double norm_ratio_target(std::span<const double> weights, std::size_t count,
                         std::size_t target_bins, std::uint64_t seed);

struct BinnedAverages {
  std::vector<Point> points;  // (mean score, mean value) of nonempty bins
  std::vector<double> mass;   // one entry per bin, empty bins included
};

// Weighted averages of scores and values over the bins defined by `edges`.
BinnedAverages binned_averages(std::span<const double> scores,
                               std::span<const double> values,
                               std::span<const double> weights,
                               std::span<const double> edges);

ReliabilityDiagram reliability_diagram(const Dataset& dataset,
                                       const BinScheme& sub_scheme,
                                       const BinScheme& full_scheme);

}  // namespace cumdev

#endif  // CUMDEV_BINNING_H_
