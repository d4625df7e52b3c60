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

#include "cumdev/binning.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cumdev/random.h"

namespace cumdev {

namespace {

double weight_at(std::span<const double> weights, std::size_t i) {
  return weights.empty() ? 1.0 : weights[i];
}

void validate_bin_input(const BinScheme& scheme,
                        std::span<const double> scores,
                        std::span<const double> weights) {
  if (scheme.target_bins < 1) throw InvalidInput("need at least one bin");
  if (scores.empty()) throw InvalidInput("no scores to bin");
  if (scheme.target_bins > scores.size()) {
    throw InvalidInput("requested " + std::to_string(scheme.target_bins) +
                       " bins for only " + std::to_string(scores.size()) +
                       " scores");
  }
  if (!weights.empty() && weights.size() != scores.size()) {
    throw InvalidInput("weights and scores differ in length");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) throw InvalidInput("scores must be finite");
    if (i > 0 && scores[i] < scores[i - 1]) {
      throw InvalidInput("scores must be sorted");
    }
    if (!weights.empty() && !(weights[i] > 0.0)) {
      throw InvalidInput("weights must be positive");
    }
  }
}

std::vector<double> equispaced_edges(std::span<const double> scores,
                                     std::size_t bins) {
  const double lo = scores.front();
  const double hi = scores.back();
  std::vector<double> edges;
  for (std::size_t k = 1; k < bins; ++k) {
    edges.push_back(lo + (hi - lo) * static_cast<double>(k) /
                             static_cast<double>(bins));
  }
  return edges;
}

std::vector<double> equal_count_edges(std::span<const double> scores,
                                      std::size_t bins) {
  const std::size_t per_bin = scores.size() / bins;
  std::vector<double> edges;
  for (std::size_t k = 1; k < bins; ++k) {
    const std::size_t split = k * per_bin;
    edges.push_back((scores[split - 1] + scores[split]) / 2);
  }
  return edges;
}

std::vector<double> equal_norm_ratio_edges(std::span<const double> scores,
                                           std::span<const double> weights,
                                           const BinScheme& scheme) {
  const std::size_t count = scores.size();
  const double target =
      norm_ratio_target(weights, count, scheme.target_bins, scheme.seed);
  std::vector<double> edges;
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start < count) {
    double sum = 0.0;
    double sum_squares = 0.0;
    std::size_t end = start;
    bool reached = false;
    for (; end < count; ++end) {
      const double w = weight_at(weights, end);
      sum += w;
      sum_squares += w * w;
      if (std::sqrt(sum_squares) / sum <= target) {
        reached = true;
        break;
      }
    }
    if (!reached) {
      sizes.push_back(count - start);
      break;
    }
    sizes.push_back(end - start + 1);
    if (end + 1 < count) edges.push_back((scores[end] + scores[end + 1]) / 2);
    start = end + 1;
  }
  // Fold a stunted final bin into its neighbor.
  if (sizes.size() >= 2 &&
      static_cast<double>(sizes.back()) <
          static_cast<double>(sizes[sizes.size() - 2]) / 2) {
    edges.pop_back();
  }
  return edges;
}

}  // namespace

BinKind parse_bin_kind(std::string_view name) {
  if (name == "equispaced" || name == "equispaced-scores") {
    return BinKind::kEquispacedScores;
  }
  if (name == "equal-count") return BinKind::kEqualCount;
  if (name == "equal-norm" || name == "equal-norm-ratio") {
    return BinKind::kEqualNormRatio;
  }
  throw InvalidInput("unknown bin scheme '" + std::string(name) + "'");
}

std::string_view bin_kind_name(BinKind kind) {
  switch (kind) {
    case BinKind::kEquispacedScores:
      return "equispaced";
    case BinKind::kEqualCount:
      return "equal-count";
    case BinKind::kEqualNormRatio:
      return "equal-norm";
  }
  return "unknown";
}

double norm_ratio_target(std::span<const double> weights, std::size_t count,
                         std::size_t target_bins, std::uint64_t seed) {
  if (target_bins < 1 || target_bins > count) {
    throw InvalidInput("bin count must lie in [1, number of scores]");
  }
  const std::size_t take = count / target_bins;
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed, Stream::kBinPermutation);
  // Partial Fisher-Yates: only the first `take` positions are needed.
  for (std::size_t j = 0; j < take; ++j) {
    const std::size_t pick = j + static_cast<std::size_t>(rng.below(count - j));
    std::swap(order[j], order[pick]);
  }
  double sum = 0.0;
  double sum_squares = 0.0;
  for (std::size_t j = 0; j < take; ++j) {
    const double w = weight_at(weights, order[j]);
    sum += w;
    sum_squares += w * w;
  }
  return std::sqrt(sum_squares) / sum;
}

std::vector<double> bin_edges(const BinScheme& scheme,
                              std::span<const double> scores,
                              std::span<const double> weights) {
  validate_bin_input(scheme, scores, weights);
  switch (scheme.kind) {
    case BinKind::kEquispacedScores:
      return equispaced_edges(scores, scheme.target_bins);
    case BinKind::kEqualCount:
      return equal_count_edges(scores, scheme.target_bins);
    case BinKind::kEqualNormRatio:
      return equal_norm_ratio_edges(scores, weights, scheme);
  }
  throw InvalidInput("unknown bin scheme");
}

BinnedAverages binned_averages(std::span<const double> scores,
                               std::span<const double> values,
                               std::span<const double> weights,
                               std::span<const double> edges) {
  if (values.size() != scores.size() ||
      (!weights.empty() && weights.size() != scores.size())) {
    throw InvalidInput("binned inputs differ in length");
  }
  const std::size_t bins = edges.size() + 1;
  std::vector<double> score_sum(bins, 0.0);
  std::vector<double> value_sum(bins, 0.0);
  std::vector<double> mass(bins, 0.0);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    // Bin k holds scores in (B_{k-1}, B_k]: k counts the edges below.
    const auto k = static_cast<std::size_t>(
        std::lower_bound(edges.begin(), edges.end(), scores[i]) -
        edges.begin());
    const double w = weight_at(weights, i);
    score_sum[k] += w * scores[i];
    value_sum[k] += w * values[i];
    mass[k] += w;
  }
  BinnedAverages averages;
  for (std::size_t k = 0; k < bins; ++k) {
    if (mass[k] > 0.0) {
      averages.points.push_back({score_sum[k] / mass[k], value_sum[k] / mass[k]});
    }
  }
  averages.mass = std::move(mass);
  return averages;
}

ReliabilityDiagram reliability_diagram(const Dataset& dataset,
                                       const BinScheme& sub_scheme,
                                       const BinScheme& full_scheme) {
  std::vector<double> sub_scores;
  std::vector<double> sub_results;
  std::vector<double> sub_weights;
  for (const std::size_t i : dataset.subpop()) {
    sub_scores.push_back(dataset.scores()[i]);
    sub_results.push_back(dataset.results()[i]);
    if (dataset.weighted()) sub_weights.push_back(dataset.weights()[i]);
  }
  ReliabilityDiagram diagram;
  diagram.sub_edges = bin_edges(sub_scheme, sub_scores, sub_weights);
  diagram.full_edges =
      bin_edges(full_scheme, dataset.scores(), dataset.weights());
  auto sub = binned_averages(sub_scores, sub_results, sub_weights,
                             diagram.sub_edges);
  auto full = binned_averages(dataset.scores(), dataset.results(),
                              dataset.weights(), diagram.full_edges);
  diagram.sub_points = std::move(sub.points);
  diagram.sub_mass = std::move(sub.mass);
  diagram.full_points = std::move(full.points);
  diagram.full_mass = std::move(full.mass);
  return diagram;
}

}  // namespace cumdev
