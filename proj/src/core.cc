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

#include "cumdev/core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cumdev {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Every formula is homogeneous of degree zero in the weights, so the weights
// are rescaled by their maximum before accumulating. Equal weights then
// become exactly 1 and reproduce the unweighted arithmetic bit for bit.
std::vector<double> scaled_weights(const Dataset& dataset) {
  std::vector<double> scaled(dataset.size(), 1.0);
  if (!dataset.weighted()) return scaled;
  const auto weights = dataset.weights();
  const double largest = *std::max_element(weights.begin(), weights.end());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    scaled[i] = weights[i] / largest;
  }
  return scaled;
}

void check_thresholds(const Dataset& dataset,
                      std::span<const double> thresholds) {
  if (thresholds.size() != dataset.subpop_size() + 1) {
    throw InvalidInput("expected " + std::to_string(dataset.subpop_size() + 1) +
                       " thresholds, got " +
                       std::to_string(thresholds.size()));
  }
}

// Calls visit(k, i) for every observation i, where k is the matched bin
// holding score i.
template <typename Visit>
void for_each_in_bins(const Dataset& dataset,
                      std::span<const double> thresholds, Visit visit) {
  const auto scores = dataset.scores();
  std::size_t k = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    while (!(scores[i] <= thresholds[k + 1])) ++k;
    visit(k, i);
  }
}

bool use_bernoulli(const Dataset& dataset, VarianceModel model) {
  switch (model) {
    case VarianceModel::kBernoulli:
      return true;
    case VarianceModel::kEmpirical:
      return false;
    case VarianceModel::kAuto:
      break;
  }
  return dataset.binary();
}

double sigma_over(const Dataset& dataset, std::span<const double> thresholds,
                  std::span<const double> binned_means, VarianceModel model,
                  std::size_t first, std::size_t last) {
  const auto w = scaled_weights(dataset);
  const auto subpop = dataset.subpop();
  std::vector<double> variance(dataset.subpop_size(), 0.0);
  if (use_bernoulli(dataset, model)) {
    for (std::size_t k = first; k < last; ++k) {
      variance[k] = binned_means[k] * (1.0 - binned_means[k]);
    }
  } else {
    const auto results = dataset.results();
    std::vector<double> deviation(dataset.subpop_size(), 0.0);
    std::vector<double> mass(dataset.subpop_size(), 0.0);
    for_each_in_bins(dataset, thresholds, [&](std::size_t k, std::size_t i) {
      const double delta = results[i] - binned_means[k];
      deviation[k] += w[i] * delta * delta;
      mass[k] += w[i];
    });
    for (std::size_t k = first; k < last; ++k) {
      variance[k] = deviation[k] / mass[k];
    }
  }
  double numerator = 0.0;
  double total = 0.0;
  for (std::size_t k = first; k < last; ++k) {
    const double wk = w[subpop[k]];
    numerator += wk * wk * variance[k];
    total += wk;
  }
  return std::sqrt(numerator) / total;
}

CumulativeCurve curve_over(const Dataset& dataset,
                           std::span<const double> thresholds,
                           std::span<const double> binned_means,
                           VarianceModel model, std::size_t first,
                           std::size_t last) {
  const auto w = scaled_weights(dataset);
  const auto subpop = dataset.subpop();
  const auto results = dataset.results();
  const auto scores = dataset.scores();

  double total = 0.0;
  for (std::size_t k = first; k < last; ++k) total += w[subpop[k]];

  CumulativeCurve curve;
  curve.n = last - first;
  curve.weighted = dataset.weighted();
  curve.abscissae.reserve(curve.n);
  curve.ordinates.reserve(curve.n);
  curve.scores_at.reserve(curve.n);
  double sub_sum = 0.0;
  double full_sum = 0.0;
  double weight_sum = 0.0;
  for (std::size_t k = first; k < last; ++k) {
    const std::size_t i = subpop[k];
    sub_sum += w[i] * results[i];
    full_sum += w[i] * binned_means[k];
    weight_sum += w[i];
    curve.ordinates.push_back(sub_sum / total - full_sum / total);
    curve.abscissae.push_back(weight_sum / total);
    curve.scores_at.push_back(scores[i]);
  }
  curve.sigma =
      sigma_over(dataset, thresholds, binned_means, model, first, last);
  return curve;
}

void require_nonempty(const CumulativeCurve& curve) {
  if (curve.ordinates.empty()) throw InvalidInput("curve is empty");
}

}  // namespace

std::vector<double> midpoint_bins(const Dataset& dataset) {
  const auto scores = dataset.scores();
  const auto subpop = dataset.subpop();
  if (subpop.empty()) throw InvalidInput("subpopulation is empty");
  std::vector<double> thresholds;
  thresholds.reserve(subpop.size() + 1);
  thresholds.push_back(-kInf);
  for (std::size_t k = 0; k + 1 < subpop.size(); ++k) {
    thresholds.push_back((scores[subpop[k]] + scores[subpop[k + 1]]) / 2);
  }
  thresholds.push_back(kInf);
  return thresholds;
}

std::vector<double> binned_full_means(const Dataset& dataset,
                                      std::span<const double> thresholds) {
  check_thresholds(dataset, thresholds);
  const auto w = scaled_weights(dataset);
  const auto results = dataset.results();
  std::vector<double> weighted_sum(dataset.subpop_size(), 0.0);
  std::vector<double> mass(dataset.subpop_size(), 0.0);
  for_each_in_bins(dataset, thresholds, [&](std::size_t k, std::size_t i) {
    weighted_sum[k] += w[i] * results[i];
    mass[k] += w[i];
  });
  std::vector<double> means(dataset.subpop_size());
  for (std::size_t k = 0; k < means.size(); ++k) {
    // Each bin holds at least its own subpopulation member.
    means[k] = weighted_sum[k] / mass[k];
  }
  return means;
}

double sigma_scale(const Dataset& dataset, std::span<const double> thresholds,
                   std::span<const double> binned_means, VarianceModel model) {
  check_thresholds(dataset, thresholds);
  if (binned_means.size() != dataset.subpop_size()) {
    throw InvalidInput("one binned mean per subpopulation member is required");
  }
  return sigma_over(dataset, thresholds, binned_means, model, 0,
                    dataset.subpop_size());
}

CumulativeSums cumulative_sums(const Dataset& dataset,
                               std::span<const double> binned_means) {
  if (binned_means.size() != dataset.subpop_size()) {
    throw InvalidInput("one binned mean per subpopulation member is required");
  }
  const auto w = scaled_weights(dataset);
  const auto subpop = dataset.subpop();
  const auto results = dataset.results();
  double total = 0.0;
  for (const std::size_t i : subpop) total += w[i];
  CumulativeSums sums;
  double sub_sum = 0.0;
  double full_sum = 0.0;
  double weight_sum = 0.0;
  for (std::size_t k = 0; k < subpop.size(); ++k) {
    const std::size_t i = subpop[k];
    sub_sum += w[i] * results[i];
    full_sum += w[i] * binned_means[k];
    weight_sum += w[i];
    sums.subpop.push_back(sub_sum / total);
    sums.full.push_back(full_sum / total);
    sums.abscissae.push_back(weight_sum / total);
  }
  return sums;
}

CumulativeCurve cumulative_curve(const Dataset& dataset, VarianceModel model) {
  return restrict_range(dataset, 0, dataset.subpop_size(), model);
}

double kolmogorov_smirnov(const CumulativeCurve& curve) {
  require_nonempty(curve);
  double largest = 0.0;
  for (const double v : curve.ordinates) largest = std::max(largest, std::abs(v));
  return largest;
}

double kuiper(const CumulativeCurve& curve) {
  require_nonempty(curve);
  // The origin (k = 0) is part of the range.
  double lo = 0.0;
  double hi = 0.0;
  for (const double v : curve.ordinates) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

SummaryStats summarize(const CumulativeCurve& curve) {
  SummaryStats stats;
  stats.g = kolmogorov_smirnov(curve);
  stats.d = kuiper(curve);
  stats.sigma = curve.sigma;
  stats.n = curve.n;
  if (curve.sigma > 0.0) {
    stats.g_normalized = stats.g / curve.sigma;
    stats.d_normalized = stats.d / curve.sigma;
  }
  return stats;
}

CumulativeCurve restrict_curve(const Dataset& dataset, std::size_t k_max,
                               VarianceModel model) {
  if (k_max < 1 || k_max > dataset.subpop_size()) {
    throw InvalidInput("k_max must lie in [1, " +
                       std::to_string(dataset.subpop_size()) + "]");
  }
  return restrict_range(dataset, 0, k_max, model);
}

CumulativeCurve restrict_range(const Dataset& dataset, std::size_t first,
                               std::size_t last, VarianceModel model) {
  if (first >= last || last > dataset.subpop_size()) {
    throw InvalidInput("member range [" + std::to_string(first) + ", " +
                       std::to_string(last) + ") is empty or out of bounds");
  }
  const auto thresholds = midpoint_bins(dataset);
  const auto means = binned_full_means(dataset, thresholds);
  return curve_over(dataset, thresholds, means, model, first, last);
}

MemberRange members_in_scores(const Dataset& dataset, double lo, double hi) {
  const auto scores = dataset.scores();
  const auto subpop = dataset.subpop();
  const auto begin = std::partition_point(
      subpop.begin(), subpop.end(),
      [&](std::size_t i) { return scores[i] < lo; });
  const auto end = std::partition_point(
      begin, subpop.end(), [&](std::size_t i) { return scores[i] <= hi; });
  return {static_cast<std::size_t>(begin - subpop.begin()),
          static_cast<std::size_t>(end - subpop.begin())};
}

double secant_slope(const CumulativeCurve& curve, std::size_t first,
                    std::size_t last) {
  if (first >= last || last > curve.ordinates.size()) {
    throw InvalidInput("secant range is empty or out of bounds");
  }
  const double y0 = first == 0 ? 0.0 : curve.ordinates[first - 1];
  const double x0 = first == 0 ? 0.0 : curve.abscissae[first - 1];
  return (curve.ordinates[last - 1] - y0) / (curve.abscissae[last - 1] - x0);
}

}  // namespace cumdev
