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

#ifndef CUMDEV_CORE_H_
#define CUMDEV_CORE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cumdev/dataset.h"

namespace cumdev {

// How the fluctuation scale sigma is estimated.
//   kBernoulli: from R~(1 - R~), appropriate for 0/1 outcomes.
//   kEmpirical: from the within-bin empirical variance of the results.
//   kAuto:      kBernoulli when every result is 0 or 1, else kEmpirical.
enum class VarianceModel { kAuto, kBernoulli, kEmpirical };

// Cumulative differences between a subpopulation and the full population,
// one point per subpopulation member.
struct CumulativeCurve {
  // k/n for uniform weights, the normalized cumulative weight otherwise.
  std::vector<double> abscissae;
  // Cumulative subpopulation response minus cumulative matched
  // full-population response.
  std::vector<double> ordinates;
  // Score of the k-th member, for labeling the lower axis.
  std::vector<double> scores_at;
  double sigma = 0.0;
  std::size_t n = 0;
  bool weighted = false;
};

// Scalar summaries of a curve. The normalized forms are absent when
// sigma == 0.
struct SummaryStats {
  double g = 0.0;  // Kolmogorov-Smirnov: max |ordinate|
  double d = 0.0;  // Kuiper: range of ordinates, origin included
  double sigma = 0.0;
  std::optional<double> g_normalized;
  std::optional<double> d_normalized;
  std::size_t n = 0;
};

// The two cumulative sequences and the abscissae before differencing.
struct CumulativeSums {
  std::vector<double> subpop;      // F_k
  std::vector<double> full;        // F~_k
  std::vector<double> abscissae;   // A_k (k/n when unweighted)
};

// Thresholds B_0..B_n of the matched bins: -inf, the midpoints between
// consecutive subpopulation scores, +inf. Member k (0-based) owns the bin
// (B_k, B_{k+1}].
std::vector<double> midpoint_bins(const Dataset& dataset);

// Weighted average of all full-population results falling in each matched
// bin, one value per subpopulation member.
std::vector<double> binned_full_means(const Dataset& dataset,
                                      std::span<const double> thresholds);

// Fluctuation scale sigma for the whole subpopulation.
double sigma_scale(const Dataset& dataset, std::span<const double> thresholds,
                   std::span<const double> binned_means,
                   VarianceModel model = VarianceModel::kAuto);

CumulativeSums cumulative_sums(const Dataset& dataset,
                               std::span<const double> binned_means);

CumulativeCurve cumulative_curve(const Dataset& dataset,
                                 VarianceModel model = VarianceModel::kAuto);

double kolmogorov_smirnov(const CumulativeCurve& curve);
double kuiper(const CumulativeCurve& curve);
SummaryStats summarize(const CumulativeCurve& curve);

// The curve recomputed over subpopulation members [0, k_max) only, as when
// zooming in on the origin: the matched bins are those of the full
// analysis, but normalization and sigma use only the retained members.
CumulativeCurve restrict_curve(const Dataset& dataset, std::size_t k_max,
                               VarianceModel model = VarianceModel::kAuto);

// Generalization of restrict_curve to members [first, last). Accumulation
// restarts at `first`, which leaves every secant slope (and Kuiper's
// statistic of the unrestricted curve) unchanged.
CumulativeCurve restrict_range(const Dataset& dataset, std::size_t first,
                               std::size_t last,
                               VarianceModel model = VarianceModel::kAuto);

// Half-open range [first, last) of subpopulation members whose scores lie in
// [lo, hi]. Empty when none do.
struct MemberRange {
  std::size_t first = 0;
  std::size_t last = 0;
  bool empty() const { return first >= last; }
  std::size_t size() const { return last - first; }
};
MemberRange members_in_scores(const Dataset& dataset, double lo, double hi);

// Slope of the secant across members [first, last): the change in ordinate
// from just before member `first` to member last-1, divided by the change in
// abscissa. The origin serves as the point before member 0.
double secant_slope(const CumulativeCurve& curve, std::size_t first,
                    std::size_t last);

}  // namespace cumdev

#endif  // CUMDEV_CORE_H_
