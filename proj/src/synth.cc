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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "cumdev/random.h"

namespace cumdev {
namespace {

constexpr std::size_t kM = kSyntheticPopulation;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Bernoulli draws in index order from the outcome stream.
std::vector<double> draw_outcomes(std::span<const double> probs,
                                  std::uint64_t seed) {
  Rng rng(seed, Stream::kOutcomes);
  std::vector<double> results(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    results[i] = rng.bernoulli(probs[i]) ? 1.0 : 0.0;
  }
  return results;
}

// A uniformly random `count`-subset of [0, total), sorted.
std::vector<std::size_t> random_subset(std::size_t total, std::size_t count,
                                       std::uint64_t seed) {
  std::vector<std::size_t> pool(total);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  Rng rng(seed, Stream::kSubset);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(total - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<bool> membership(std::span<const std::size_t> subpop,
                             std::size_t total) {
  std::vector<bool> member(total, false);
  for (std::size_t i : subpop) member[i] = true;
  return member;
}

// Five nonmember levels 0.1, 0.3, ..., 0.9 keyed on the 1-based index.
double five_level(std::size_t j) { return 0.1 + 0.2 * double(j % 5); }

GroundTruth assemble(std::vector<double> scores, std::vector<double> probs,
                     std::vector<double> weights,
                     std::vector<std::size_t> subpop, std::uint64_t seed) {
  std::vector<double> results = draw_outcomes(probs, seed);
  Dataset dataset(std::move(scores), std::move(results), std::move(weights),
                  std::move(subpop));
  return GroundTruth{std::move(probs), std::move(dataset)};
}

}  // namespace

GroundTruth gen_notch(std::uint64_t seed) {
  std::vector<double> scores(kM);
  std::vector<std::size_t> subpop;
  for (std::size_t i = 0; i < kM; ++i) {
    const std::size_t j = i + 1;
    const double t = (double(j) - 0.5) / double(kM);
    scores[i] = t * t;
    const bool member = j % 20 == 0 ||
                        (j % 10 == 0 && j >= 12500 && j < 37500) ||
                        (j % 5 == 0 && j >= 20750 && j < 29250) ||
                        (j >= 24750 && j < 25250);
    if (member) subpop.push_back(i);
  }
  const std::vector<bool> member = membership(subpop, kM);
  constexpr double kGroupOffset[4] = {-0.2, -0.1, 0.0, 0.1};
  std::vector<double> probs(kM);
  for (std::size_t i = 0; i < kM; ++i) {
    const double s = scores[i];
    const double centre = 0.3 + 0.3 * s;
    const double v = (s >= kNotchLow && s <= kNotchHigh) ? 0.0 : 1.0;
    probs[i] = member[i] ? centre + 0.2 * v
                         : centre + kGroupOffset[(i + 1) % 4] * v;
  }
  return assemble(std::move(scores), std::move(probs), {}, std::move(subpop),
                  seed);
}

GroundTruth gen_smooth_oscillation(std::uint64_t seed) {
  constexpr std::size_t kMembers = 3300;
  std::vector<double> scores(kM);
  for (std::size_t i = 0; i < kM; ++i) {
    scores[i] = (double(i) + 0.5) / double(kM);
  }
  std::vector<std::size_t> subpop;
  for (std::size_t k = 1; subpop.size() < kMembers; ++k) {
    const double x = double(k) * std::cbrt(double(k));
    const auto j = static_cast<std::size_t>(std::llround(x));
    if (subpop.empty() || subpop.back() != j - 1) subpop.push_back(j - 1);
  }
  const std::vector<bool> member = membership(subpop, kM);
  std::vector<double> probs(kM);
  for (std::size_t i = 0; i < kM; ++i) {
    probs[i] = member[i]
                   ? 0.5 + 0.4 * std::sin(kTwoPi * kOscillationCycles * scores[i])
                   : five_level(i + 1);
  }
  return assemble(std::move(scores), std::move(probs), {}, std::move(subpop),
                  seed);
}

GroundTruth gen_step_oscillation(std::uint64_t seed) {
  constexpr std::size_t kMembers = 2500;
  constexpr double kLevels[4] = {0.1, 0.5, 0.9, 0.5};
  std::vector<double> scores(kM);
  for (std::size_t i = 0; i < kM; ++i) {
    scores[i] = std::sqrt((double(i) + 0.5) / double(kM));
  }
  std::vector<std::size_t> subpop = random_subset(kM, kMembers, seed);
  const std::vector<bool> member = membership(subpop, kM);
  std::vector<double> probs(kM);
  for (std::size_t i = 0; i < kM; ++i) {
    const auto step = static_cast<std::size_t>(std::floor(10.0 * scores[i]));
    probs[i] = member[i] ? kLevels[step % 4] : five_level(i + 1);
  }
  return assemble(std::move(scores), std::move(probs), {}, std::move(subpop),
                  seed);
}

GroundTruth gen_weighted_outliers(std::uint64_t seed, bool with_outliers) {
  constexpr std::size_t kMembers = 2500;
  std::vector<double> scores(kM);
  for (std::size_t i = 0; i < kM; ++i) {
    scores[i] = (double(i) + 0.5) / double(kM);
  }
  std::vector<std::size_t> subpop = random_subset(kM, kMembers, seed);
  const std::vector<bool> member = membership(subpop, kM);
  std::vector<double> probs(kM);
  for (std::size_t i = 0; i < kM; ++i) {
    const double phase = double((i + 1) % 4) / 4.0;
    probs[i] = member[i]
                   ? 0.0
                   : 0.1 + 0.1 * std::sin(kTwoPi * (5.0 * scores[i] + phase));
  }
  std::vector<double> weights(kM, 1.0);
  if (with_outliers) {
    std::size_t best = kM;
    for (std::size_t i : subpop) {
      if (i < 2 || i + 2 >= kM) continue;
      if (member[i - 2] || member[i - 1] || member[i + 1] || member[i + 2]) {
        continue;
      }
      if (best == kM ||
          std::abs(scores[i] - 0.75) < std::abs(scores[best] - 0.75)) {
        best = i;
      }
    }
    if (best == kM) throw InvalidInput("no isolated member for the outlier");
    probs[best] = 1.0;
    weights[best] = 0.02 * double(kMembers);
    probs[best - 1] = 0.0;
    probs[best + 1] = 1.0;
    weights[best - 1] = 0.002 * double(kM);
    weights[best + 1] = 0.002 * double(kM);
  }
  return assemble(std::move(scores), std::move(probs), std::move(weights),
                  std::move(subpop), seed);
}

std::size_t weighted_outlier_member(const GroundTruth& truth) {
  const Dataset& d = truth.dataset;
  const auto subpop = d.subpop();
  std::size_t best = 0;
  for (std::size_t k = 1; k < subpop.size(); ++k) {
    if (d.weight(subpop[k]) > d.weight(subpop[best])) best = k;
  }
  return best;
}

CalibrationKind parse_calibration_kind(std::string_view name) {
  if (name == "linear") return CalibrationKind::kLinear;
  if (name == "overconfident-notch") {
    return CalibrationKind::kOverconfidentNotch;
  }
  if (name == "complex") return CalibrationKind::kComplex;
  throw InvalidInput("unknown calibration generator: " + std::string(name));
}

CalibrationTruth gen_calibration(CalibrationKind kind, std::size_t n,
                                 std::uint64_t seed) {
  if (n == 0) throw InvalidInput("calibration generator needs n >= 1");
  std::vector<double> probs(n);
  std::vector<double> truth(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = (double(k) + 0.5) / double(n);
    double s = t;
    double p = 0.0;
    switch (kind) {
      case CalibrationKind::kLinear:
        p = 0.25 + 0.5 * s;
        break;
      case CalibrationKind::kOverconfidentNotch: {
        s = t * t;
        const double z = (s - 0.25) / 0.15;
        p = std::abs(s - 0.25) < 0.02 ? s : s + 0.2 * std::exp(-z * z);
        break;
      }
      case CalibrationKind::kComplex:
        s = std::sqrt(t);
        p = s + 0.6 * s * (1.0 - s) * std::sin(10.0 * std::numbers::pi * s);
        break;
    }
    probs[k] = s;
    truth[k] = p;
  }
  std::vector<double> outcomes = draw_outcomes(truth, seed);
  return CalibrationTruth{std::move(truth),
                          CalibrationData(std::move(probs), std::move(outcomes))};
}

CalibrationTruth gen_null(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidInput("null generator needs n >= 1");
  std::vector<double> probs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = (double(k) + 0.5) / double(n);
    probs[k] = t * t;
  }
  std::vector<double> truth = probs;
  std::vector<double> outcomes = draw_outcomes(truth, seed);
  return CalibrationTruth{std::move(truth),
                          CalibrationData(std::move(probs), std::move(outcomes))};
}

CumulativeCurve expected_curve(const GroundTruth& truth) {
  return cumulative_curve(truth.dataset.with_results(truth.probs),
                          VarianceModel::kBernoulli);
}

CumulativeCurve expected_calib_curve(const CalibrationTruth& truth) {
  CumulativeCurve curve = calib_curve(truth.data);
  const auto s = truth.data.probs();
  const double n = double(s.size());
  double total = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    total += truth.probs[k] - s[k];
    curve.ordinates[k] = total / n;
  }
  return curve;
}

}  // namespace cumdev
