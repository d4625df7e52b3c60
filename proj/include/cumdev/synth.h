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

#ifndef CUMDEV_SYNTH_H_
#define CUMDEV_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cumdev/calibration.h"
#include "cumdev/core.h"
#include "cumdev/dataset.h"

namespace cumdev {

// Synthetic populations with known Bernoulli success probabilities. Every
// generator is a pure function of its arguments: outcomes are drawn as
// R_i = [u_i < P_i] with u_i taken in index order from the seed's outcome
// stream, and any random subset selection uses a separate stream.
//
// The expectation arrays are our own closed forms (documented per
// generator); they reproduce the qualitative structure of the classic
// examples rather than any particular published draw.

inline constexpr std::size_t kSyntheticPopulation = 50000;

// Scores near 0.25 inside [kNotchLow, kNotchHigh] carry no deviation.
inline constexpr double kNotchLow = 0.23;
inline constexpr double kNotchHigh = 0.27;

struct GroundTruth {
  std::vector<double> probs;  // P_i, one per observation
  Dataset dataset;            // results drawn from Bernoulli(P_i)
};

// m = 50,000 scores S_j = ((j - 0.5) / m)^2 and n = 5,000 members: the
// multiples of 20, refined three times around j = m/2 (multiples of 10 in
// [12500, 37500), multiples of 5 in [20750, 29250), every index in
// [24750, 25250)).
//
// Expectations: with c(s) = 0.3 + 0.3 s and v(s) = 0 on the notch, 1 off it,
// members have P = c + 0.2 v; nonmembers fall into four groups by j mod 4
// with P = c + {-0.2, -0.1, 0, 0.1} v.
GroundTruth gen_notch(std::uint64_t seed);

// m = 50,000 equispaced scores S_j = (j - 0.5) / m; members are the first
// n = 3,300 distinct values of round(k^(4/3)), k = 1, 2, ...
//
// Expectations: members P = 0.5 + 0.4 sin(2 pi kOscillationCycles s);
// nonmembers form five groups by j mod 5 with P = 0.1, 0.3, 0.5, 0.7, 0.9.
inline constexpr double kOscillationCycles = 12.0;
GroundTruth gen_smooth_oscillation(std::uint64_t seed);

// m = 50,000 scores S_j = sqrt((j - 0.5) / m); members are a seeded uniform
// random subset of n = 2,500 indices.
//
// Expectations: members P = {0.1, 0.5, 0.9, 0.5}[floor(10 s) mod 4], a
// staircase; nonmembers as in gen_smooth_oscillation.
GroundTruth gen_step_oscillation(std::uint64_t seed);

// m = 50,000 equispaced scores; n = 2,500 seeded random members, all with
// P = 0; nonmembers form four phase-shifted groups (j mod 4 = g) with
// P = 0.1 + 0.1 sin(2 pi (5 s + g / 4)), inside [0, 0.2]. All weights are 1.
//
// With `with_outliers`, the member nearest score 0.75 whose two neighbors on
// each side are nonmembers becomes an outlier with P = 1 and weight 0.02 n;
// its immediate lower and upper neighbors get P = 0 and P = 1 respectively,
// each with weight 0.002 m.
GroundTruth gen_weighted_outliers(std::uint64_t seed, bool with_outliers = true);

// Index (into dataset.subpop()) of the heavily weighted member.
std::size_t weighted_outlier_member(const GroundTruth& truth);

enum class CalibrationKind { kLinear, kOverconfidentNotch, kComplex };

CalibrationKind parse_calibration_kind(std::string_view name);

struct CalibrationTruth {
  std::vector<double> probs;  // true success probabilities P_k
  CalibrationData data;       // predicted S_k and outcomes ~ Bernoulli(P_k)
};

// kLinear:            S_k = (k - 0.5) / n,      P = 0.25 + 0.5 S.
// kOverconfidentNotch: S_k = ((k - 0.5) / n)^2, P = S + 0.2 exp(-((S - 0.25)
//                     / 0.15)^2), except P = S where |S - 0.25| < 0.02.
// kComplex:           S_k = sqrt((k - 0.5) / n), P = S + 0.6 S (1 - S)
//                     sin(10 pi S).
CalibrationTruth gen_calibration(CalibrationKind kind, std::size_t n,
                                 std::uint64_t seed);

// Perfect calibration: S_k = ((k - 0.5) / n)^2 and P = S.
CalibrationTruth gen_null(std::size_t n, std::uint64_t seed);

// The noiseless curve: every result replaced by its expectation, sigma from
// the Bernoulli formula applied to the expected bin averages.
CumulativeCurve expected_curve(const GroundTruth& truth);

// Calibration analogue: ordinates accumulate P - S.
CumulativeCurve expected_calib_curve(const CalibrationTruth& truth);

}  // namespace cumdev

#endif  // CUMDEV_SYNTH_H_
