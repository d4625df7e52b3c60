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

#include "cumdev/dataset.h"

#include <cmath>
#include <utility>

namespace cumdev {

void require_strictly_increasing(std::span<const double> values,
                                 const std::string& what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidInput(what + " must be finite (index " + std::to_string(i) +
                         ")");
    }
    if (i > 0 && !(values[i - 1] < values[i])) {
      throw InvalidInput(what + " must be strictly increasing (index " +
                         std::to_string(i) + ")");
    }
  }
}

Dataset::Dataset(std::vector<double> scores, std::vector<double> results,
                 std::vector<double> weights, std::vector<std::size_t> subpop)
    : scores_(std::move(scores)),
      results_(std::move(results)),
      weights_(std::move(weights)),
      subpop_(std::move(subpop)) {
  const std::size_t m = scores_.size();
  if (m == 0) throw InvalidInput("dataset has no observations");
  if (results_.size() != m) {
    throw InvalidInput("results and scores differ in length");
  }
  if (!weights_.empty() && weights_.size() != m) {
    throw InvalidInput("weights and scores differ in length");
  }
  require_strictly_increasing(scores_, "scores");
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(results_[i])) {
      throw InvalidInput("result " + std::to_string(i) + " is not finite");
    }
    if (results_[i] != 0.0 && results_[i] != 1.0) binary_ = false;
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i]) || !(weights_[i] > 0.0)) {
      throw InvalidInput("weight " + std::to_string(i) +
                         " must be finite and positive");
    }
  }
  if (subpop_.empty()) throw InvalidInput("subpopulation is empty");
  for (std::size_t j = 0; j < subpop_.size(); ++j) {
    if (subpop_[j] >= m) {
      throw InvalidInput("subpopulation index " + std::to_string(subpop_[j]) +
                         " out of range");
    }
    if (j > 0 && subpop_[j - 1] >= subpop_[j]) {
      throw InvalidInput("subpopulation indices must be strictly increasing");
    }
  }
}

Dataset Dataset::without_weights() const {
  return Dataset(scores_, results_, {}, subpop_);
}

Dataset Dataset::with_results(std::vector<double> results) const {
  return Dataset(scores_, std::move(results), weights_, subpop_);
}

}  // namespace cumdev
