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

#ifndef CUMDEV_DATASET_H_
#define CUMDEV_DATASET_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cumdev {

// Raised whenever an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Observations of a full population together with the members of one
// subpopulation.
//
// Invariants (checked on construction):
//   * scores are finite and strictly increasing;
//   * results are finite and have the same length as scores;
//   * weights are either empty (uniform weighting) or all finite and
//     strictly positive, with the same length as scores;
//   * subpop holds strictly increasing 0-based indices into the population
//     and is nonempty.
//
// A subpopulation equal to the whole population is allowed; every cumulative
// difference is then identically zero.
class Dataset {
 public:
  Dataset(std::vector<double> scores, std::vector<double> results,
          std::vector<double> weights, std::vector<std::size_t> subpop);

  std::span<const double> scores() const { return scores_; }
  std::span<const double> results() const { return results_; }
  // Empty when the data are uniformly weighted.
  std::span<const double> weights() const { return weights_; }
  std::span<const std::size_t> subpop() const { return subpop_; }

  std::size_t size() const { return scores_.size(); }
  std::size_t subpop_size() const { return subpop_.size(); }
  bool weighted() const { return !weights_.empty(); }
  double weight(std::size_t i) const {
    return weights_.empty() ? 1.0 : weights_[i];
  }
  // True when every result is exactly 0 or 1.
  bool binary() const { return binary_; }

  // The same observations with uniform weights.
  Dataset without_weights() const;

  // The same observations with results replaced (length must match).
  Dataset with_results(std::vector<double> results) const;

 private:
  std::vector<double> scores_;
  std::vector<double> results_;
  std::vector<double> weights_;
  std::vector<std::size_t> subpop_;
  bool binary_ = true;
};

// Checks that values are finite and strictly increasing; `what` names the
// sequence in the error message.
void require_strictly_increasing(std::span<const double> values,
                                 const std::string& what);

}  // namespace cumdev

#endif  // CUMDEV_DATASET_H_
