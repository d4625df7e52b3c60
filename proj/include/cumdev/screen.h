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

#ifndef CUMDEV_SCREEN_H_
#define CUMDEV_SCREEN_H_

#include <span>
#include <string>
#include <vector>

#include "cumdev/core.h"
#include "cumdev/dataset.h"
#include "cumdev/io.h"

namespace cumdev {

// Rows exceeding this D/sigma are flagged for a closer look. The value is
// roughly the mean of the normalized statistics under the null.
inline constexpr double kDefaultScreenThreshold = 1.25;

struct ScreenOptions {
  double threshold = kDefaultScreenThreshold;
  VarianceModel variance = VarianceModel::kAuto;
};

struct NamedDataset {
  std::string name;
  Dataset dataset;
};

struct ScreenRow {
  std::string name;
  SummaryStats stats;
  bool flagged = false;
};

struct ScreenFailure {
  std::string name;
  std::string message;
};

// Rows sort by descending D/sigma; rows whose D/sigma is undefined go last.
// Ties keep input order.
struct ScreenReport {
  std::vector<ScreenRow> rows;
  std::vector<ScreenFailure> failures;
};

ScreenReport screen(std::span<const NamedDataset> datasets,
                    const ScreenOptions& options);

// Loads and screens each file; a file that fails to load or analyze becomes
// a failure entry and the batch continues.
ScreenReport screen_files(std::span<const std::string> paths,
                          const LoadOptions& load,
                          const ScreenOptions& options);

}  // namespace cumdev

#endif  // CUMDEV_SCREEN_H_
