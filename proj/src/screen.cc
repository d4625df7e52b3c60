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

#include "cumdev/screen.h"

#include <algorithm>
#include <exception>

namespace cumdev {
namespace {

ScreenRow analyze(const std::string& name, const Dataset& dataset,
                  const ScreenOptions& options) {
  const SummaryStats stats =
      summarize(cumulative_curve(dataset, options.variance));
  const bool flagged =
      stats.d_normalized && *stats.d_normalized > options.threshold;
  return ScreenRow{name, stats, flagged};
}

void sort_rows(std::vector<ScreenRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScreenRow& a, const ScreenRow& b) {
                     const auto& x = a.stats.d_normalized;
                     const auto& y = b.stats.d_normalized;
                     if (!x || !y) return x.has_value() && !y.has_value();
                     return *x > *y;
                   });
}

}  // namespace

ScreenReport screen(std::span<const NamedDataset> datasets,
                    const ScreenOptions& options) {
  ScreenReport report;
  for (const NamedDataset& entry : datasets) {
    try {
      report.rows.push_back(analyze(entry.name, entry.dataset, options));
    } catch (const std::exception& e) {
      report.failures.push_back({entry.name, e.what()});
    }
  }
  sort_rows(report.rows);
  return report;
}

ScreenReport screen_files(std::span<const std::string> paths,
                          const LoadOptions& load,
                          const ScreenOptions& options) {
  ScreenReport report;
  for (const std::string& path : paths) {
    try {
      report.rows.push_back(analyze(path, load_dataset(path, load), options));
    } catch (const std::exception& e) {
      report.failures.push_back({path, e.what()});
    }
  }
  sort_rows(report.rows);
  return report;
}

}  // namespace cumdev
