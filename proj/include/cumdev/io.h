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

#ifndef CUMDEV_IO_H_
#define CUMDEV_IO_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cumdev/calibration.h"
#include "cumdev/dataset.h"

namespace cumdev {

// A problem with input data. `line` is the 1-based line in the file (the
// header is line 1) or 0 when the problem is not tied to one line.
class DataError : public InvalidInput {
 public:
  DataError(const std::string& message, std::size_t line = 0,
            std::string column = {});

  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  std::size_t line_;
  std::string column_;
};

enum class WeightMode { kAuto, kOn, kOff };
WeightMode parse_weight_mode(std::string_view name);

struct SubpopFilter {
  std::string column;
  std::string value;
};

// Parses "col=value".
SubpopFilter parse_subpop_filter(std::string_view text);

struct LoadOptions {
  std::uint64_t seed = 0;
  WeightMode weights = WeightMode::kAuto;
  // Replaces the subpop column: members are rows whose `column` cell equals
  // `value` exactly.
  std::optional<SubpopFilter> subpop_where;
};

struct RawRecord {
  double score = 0.0;
  double result = 0.0;
  std::optional<double> weight;
  std::optional<bool> subpop;
  std::size_t line = 0;
};

// Reads a CSV with header columns score,result[,weight][,subpop]; other
// columns are ignored. Rows with weight 0 are dropped.
std::vector<RawRecord> read_records(std::istream& in,
                                    const LoadOptions& options);

// Perturbs tied entries of `scores` (sorted nondecreasing) by a seeded
// relative amount of at most 1e-8 (1e-8 absolute at zero) until all entries
// are distinct. Returns the permutation that re-sorts them.
std::vector<std::size_t> break_ties(std::vector<double>& scores,
                                    std::uint64_t seed);

Dataset dataset_from_records(std::vector<RawRecord> records,
                             std::uint64_t seed);

Dataset read_dataset(std::istream& in, const LoadOptions& options);
Dataset load_dataset(const std::string& path, const LoadOptions& options);

// Columns score,result; rows are sorted by score and ties are kept.
CalibrationData read_calibration(std::istream& in);
CalibrationData load_calibration(const std::string& path);

// Doubles are written in shortest round-trip form, so reading the file back
// reproduces the dataset exactly. A nonempty `expected` adds that column.
void write_dataset_csv(std::ostream& out, const Dataset& dataset,
                       std::span<const double> expected = {});
void write_calibration_csv(std::ostream& out, const CalibrationData& data,
                           std::span<const double> expected = {});

// Non-blank lines that do not start with '#', whitespace-trimmed.
std::vector<std::string> read_manifest(std::istream& in);

}  // namespace cumdev

#endif  // CUMDEV_IO_H_
