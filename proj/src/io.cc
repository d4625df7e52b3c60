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

#include "cumdev/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <utility>

#include "cumdev/random.h"

namespace cumdev {
namespace {

std::string describe(const std::string& message, std::size_t line,
                     const std::string& column) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!column.empty()) out += "column '" + column + "': ";
  return out + message;
}

std::string_view trim(std::string_view s) {
  const auto space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = char(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Splits one CSV line; double quotes group commas and "" is a literal quote.
std::vector<std::string> split_csv(std::string_view line, std::size_t number) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw DataError("unterminated quote", number);
  fields.emplace_back(trim(field));
  return fields;
}

double parse_number(std::string_view cell, std::size_t line,
                    const std::string& column) {
  std::string_view text = trim(cell);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw DataError("not a number: '" + std::string(cell) + "'", line, column);
  }
  if (!std::isfinite(value)) {
    throw DataError("non-finite value: '" + std::string(cell) + "'", line,
                    column);
  }
  return value;
}

bool parse_flag(std::string_view cell, std::size_t line,
                const std::string& column) {
  const std::string text = lower(trim(cell));
  if (text == "1" || text == "true" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "no") return false;
  throw DataError("not a boolean: '" + std::string(cell) + "'", line, column);
}

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::optional<std::size_t> find_column(const std::vector<std::string>& header,
                                       std::string_view name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return std::size_t(it - header.begin());
}

bool getline_stripped(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace

DataError::DataError(const std::string& message, std::size_t line,
                     std::string column)
    : InvalidInput(describe(message, line, column)),
      line_(line),
      column_(std::move(column)) {}

WeightMode parse_weight_mode(std::string_view name) {
  if (name == "auto") return WeightMode::kAuto;
  if (name == "on") return WeightMode::kOn;
  if (name == "off") return WeightMode::kOff;
  throw InvalidInput("weight mode must be auto, on or off");
}

SubpopFilter parse_subpop_filter(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw InvalidInput("subpopulation filter must look like column=value");
  }
  return SubpopFilter{lower(trim(text.substr(0, eq))),
                      std::string(trim(text.substr(eq + 1)))};
}

std::vector<RawRecord> read_records(std::istream& in,
                                    const LoadOptions& options) {
  std::string line;
  if (!getline_stripped(in, line)) throw DataError("missing header row", 1);
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);
  }
  std::vector<std::string> header = split_csv(line, 1);
  for (std::string& name : header) name = lower(name);

  const auto require = [&](const std::string& name) {
    const auto col = find_column(header, name);
    if (!col) throw DataError("missing required column", 1, name);
    return *col;
  };
  const std::size_t score_col = require("score");
  const std::size_t result_col = require("result");
  std::optional<std::size_t> weight_col;
  if (options.weights == WeightMode::kOn) {
    weight_col = require("weight");
  } else if (options.weights == WeightMode::kAuto) {
    weight_col = find_column(header, "weight");
  }
  std::optional<std::size_t> subpop_col;
  if (options.subpop_where) {
    subpop_col = require(options.subpop_where->column);
  } else {
    subpop_col = find_column(header, "subpop");
  }

  std::vector<RawRecord> records;
  std::size_t number = 1;
  while (getline_stripped(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_csv(line, number);
    if (cells.size() != header.size()) {
      throw DataError("expected " + std::to_string(header.size()) +
                          " fields, found " + std::to_string(cells.size()),
                      number);
    }
    RawRecord record;
    record.line = number;
    record.score = parse_number(cells[score_col], number, "score");
    record.result = parse_number(cells[result_col], number, "result");
    if (weight_col) {
      const double w = parse_number(cells[*weight_col], number, "weight");
      if (w < 0.0) throw DataError("negative weight", number, "weight");
      if (w == 0.0) continue;
      record.weight = w;
    }
    if (subpop_col) {
      record.subpop =
          options.subpop_where
              ? cells[*subpop_col] == options.subpop_where->value
              : parse_flag(cells[*subpop_col], number, "subpop");
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<std::size_t> break_ties(std::vector<double>& scores,
                                    std::uint64_t seed) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed, Stream::kTieBreak);
  for (int round = 0; round < 64; ++round) {
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < n; ++i) {
      if ((i > 0 && scores[i] == scores[i - 1]) ||
          (i + 1 < n && scores[i] == scores[i + 1])) {
        tied.push_back(i);
      }
    }
    if (tied.empty()) return perm;
    for (std::size_t i : tied) {
      const double u = 2.0 * rng.uniform() - 1.0;
      const double scale = scores[i] == 0.0 ? 1e-8 : 1e-8 * std::abs(scores[i]);
      scores[i] += u * scale;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return scores[a] < scores[b];
                     });
    std::vector<double> sorted(n);
    std::vector<std::size_t> composed(n);
    for (std::size_t k = 0; k < n; ++k) {
      sorted[k] = scores[order[k]];
      composed[k] = perm[order[k]];
    }
    scores = std::move(sorted);
    perm = std::move(composed);
  }
  throw InvalidInput("could not separate tied scores");
}

Dataset dataset_from_records(std::vector<RawRecord> records,
                             std::uint64_t seed) {
  if (records.empty()) throw DataError("no data rows");
  std::stable_sort(records.begin(), records.end(),
                   [](const RawRecord& a, const RawRecord& b) {
                     return a.score < b.score;
                   });
  std::vector<double> scores(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    scores[i] = records[i].score;
  }
  const std::vector<std::size_t> perm = break_ties(scores, seed);

  const bool weighted = records.front().weight.has_value();
  std::vector<double> results(records.size());
  std::vector<double> weights;
  if (weighted) weights.resize(records.size());
  std::vector<std::size_t> subpop;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const RawRecord& r = records[perm[k]];
    results[k] = r.result;
    if (weighted) weights[k] = *r.weight;
    if (!r.subpop) throw DataError("missing subpop column", 1, "subpop");
    if (*r.subpop) subpop.push_back(k);
  }
  if (subpop.empty()) throw DataError("subpopulation is empty");
  return Dataset(std::move(scores), std::move(results), std::move(weights),
                 std::move(subpop));
}

Dataset read_dataset(std::istream& in, const LoadOptions& options) {
  return dataset_from_records(read_records(in, options), options.seed);
}

Dataset load_dataset(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return read_dataset(in, options);
}

CalibrationData read_calibration(std::istream& in) {
  LoadOptions options;
  options.weights = WeightMode::kOff;
  std::vector<RawRecord> records = read_records(in, options);
  if (records.empty()) throw DataError("no data rows");
  std::stable_sort(records.begin(), records.end(),
                   [](const RawRecord& a, const RawRecord& b) {
                     return a.score < b.score;
                   });
  std::vector<double> probs(records.size());
  std::vector<double> outcomes(records.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    probs[k] = records[k].score;
    outcomes[k] = records[k].result;
  }
  return CalibrationData(std::move(probs), std::move(outcomes));
}

CalibrationData load_calibration(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return read_calibration(in);
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset,
                       std::span<const double> expected) {
  if (!expected.empty() && expected.size() != dataset.size()) {
    throw InvalidInput("expected column must match the dataset length");
  }
  out << "score,result";
  if (dataset.weighted()) out << ",weight";
  out << ",subpop";
  if (!expected.empty()) out << ",expected";
  out << '\n';
  const auto subpop = dataset.subpop();
  std::size_t next = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const bool member = next < subpop.size() && subpop[next] == i;
    if (member) ++next;
    out << shortest(dataset.scores()[i]) << ','
        << shortest(dataset.results()[i]);
    if (dataset.weighted()) out << ',' << shortest(dataset.weights()[i]);
    out << ',' << (member ? '1' : '0');
    if (!expected.empty()) out << ',' << shortest(expected[i]);
    out << '\n';
  }
}

void write_calibration_csv(std::ostream& out, const CalibrationData& data,
                           std::span<const double> expected) {
  if (!expected.empty() && expected.size() != data.size()) {
    throw InvalidInput("expected column must match the data length");
  }
  out << "score,result";
  if (!expected.empty()) out << ",expected";
  out << '\n';
  for (std::size_t k = 0; k < data.size(); ++k) {
    out << shortest(data.probs()[k]) << ',' << shortest(data.outcomes()[k]);
    if (!expected.empty()) out << ',' << shortest(expected[k]);
    out << '\n';
  }
}

std::vector<std::string> read_manifest(std::istream& in) {
  std::vector<std::string> paths;
  std::string line;
  while (getline_stripped(in, line)) {
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    paths.emplace_back(text);
  }
  return paths;
}

}  // namespace cumdev
