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

#include "cumdev/report.h"

#include <charconv>
#include <optional>
#include <sstream>

namespace cumdev {
namespace {

std::string fixed6(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                       std::chars_format::fixed, 6);
  return std::string(buf, end);
}

std::string fixed6(const std::optional<double>& v) {
  return v ? fixed6(*v) : "undefined";
}

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string shortest(const std::optional<double>& v) {
  return v ? shortest(*v) : "undefined";
}

}  // namespace

std::string format_stats(const SummaryStats& stats) {
  std::ostringstream out;
  out << "G = " << fixed6(stats.g) << '\n'
      << "D = " << fixed6(stats.d) << '\n'
      << "sigma = " << fixed6(stats.sigma) << '\n'
      << "G/sigma = " << fixed6(stats.g_normalized) << '\n'
      << "D/sigma = " << fixed6(stats.d_normalized) << '\n'
      << "n = " << stats.n << '\n'
      << '\n'
      << "g=" << shortest(stats.g) << '\n'
      << "d=" << shortest(stats.d) << '\n'
      << "sigma=" << shortest(stats.sigma) << '\n'
      << "g_normalized=" << shortest(stats.g_normalized) << '\n'
      << "d_normalized=" << shortest(stats.d_normalized) << '\n'
      << "n=" << stats.n << '\n';
  return out.str();
}

std::string format_screen(const ScreenReport& report) {
  std::ostringstream out;
  out << "rank\tname\tn\tG\tD\tsigma\tG/sigma\tD/sigma\tflag\n";
  std::size_t rank = 0;
  for (const ScreenRow& row : report.rows) {
    out << ++rank << '\t' << row.name << '\t' << row.stats.n << '\t'
        << fixed6(row.stats.g) << '\t' << fixed6(row.stats.d) << '\t'
        << fixed6(row.stats.sigma) << '\t' << fixed6(row.stats.g_normalized)
        << '\t' << fixed6(row.stats.d_normalized) << '\t'
        << (row.flagged ? "*" : "") << '\n';
  }
  for (const ScreenFailure& failure : report.failures) {
    out << "failed\t" << failure.name << '\t' << failure.message << '\n';
  }
  return out.str();
}

}  // namespace cumdev
