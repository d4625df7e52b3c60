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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "cumdev/core.h"
#include "cumdev/synth.h"

namespace cumdev {
namespace {

Dataset parse(const std::string& text, LoadOptions options = {}) {
  std::istringstream in(text);
  return read_dataset(in, options);
}

// Runs `f` and returns the DataError it throws.
template <typename F>
DataError data_error(F f) {
  try {
    f();
  } catch (const DataError& e) {
    return e;
  }
  ADD_FAILURE() << "no DataError thrown";
  return DataError("none");
}

TEST(Io, ReadsHandExample) {
  const Dataset d = parse("score,result,subpop\n1,0,0\n2,1,1\n3,0,0\n4,1,1\n");
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(std::vector<std::size_t>(d.subpop().begin(), d.subpop().end()),
            (std::vector<std::size_t>{1, 3}));
  EXPECT_FALSE(d.weighted());
}

TEST(Io, SortsRowsKeepingPairs) {
  const Dataset d = parse(
      "subpop,result,score\ntrue,1,3\nno,0,1\nYES,0.5,2\n");
  EXPECT_EQ(d.scores()[0], 1.0);
  EXPECT_EQ(d.results()[1], 0.5);
  EXPECT_EQ(d.results()[2], 1.0);
  EXPECT_EQ(d.subpop_size(), 2u);
}

TEST(Io, BreaksTiesDeterministically) {
  const std::string csv =
      "score,result,subpop\n0.5,1,1\n0.5,0,0\n0.5,1,0\n0,1,1\n0,0,0\n";
  const Dataset a = parse(csv);
  const Dataset b = parse(csv);
  EXPECT_TRUE(std::equal(a.scores().begin(), a.scores().end(),
                         b.scores().begin()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double original = a.scores()[i] < 0.25 ? 0.0 : 0.5;
    const double scale = original == 0.0 ? 1e-8 : 1e-8 * original;
    EXPECT_LE(std::abs(a.scores()[i] - original), scale);
    EXPECT_NE(a.scores()[i], original == 0.0 ? 0.5 : 0.0);
  }
  // Pairings survive: two members, one with result 1 at each score.
  EXPECT_EQ(a.subpop_size(), 2u);
}

TEST(Io, BreakTiesReturnsPermutation) {
  std::vector<double> s = {1, 1, 1, 2, 2};
  const auto perm = break_ties(s, 3);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(perm[k] < 3, k < 3);
}

TEST(Io, DropsZeroWeightRows) {
  const Dataset d = parse(
      "score,result,weight,subpop\n1,0,2,0\n2,1,0,1\n3,0,1.5,1\n4,1,1,0\n");
  EXPECT_EQ(d.size(), 3u);
  EXPECT_TRUE(d.weighted());
  EXPECT_EQ(d.scores()[1], 3.0);
}

TEST(Io, WeightModes) {
  const std::string csv = "score,result,weight,subpop\n1,0,2,1\n2,1,3,0\n";
  LoadOptions off;
  off.weights = WeightMode::kOff;
  EXPECT_FALSE(parse(csv, off).weighted());
  LoadOptions on;
  on.weights = WeightMode::kOn;
  EXPECT_TRUE(parse(csv, on).weighted());
  const auto e = data_error(
      [&] { parse("score,result,subpop\n1,0,1\n", on); });
  EXPECT_EQ(e.column(), "weight");
  EXPECT_THROW(parse_weight_mode("maybe"), InvalidInput);
}

TEST(Io, Diagnostics) {
  auto e = data_error([] { parse("score,result,subpop\n1,0,1\nx,1,0\n"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), "score");
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);

  e = data_error([] { parse("score,result,subpop\n1,inf,1\n"); });
  EXPECT_EQ(e.column(), "result");
  e = data_error([] { parse("score,subpop\n1,1\n"); });
  EXPECT_EQ(e.column(), "result");
  e = data_error(
      [] { parse("score,result,weight,subpop\n1,0,-1,1\n"); });
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), "weight");
  e = data_error([] { parse("score,result,subpop\n1,0,0\n2,1,0\n"); });
  EXPECT_NE(std::string(e.what()).find("subpopulation is empty"),
            std::string::npos);
  e = data_error([] { parse("score,result\n1,0\n"); });
  EXPECT_EQ(e.column(), "subpop");
  e = data_error([] { parse("score,result,subpop\n1,0,maybe\n"); });
  EXPECT_EQ(e.column(), "subpop");
  e = data_error([] { parse("score,result,subpop\n1,0\n"); });
  EXPECT_EQ(e.line(), 2u);
  e = data_error([] { parse(""); });
  EXPECT_EQ(e.line(), 1u);
  e = data_error([] { parse("score,result,subpop\n"); });
  EXPECT_NE(std::string(e.what()).find("no data rows"), std::string::npos);
}

TEST(Io, SubpopWhereFilter) {
  LoadOptions options;
  options.subpop_where = parse_subpop_filter("group=b");
  const Dataset d = parse(
      "score,result,group\n1,0,a\n2,1,b\n3,0,\"b\"\n4,1,c\n", options);
  EXPECT_EQ(std::vector<std::size_t>(d.subpop().begin(), d.subpop().end()),
            (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(parse_subpop_filter("novalue"), InvalidInput);
  options.subpop_where = parse_subpop_filter("missing=1");
  EXPECT_THROW(parse("score,result\n1,0\n", options), DataError);
}

TEST(Io, QuotedFieldsAndCrlf) {
  const Dataset d =
      parse("\"score\",result,subpop,note\r\n1,0,1,\"a, b\"\r\n2,1,0,x\r\n");
  EXPECT_EQ(d.size(), 2u);
}

TEST(Io, RoundTripIsExact) {
  const GroundTruth truth = gen_weighted_outliers(4);
  std::ostringstream out;
  write_dataset_csv(out, truth.dataset, truth.probs);
  std::istringstream in(out.str());
  const Dataset back = read_dataset(in, {});
  const Dataset& d = truth.dataset;
  EXPECT_TRUE(std::equal(d.scores().begin(), d.scores().end(),
                         back.scores().begin(), back.scores().end()));
  EXPECT_TRUE(std::equal(d.results().begin(), d.results().end(),
                         back.results().begin(), back.results().end()));
  EXPECT_TRUE(std::equal(d.weights().begin(), d.weights().end(),
                         back.weights().begin(), back.weights().end()));
  EXPECT_TRUE(std::equal(d.subpop().begin(), d.subpop().end(),
                         back.subpop().begin(), back.subpop().end()));
  const auto a = summarize(cumulative_curve(d));
  const auto b = summarize(cumulative_curve(back));
  EXPECT_NEAR(a.d, b.d, 1e-12);
  EXPECT_NEAR(a.sigma, b.sigma, 1e-12);
}

TEST(Io, CalibrationKeepsTies) {
  std::istringstream in("score,result\n0.5,1\n0.25,0\n0.5,0\n");
  const CalibrationData data = read_calibration(in);
  EXPECT_EQ(std::vector<double>(data.probs().begin(), data.probs().end()),
            (std::vector<double>{0.25, 0.5, 0.5}));
  EXPECT_EQ(data.outcomes()[1], 1.0);
  std::istringstream bad("score,result\n0.5,0.5\n");
  EXPECT_THROW(read_calibration(bad), InvalidInput);

  std::ostringstream out;
  write_calibration_csv(out, data);
  EXPECT_EQ(out.str(), "score,result\n0.25,0\n0.5,1\n0.5,0\n");
}

TEST(Io, Manifest) {
  std::istringstream in("# datasets\n a.csv \n\nb.csv\r\n");
  EXPECT_EQ(read_manifest(in), (std::vector<std::string>{"a.csv", "b.csv"}));
}

}  // namespace
}  // namespace cumdev
