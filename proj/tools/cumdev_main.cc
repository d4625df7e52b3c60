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

// cumdev: cumulative-difference analysis from the command line.
//
//   cumdev stats data.csv
//   cumdev plot data.csv -o curve.svg --zoom 0.2:0.3
//   cumdev reliability data.csv --scheme equal-count --bins 10 -o rel.svg
//   cumdev calibrate preds.csv --bootstrap 20 -o rel.svg
//   cumdev synth notch --seed 3 -o notch.csv
//   cumdev screen manifest.txt
//
// Exit status: 0 on success, 1 on usage errors, 2 on data errors.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cumdev/binning.h"
#include "cumdev/calibration.h"
#include "cumdev/core.h"
#include "cumdev/io.h"
#include "cumdev/plot.h"
#include "cumdev/report.h"
#include "cumdev/screen.h"
#include "cumdev/synth.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string weighted = "auto";
  std::string binary = "auto";
  std::string subpop_where;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("CUMDEV_SEED")) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw UsageError("CUMDEV_SEED must be a nonnegative integer");
    }
    return 0;
  }

  cumdev::LoadOptions load() const {
    cumdev::LoadOptions options;
    options.seed = resolved_seed();
    options.weights = cumdev::parse_weight_mode(weighted);
    if (!subpop_where.empty()) {
      options.subpop_where = cumdev::parse_subpop_filter(subpop_where);
    }
    return options;
  }

  cumdev::VarianceModel variance() const {
    if (binary == "on") return cumdev::VarianceModel::kBernoulli;
    if (binary == "off") return cumdev::VarianceModel::kEmpirical;
    return cumdev::VarianceModel::kAuto;
  }
};

cumdev::ScoreRange parse_zoom(const std::string& text) {
  const auto colon = text.find(':');
  cumdev::ScoreRange range;
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    range.lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string hi = text.substr(colon + 1);
    range.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("--zoom expects LO:HI, got '" + text + "'");
  }
  if (!(range.hi > range.lo)) throw UsageError("--zoom needs LO < HI");
  return range;
}

// "-" means standard output.
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw cumdev::DataError("cannot write " + path);
}

std::string number(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

std::string stats_title(const cumdev::SummaryStats& stats) {
  std::string title = "n = " + std::to_string(stats.n);
  if (stats.d_normalized) {
    title += ", G/sigma = " + number(*stats.g_normalized) +
             ", D/sigma = " + number(*stats.d_normalized);
  }
  return title;
}

cumdev::BinScheme scheme_from(const std::string& name, std::size_t bins,
                              std::uint64_t seed) {
  cumdev::BinScheme scheme;
  scheme.kind = cumdev::parse_bin_kind(name);
  scheme.target_bins = bins;
  scheme.seed = seed;
  return scheme;
}

int run_stats(const Globals& g, const std::string& input) {
  const cumdev::Dataset dataset = cumdev::load_dataset(input, g.load());
  const auto curve = cumdev::cumulative_curve(dataset, g.variance());
  std::cout << cumdev::format_stats(cumdev::summarize(curve));
  return 0;
}

int run_plot(const Globals& g, const std::string& input,
             const std::string& output, const std::string& zoom,
             const std::string& title) {
  const cumdev::Dataset dataset = cumdev::load_dataset(input, g.load());
  cumdev::PlotSpec spec;
  spec.x_label = "score (upper axis: k/n)";
  spec.y_label = "cumulative difference";
  cumdev::CumulativeCurve curve;
  if (zoom.empty()) {
    curve = cumdev::cumulative_curve(dataset, g.variance());
  } else {
    spec.zoom = parse_zoom(zoom);
    const cumdev::MemberRange members =
        cumdev::members_in_scores(dataset, spec.zoom->lo, spec.zoom->hi);
    if (members.empty()) {
      throw cumdev::DataError("no subpopulation scores inside the zoom range");
    }
    curve = cumdev::restrict_range(dataset, members.first, members.last,
                                   g.variance());
  }
  spec.title = title.empty() ? stats_title(cumdev::summarize(curve)) : title;
  emit(output, cumdev::render_cumulative(curve, spec));
  return 0;
}

int run_reliability(const Globals& g, const std::string& input,
                    const std::string& output, const std::string& scheme_name,
                    std::size_t bins, const std::string& title) {
  const cumdev::Dataset dataset = cumdev::load_dataset(input, g.load());
  const cumdev::BinScheme scheme =
      scheme_from(scheme_name, bins, g.resolved_seed());
  const auto diagram = cumdev::reliability_diagram(dataset, scheme, scheme);
  cumdev::PlotSpec spec;
  spec.title = title.empty() ? "reliability diagram" : title;
  spec.x_label = "average score";
  spec.y_label = "average result";
  emit(output, cumdev::render_reliability(diagram, {}, spec));
  return 0;
}

int run_calibrate(const Globals& g, const std::string& input,
                  const std::string& output, const std::string& cumulative,
                  const std::string& scheme_name, std::size_t bins,
                  std::size_t bootstrap) {
  const cumdev::CalibrationData data = cumdev::load_calibration(input);
  const std::uint64_t seed = g.resolved_seed();
  const cumdev::BinScheme scheme = scheme_from(scheme_name, bins, seed);
  const auto curve = cumdev::calib_curve(data);
  const auto stats = cumdev::calib_stats(curve);
  std::cout << cumdev::format_stats(stats);

  if (!output.empty()) {
    const auto diagram = cumdev::calib_reliability(data, scheme);
    std::vector<cumdev::ReliabilityDiagram> bands;
    if (bootstrap > 0) {
      bands = cumdev::bootstrap_bands(data, scheme, bootstrap, seed);
    }
    cumdev::PlotSpec spec;
    spec.title = "reliability diagram";
    spec.x_label = "average predicted probability";
    spec.y_label = "observed frequency";
    emit(output, cumdev::render_reliability(diagram, bands, spec));
  }
  if (!cumulative.empty()) {
    cumdev::PlotSpec spec;
    spec.title = stats_title(stats);
    spec.x_label = "predicted probability (upper axis: k/n)";
    spec.y_label = "cumulative observed minus predicted";
    emit(cumulative, cumdev::render_cumulative(curve, spec));
  }
  return 0;
}

int run_synth(const Globals& g, const std::string& generator,
              const std::string& output, std::size_t n) {
  const std::uint64_t seed = g.resolved_seed();
  std::ostringstream out;
  if (generator == "notch" || generator == "smooth-oscillation" ||
      generator == "step-oscillation" || generator == "weighted-outliers") {
    const cumdev::GroundTruth truth =
        generator == "notch"                ? cumdev::gen_notch(seed)
        : generator == "smooth-oscillation" ? cumdev::gen_smooth_oscillation(seed)
        : generator == "step-oscillation"   ? cumdev::gen_step_oscillation(seed)
                                            : cumdev::gen_weighted_outliers(seed);
    cumdev::write_dataset_csv(out, truth.dataset, truth.probs);
  } else if (generator == "null") {
    const auto truth = cumdev::gen_null(n, seed);
    cumdev::write_calibration_csv(out, truth.data, truth.probs);
  } else if (generator.rfind("calibration-", 0) == 0) {
    cumdev::CalibrationKind kind;
    try {
      kind = cumdev::parse_calibration_kind(generator.substr(12));
    } catch (const cumdev::InvalidInput& e) {
      throw UsageError(e.what());
    }
    const auto truth = cumdev::gen_calibration(kind, n, seed);
    cumdev::write_calibration_csv(out, truth.data, truth.probs);
  } else {
    throw UsageError("unknown generator: " + generator);
  }
  emit(output, out.str());
  return 0;
}

int run_screen(const Globals& g, const std::string& manifest,
               double threshold) {
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw cumdev::DataError("cannot open " + manifest);
  const std::filesystem::path base =
      std::filesystem::path(manifest).parent_path();
  std::vector<std::string> paths;
  for (const std::string& entry : cumdev::read_manifest(in)) {
    const std::filesystem::path p(entry);
    paths.push_back(p.is_absolute() ? entry : (base / p).string());
  }
  cumdev::ScreenOptions options;
  options.threshold = threshold;
  options.variance = g.variance();
  const cumdev::ScreenReport report =
      cumdev::screen_files(paths, g.load(), options);
  std::cout << cumdev::format_screen(report);
  for (const auto& failure : report.failures) {
    std::cerr << "cumdev: " << failure.name << ": " << failure.message << '\n';
  }
  return report.failures.empty() ? 0 : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cumulative differences between a subpopulation and the full "
               "population"};
  app.name("cumdev");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed,
                 "Seed for tie breaking, binning and resampling "
                 "(default: $CUMDEV_SEED or 0)");
  app.add_option("--weighted", g.weighted, "Use the weight column")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  app.add_option("--binary", g.binary,
                 "Treat results as 0/1 (Bernoulli variance) or not "
                 "(empirical variance)")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  app.add_option("--subpop-where", g.subpop_where,
                 "Define the subpopulation as rows with column=value");

  std::string input;
  std::string output = "-";
  std::string zoom;
  std::string title;

  auto* stats = app.add_subcommand("stats", "Print G, D, sigma and n");
  stats->add_option("csv", input, "Input CSV")->required();

  auto* plot = app.add_subcommand("plot", "Render the cumulative plot as SVG");
  plot->add_option("csv", input, "Input CSV")->required();
  plot->add_option("-o,--output", output, "Output SVG (- for stdout)");
  plot->add_option("--zoom", zoom, "Restrict to scores in LO:HI");
  plot->add_option("--title", title, "Plot title");

  const CLI::IsMember kSchemes(
      {"equispaced", "equispaced-scores", "equal-count", "equal-norm",
       "equal-norm-ratio"});
  std::string scheme_name = "equal-count";
  std::size_t bins = 10;
  auto* reliability =
      app.add_subcommand("reliability", "Render a reliability diagram as SVG");
  reliability->add_option("csv", input, "Input CSV")->required();
  reliability->add_option("-o,--output", output, "Output SVG (- for stdout)");
  reliability->add_option("--scheme", scheme_name,
                          "equispaced, equal-count or equal-norm")
      ->check(kSchemes);
  reliability->add_option("--bins", bins, "Target number of bins")
      ->check(CLI::PositiveNumber);
  reliability->add_option("--title", title, "Plot title");

  std::string cumulative;
  std::size_t bootstrap = 0;
  auto* calibrate = app.add_subcommand(
      "calibrate", "Assess calibration of predicted probabilities");
  calibrate->add_option("csv", input, "CSV with score and 0/1 result")
      ->required();
  calibrate->add_option("-o,--output", output,
                        "Reliability diagram SVG (- for stdout)");
  calibrate->add_option("--cumulative", cumulative, "Cumulative plot SVG");
  calibrate->add_option("--bootstrap", bootstrap,
                        "Number of bootstrap replicates to overlay");
  calibrate->add_option("--scheme", scheme_name,
                        "equispaced, equal-count or equal-norm")
      ->check(kSchemes);
  calibrate->add_option("--bins", bins, "Target number of bins")
      ->check(CLI::PositiveNumber);

  std::string generator;
  std::size_t n = 10000;
  auto* synth = app.add_subcommand("synth", "Write a synthetic dataset");
  synth->add_option("generator", generator,
                    "notch, smooth-oscillation, step-oscillation, "
                    "weighted-outliers, calibration-linear, "
                    "calibration-overconfident-notch, calibration-complex, "
                    "null")
      ->required();
  synth->add_option("-o,--output", output, "Output CSV (- for stdout)");
  synth->add_option("--n", n, "Sample size for calibration generators")
      ->check(CLI::PositiveNumber);

  std::string manifest;
  double threshold = cumdev::kDefaultScreenThreshold;
  auto* screen =
      app.add_subcommand("screen", "Rank many datasets by D/sigma");
  screen->add_option("manifest", manifest, "File listing one CSV per line")
      ->required();
  screen->add_option("--threshold", threshold, "Flag rows above this D/sigma");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e) == 0) return 0;
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*stats) return run_stats(g, input);
    if (*plot) return run_plot(g, input, output, zoom, title);
    if (*reliability) {
      return run_reliability(g, input, output, scheme_name, bins, title);
    }
    if (*calibrate) {
      return run_calibrate(g, input, calibrate->count("--output") ? output : "",
                           cumulative, scheme_name, bins, bootstrap);
    }
    if (*synth) return run_synth(g, generator, output, n);
    if (*screen) return run_screen(g, manifest, threshold);
  } catch (const UsageError& e) {
    std::cerr << "cumdev: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cumdev: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
