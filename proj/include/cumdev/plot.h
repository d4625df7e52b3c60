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

#ifndef CUMDEV_PLOT_H_
#define CUMDEV_PLOT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cumdev/binning.h"
#include "cumdev/core.h"

namespace cumdev {

struct ScoreRange {
  double lo = 0.0;
  double hi = 0.0;
};

struct PlotSpec {
  int width = 640;
  int height = 480;
  std::string title;
  std::string x_label;
  std::string y_label;
  // Only annotates the plot; the caller passes the already restricted curve.
  std::optional<ScoreRange> zoom;
  bool include_triangle = true;
  // Approximate number of major ticks per axis.
  std::size_t major_ticks = 5;
};

// Multiples of 1, 2 or 5 times a power of ten inside [lo, hi], spaced so
// that about `target` of them fit.
std::vector<double> nice_ticks(double lo, double hi, std::size_t target);

// The plot area carries data-x-min/-max, data-y-min/-max and the pixel box
// (data-left/-right/-top/-bottom) as attributes, so every emitted coordinate
// can be mapped back to data space:
//   x = x_min + (px - left) / (right - left) * (x_max - x_min)
//   y = y_min + (bottom - py) / (bottom - top) * (y_max - y_min)
//
// The triangle's vertical side runs from -2 sigma to +2 sigma at x = 0.
std::string render_cumulative(const CumulativeCurve& curve,
                              const PlotSpec& spec);

// Bootstrap replicates draw as light-gray polylines of their subpopulation
// points beneath the diagram itself.
std::string render_reliability(const ReliabilityDiagram& diagram,
                               std::span<const ReliabilityDiagram> bands,
                               const PlotSpec& spec);

}  // namespace cumdev

#endif  // CUMDEV_PLOT_H_
