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

#include "cumdev/plot.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace cumdev {
namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 24.0;
constexpr double kTop = 64.0;
constexpr double kBottom = 64.0;

constexpr const char* kSubColor = "#000000";
constexpr const char* kFullColor = "#808080";
constexpr const char* kBandColor = "#d3d3d3";

std::string fixed3(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::fixed, 3);
  std::string out(buf, end);
  if (out == "-0.000") out = "0.000";
  return out;
}

// Shortest text that reads back as the same double.
std::string exact(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string label(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 4);
  return std::string(buf, end);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Pads by 5% each side; a degenerate range grows to width 1.
  void pad() {
    if (!(hi > lo)) {
      const double c = std::isfinite(lo) ? lo : 0.0;
      lo = c - 0.5;
      hi = c + 0.5;
      return;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
  }
};

class Frame {
 public:
  Frame(const PlotSpec& spec, Range x, Range y)
      : spec_(spec), x_(x), y_(y) {
    if (spec.width <= 0 || spec.height <= 0) {
      throw InvalidInput("plot dimensions must be positive");
    }
    left_ = kLeft;
    right_ = std::max(left_ + 1.0, double(spec.width) - kRight);
    top_ = kTop;
    bottom_ = std::max(top_ + 1.0, double(spec.height) - kBottom);
  }

  double px(double x) const {
    return left_ + (x - x_.lo) / (x_.hi - x_.lo) * (right_ - left_);
  }
  double py(double y) const {
    return bottom_ - (y - y_.lo) / (y_.hi - y_.lo) * (bottom_ - top_);
  }
  std::string xy(double x, double y) const {
    return fixed3(px(x)) + "," + fixed3(py(y));
  }

  void open(std::ostringstream& out) const {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << spec_.width << "\" height=\"" << spec_.height << "\" viewBox=\"0 0 "
        << spec_.width << ' ' << spec_.height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << spec_.width << "\" height=\""
        << spec_.height << "\" fill=\"#ffffff\"/>\n";
    if (!spec_.title.empty()) {
      out << "<text class=\"title\" x=\"" << fixed3(spec_.width / 2.0)
          << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"14\">"
          << escape(spec_.title) << "</text>\n";
    }
    out << "<g id=\"plot\" data-x-min=\"" << exact(x_.lo) << "\" data-x-max=\""
        << exact(x_.hi) << "\" data-y-min=\"" << exact(y_.lo)
        << "\" data-y-max=\"" << exact(y_.hi) << "\" data-left=\""
        << exact(left_) << "\" data-right=\"" << exact(right_)
        << "\" data-top=\"" << exact(top_) << "\" data-bottom=\""
        << exact(bottom_) << "\">\n"
        << "<rect class=\"frame\" x=\"" << fixed3(left_) << "\" y=\""
        << fixed3(top_) << "\" width=\"" << fixed3(right_ - left_)
        << "\" height=\"" << fixed3(bottom_ - top_)
        << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  }

  void close(std::ostringstream& out) const { out << "</g>\n</svg>\n"; }

  void y_axis(std::ostringstream& out) const {
    for (double t : nice_ticks(y_.lo, y_.hi, spec_.major_ticks)) {
      const std::string y = fixed3(py(t));
      out << "<line class=\"tick\" x1=\"" << fixed3(left_ - 5) << "\" y1=\""
          << y << "\" x2=\"" << fixed3(left_) << "\" y2=\"" << y
          << "\" stroke=\"#000000\"/>\n"
          << "<text class=\"tick-label\" x=\"" << fixed3(left_ - 8)
          << "\" y=\"" << y
          << "\" text-anchor=\"end\" dominant-baseline=\"middle\" "
             "font-family=\"sans-serif\" font-size=\"11\">"
          << label(t) << "</text>\n";
    }
    if (!spec_.y_label.empty()) {
      const std::string cy = fixed3((top_ + bottom_) / 2);
      out << "<text class=\"axis-label\" x=\"16\" y=\"" << cy
          << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << cy
          << ")\" font-family=\"sans-serif\" font-size=\"12\">"
          << escape(spec_.y_label) << "</text>\n";
    }
  }

  // A major tick on the lower (upper=false) or upper axis.
  void x_tick(std::ostringstream& out, double x, const std::string& text,
              bool upper) const {
    const std::string sx = fixed3(px(x));
    const double base = upper ? top_ : bottom_;
    const double tip = upper ? top_ - 5 : bottom_ + 5;
    const double text_y = upper ? top_ - 9 : bottom_ + 17;
    out << "<line class=\"tick\" x1=\"" << sx << "\" y1=\"" << fixed3(base)
        << "\" x2=\"" << sx << "\" y2=\"" << fixed3(tip)
        << "\" stroke=\"#000000\"/>\n"
        << "<text class=\"tick-label\" x=\"" << sx << "\" y=\""
        << fixed3(text_y)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << text << "</text>\n";
  }

  void minor_tick(std::ostringstream& out, double x) const {
    const std::string sx = fixed3(px(x));
    out << "<line class=\"minor-tick\" x1=\"" << sx << "\" y1=\""
        << fixed3(bottom_) << "\" x2=\"" << sx << "\" y2=\""
        << fixed3(bottom_ - 4) << "\" stroke=\"#000000\"/>\n";
  }

  void x_label(std::ostringstream& out, const std::string& text) const {
    if (text.empty()) return;
    out << "<text class=\"axis-label\" x=\"" << fixed3((left_ + right_) / 2)
        << "\" y=\"" << fixed3(bottom_ + 40)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << escape(text) << "</text>\n";
  }

  void polyline(std::ostringstream& out, const char* cls,
                std::span<const Point> points, const char* color) const {
    out << "<polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) out << ' ';
      out << xy(points[i].x, points[i].y);
    }
    out << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
  }

  void markers(std::ostringstream& out, const char* cls,
               std::span<const Point> points, const char* color) const {
    for (const Point& p : points) {
      out << "<circle class=\"" << cls << "\" cx=\"" << fixed3(px(p.x))
          << "\" cy=\"" << fixed3(py(p.y)) << "\" r=\"2.5\" fill=\"" << color
          << "\"/>\n";
    }
  }

  double pixel_height() const { return bottom_ - top_; }
  double y_span() const { return y_.hi - y_.lo; }

 private:
  const PlotSpec& spec_;
  Range x_;
  Range y_;
  double left_ = 0, right_ = 0, top_ = 0, bottom_ = 0;
};

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, std::size_t target) {
  std::vector<double> ticks;
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) return ticks;
  const double raw = (hi - lo) / double(std::max<std::size_t>(target, 2) - 1);
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  const double fraction = raw / magnitude;
  // Round the raw spacing to the nearest of 1, 2, 5 or 10 (Heckbert).
  double step = 10.0 * magnitude;
  if (fraction < 1.5) {
    step = magnitude;
  } else if (fraction < 3.0) {
    step = 2.0 * magnitude;
  } else if (fraction < 7.0) {
    step = 5.0 * magnitude;
  }
  const double first = std::ceil(lo / step - 1e-9);
  const double last = std::floor(hi / step + 1e-9);
  for (double i = first; i <= last; i += 1.0) {
    const double t = i * step;
    ticks.push_back(t == 0.0 ? 0.0 : t);
  }
  return ticks;
}

std::string render_cumulative(const CumulativeCurve& curve,
                              const PlotSpec& spec) {
  const std::size_t n = curve.ordinates.size();
  if (n == 0) throw InvalidInput("cannot plot an empty curve");
  if (spec.zoom && !(spec.zoom->hi > spec.zoom->lo)) {
    throw InvalidInput("zoom range must be nonempty");
  }
  const bool triangle = spec.include_triangle && curve.sigma > 0.0;

  Range x;
  x.add(0.0);
  x.add(1.0);
  Range y;
  y.add(0.0);
  for (double v : curve.ordinates) y.add(v);
  if (triangle) {
    y.add(2.0 * curve.sigma);
    y.add(-2.0 * curve.sigma);
  }
  x.pad();
  y.pad();
  const Frame frame(spec, x, y);

  std::ostringstream out;
  frame.open(out);
  frame.y_axis(out);

  // Major ticks sit at equispaced k; the lower axis reads the score there,
  // the upper the fraction k/n.
  const std::size_t ticks = std::max<std::size_t>(spec.major_ticks, 2);
  std::size_t previous = n;
  for (std::size_t t = 0; t < ticks; ++t) {
    const std::size_t k = static_cast<std::size_t>(
        std::llround(double(t) * double(n - 1) / double(ticks - 1)));
    if (k == previous) continue;
    previous = k;
    const double a = curve.abscissae[k];
    frame.x_tick(out, a, label(curve.scores_at[k]), false);
    frame.x_tick(out, a, label(double(k + 1) / double(n)), true);
  }
  if (curve.weighted) {
    for (int t = 0; t <= 10; ++t) frame.minor_tick(out, t / 10.0);
  }
  frame.x_label(out, spec.x_label);
  if (spec.zoom) {
    out << "<text class=\"zoom\" x=\"" << fixed3(spec.width / 2.0)
        << "\" y=\"38\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">scores in ["
        << label(spec.zoom->lo) << ", " << label(spec.zoom->hi)
        << "]</text>\n";
  }

  out << "<line class=\"zero\" x1=\"" << fixed3(frame.px(0.0)) << "\" y1=\""
      << fixed3(frame.py(0.0)) << "\" x2=\"" << fixed3(frame.px(1.0))
      << "\" y2=\"" << fixed3(frame.py(0.0)) << "\" stroke=\"" << kBandColor
      << "\"/>\n";

  std::vector<Point> points;
  points.reserve(n + 1);
  points.push_back({0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    points.push_back({curve.abscissae[k], curve.ordinates[k]});
  }
  frame.polyline(out, "curve", points, kSubColor);

  if (triangle) {
    // Right-angled at the tip: its horizontal reach in pixels equals half
    // the vertical side.
    const double half_px = 2.0 * curve.sigma / frame.y_span() *
                           frame.pixel_height();
    const double tip_x = frame.px(0.0) + half_px;
    out << "<polygon class=\"triangle\" points=\"" << frame.xy(0.0, 2 * curve.sigma)
        << ' ' << fixed3(tip_x) << ',' << fixed3(frame.py(0.0)) << ' '
        << frame.xy(0.0, -2 * curve.sigma)
        << "\" fill=\"none\" stroke=\"#000000\" data-sigma=\""
        << exact(curve.sigma) << "\"/>\n";
  } else if (spec.include_triangle) {
    out << "<!-- sigma is zero: no triangle -->\n";
  }
  frame.close(out);
  return out.str();
}

std::string render_reliability(const ReliabilityDiagram& diagram,
                               std::span<const ReliabilityDiagram> bands,
                               const PlotSpec& spec) {
  if (diagram.sub_points.empty() && diagram.full_points.empty()) {
    throw InvalidInput("cannot plot an empty reliability diagram");
  }
  Range x;
  Range y;
  auto add = [&](std::span<const Point> points) {
    for (const Point& p : points) {
      x.add(p.x);
      y.add(p.y);
    }
  };
  add(diagram.sub_points);
  add(diagram.full_points);
  for (const ReliabilityDiagram& band : bands) add(band.sub_points);
  if (diagram.diagonal_reference) {
    x.add(0.0);
    x.add(1.0);
    y.add(0.0);
    y.add(1.0);
  }
  x.pad();
  y.pad();
  const Frame frame(spec, x, y);

  std::ostringstream out;
  frame.open(out);
  frame.y_axis(out);
  for (double t : nice_ticks(x.lo, x.hi, spec.major_ticks)) {
    frame.x_tick(out, t, label(t), false);
  }
  frame.x_label(out, spec.x_label);

  for (const ReliabilityDiagram& band : bands) {
    frame.polyline(out, "band", band.sub_points, kBandColor);
  }
  if (diagram.diagonal_reference) {
    const double lo = std::max(x.lo, y.lo);
    const double hi = std::min(x.hi, y.hi);
    out << "<line class=\"diagonal\" x1=\"" << fixed3(frame.px(lo))
        << "\" y1=\"" << fixed3(frame.py(lo)) << "\" x2=\""
        << fixed3(frame.px(hi)) << "\" y2=\"" << fixed3(frame.py(hi))
        << "\" stroke=\"" << kFullColor << "\" stroke-dasharray=\"4 3\"/>\n";
  }
  if (!diagram.full_points.empty()) {
    frame.polyline(out, "full", diagram.full_points, kFullColor);
    frame.markers(out, "full-marker", diagram.full_points, kFullColor);
  }
  if (!diagram.sub_points.empty()) {
    frame.polyline(out, "sub", diagram.sub_points, kSubColor);
    frame.markers(out, "sub-marker", diagram.sub_points, kSubColor);
  }
  frame.close(out);
  return out.str();
}

}  // namespace cumdev
