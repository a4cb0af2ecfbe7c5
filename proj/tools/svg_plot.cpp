// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace matq::tools {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << v;
  return out.str();
}

}  // namespace

std::string render_loglog_svg(const std::vector<PlotSeries>& series,
                              const std::string& title) {
  double lo_x = 0.0, hi_x = 1.0, lo_y = 0.0, hi_y = 1.0;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      const double lx = std::log10(x), ly = std::log10(y);
      if (first) {
        lo_x = hi_x = lx;
        lo_y = hi_y = ly;
        first = false;
      } else {
        lo_x = std::min(lo_x, lx);
        hi_x = std::max(hi_x, lx);
        lo_y = std::min(lo_y, ly);
        hi_y = std::max(hi_y, ly);
      }
    }
  }
  if (hi_x - lo_x < 1e-9) hi_x = lo_x + 1.0;
  if (hi_y - lo_y < 1e-9) hi_y = lo_y + 1.0;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto px = [&](double lx) { return kMarginLeft + (lx - lo_x) / (hi_x - lo_x) * plot_w; };
  const auto py = [&](double ly) { return kHeight - kMarginBottom - (ly - lo_y) / (hi_y - lo_y) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

  // Frame and decade grid lines.
  svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int d = static_cast<int>(std::ceil(lo_x)); d <= static_cast<int>(std::floor(hi_x)); ++d) {
    const double x = px(d);
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << kMarginTop << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << kHeight - kMarginBottom << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << kHeight - kMarginBottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
        << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(lo_y)); d <= static_cast<int>(std::floor(hi_y)); ++d) {
    const double y = py(d);
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << fmt(y) << "\" x2=\""
        << kWidth - kMarginRight << "\" y2=\"" << fmt(y) << "\" stroke=\"#ddd\"/>\n";
    svg << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << d
        << "</text>\n";
  }
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">n</text>\n";
  svg << "<text x=\"16\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
      << "transform=\"rotate(-90 16 " << kHeight / 2 << ")\">queries</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kColors[s % (sizeof(kColors) / sizeof(kColors[0]))];
    auto points = series[s].points;
    std::sort(points.begin(), points.end());
    std::ostringstream path;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double x = px(std::log10(points[i].first));
      const double y = py(std::log10(points[i].second));
      path << (i == 0 ? 'M' : 'L') << fmt(x) << ' ' << fmt(y) << ' ';
      svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\""
          << color << "\"/>\n";
    }
    if (points.size() > 1) {
      svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\"/>\n";
    }
    svg << "<text x=\"" << kMarginLeft + 10 << "\" y=\"" << kMarginTop + 16 + 16 * s
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
        << series[s].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace matq::tools
