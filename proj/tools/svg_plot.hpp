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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace matq::tools {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (n, count), both positive
};

// Renders a static log-log scatter-and-line plot of count versus n.
// Returns the SVG document text.
std::string render_loglog_svg(const std::vector<PlotSeries>& series,
                              const std::string& title);

}  // namespace matq::tools
