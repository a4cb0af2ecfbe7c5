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

#include "matq/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace matq {

double fit_scaling_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw std::invalid_argument("fit_scaling_exponent requires at least 3 points");
  }
  double sum_x = 0.0, sum_y = 0.0;
  for (const auto& [n, count] : points) {
    if (!(n > 0.0) || !(count > 0.0)) {
      throw std::invalid_argument("fit_scaling_exponent requires positive coordinates");
    }
    sum_x += std::log(n);
    sum_y += std::log(count);
  }
  const double mean_x = sum_x / static_cast<double>(points.size());
  const double mean_y = sum_y / static_cast<double>(points.size());
  double covariance = 0.0, variance = 0.0;
  for (const auto& [n, count] : points) {
    const double dx = std::log(n) - mean_x;
    covariance += dx * (std::log(count) - mean_y);
    variance += dx * dx;
  }
  if (variance == 0.0) {
    throw std::invalid_argument("fit_scaling_exponent requires at least two distinct n");
  }
  return covariance / variance;
}

}  // namespace matq
