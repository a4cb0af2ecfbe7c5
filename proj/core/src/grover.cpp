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

#include "matq/grover.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace matq {
namespace {

// Smallest t >= 0 with t^2 * den >= c^2 * num, i.e. ceil(c * sqrt(num/den)),
// computed exactly: a double estimate is corrected by 128-bit comparisons.
std::uint64_t ceil_scaled_sqrt(std::uint64_t c, std::uint64_t num, std::uint64_t den) {
  if (num == 0 || c == 0) return 0;
  const unsigned __int128 target =
      static_cast<unsigned __int128>(c) * c * static_cast<unsigned __int128>(num);
  auto reaches = [&](std::uint64_t t) {
    return static_cast<unsigned __int128>(t) * t * static_cast<unsigned __int128>(den) >=
           target;
  };
  const double estimate =
      static_cast<double>(c) *
      std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  std::uint64_t t = estimate < 1.0 ? 1 : static_cast<std::uint64_t>(std::llround(estimate));
  while (!reaches(t)) ++t;
  while (t > 0 && reaches(t - 1)) --t;
  return t;
}

}  // namespace

void GroverCostModel::validate() const {
  if (c_success == 0 || c_fail == 0) {
    throw std::invalid_argument("search cost model: scale constants must be positive");
  }
  if (repetitions == 0) {
    throw std::invalid_argument("search cost model: repetitions must be positive");
  }
  if (!(failure_prob >= 0.0 && failure_prob < 1.0)) {
    throw std::invalid_argument("search cost model: failure_prob must lie in [0, 1)");
  }
}

std::uint64_t GroverCostModel::success_cost(std::uint64_t space,
                                            std::uint64_t solutions) const {
  if (solutions == 0 || solutions > space) {
    throw std::invalid_argument("success_cost requires 1 <= solutions <= space");
  }
  return ceil_scaled_sqrt(c_success, space, solutions);
}

std::uint64_t GroverCostModel::fail_cost(std::uint64_t space) const {
  return repetitions * ceil_scaled_sqrt(c_fail, space, 1);
}

GroverResult grover_find(std::uint64_t space_size, std::uint64_t solution_count,
                         const GroverCostModel& model, Rng& rng) {
  model.validate();
  if (space_size == 0) {
    throw std::invalid_argument("grover_find: search space must be nonempty");
  }
  if (solution_count > space_size) {
    throw std::invalid_argument("grover_find: " + std::to_string(solution_count) +
                                " solutions exceed space of " + std::to_string(space_size));
  }
  if (solution_count == 0) {
    return GroverResult{std::nullopt, model.fail_cost(space_size)};
  }
  if (model.mode == GroverMode::kSampled) {
    const double miss_prob =
        std::pow(model.failure_prob, static_cast<double>(model.repetitions));
    if (rng.uniform() < miss_prob) {
      return GroverResult{std::nullopt, model.fail_cost(space_size)};
    }
  }
  return GroverResult{rng.pick(solution_count), model.success_cost(space_size, solution_count)};
}

}  // namespace matq
