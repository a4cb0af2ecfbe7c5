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

#include <cstdint>
#include <optional>

#include "matq/rng.hpp"

namespace matq {

enum class GroverMode {
  kIdealized,  // searches never err
  kSampled,    // emptiness declarations may be false negatives
};

// Cost model for an oracle search over an abstract space of N items with k
// marked: a successful search costs ceil(c_success * sqrt(N/k)) modeled
// queries, and declaring the space empty costs repetitions * ceil(c_fail *
// sqrt(N)). The scales are positive integers so every charge stays an exact
// integer. In sampled mode a search over a nonempty solution set is wrongly
// declared empty with probability failure_prob^repetitions.
struct GroverCostModel {
  std::uint32_t c_success = 1;
  std::uint32_t c_fail = 1;
  std::uint32_t repetitions = 1;
  GroverMode mode = GroverMode::kIdealized;
  double failure_prob = 1.0 / 3.0;

  // Throws std::invalid_argument on nonpositive scales or repetitions, or a
  // failure probability outside [0, 1).
  void validate() const;

  // ceil(c_success * sqrt(space/solutions)); requires 1 <= solutions <= space.
  std::uint64_t success_cost(std::uint64_t space, std::uint64_t solutions) const;

  // repetitions * ceil(c_fail * sqrt(space)).
  std::uint64_t fail_cost(std::uint64_t space) const;
};

struct GroverResult {
  // Ordinal of the found solution in [0, solution_count), or nullopt when the
  // space was declared empty.
  std::optional<std::uint64_t> found;
  std::uint64_t cost = 0;
};

// Cost-model-level search: no states are simulated, only the outcome and its
// charge. With solutions present the returned ordinal is uniform under a
// seeded rng and always 0 under the deterministic rng. Requires space_size
// >= 1 and solution_count <= space_size.
GroverResult grover_find(std::uint64_t space_size, std::uint64_t solution_count,
                         const GroverCostModel& model, Rng& rng);

}  // namespace matq
