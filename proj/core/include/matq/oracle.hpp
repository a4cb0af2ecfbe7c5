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

#include <optional>
#include <vector>

#include "matq/subset_mask.hpp"

namespace matq {

// Independence-oracle interface: a matroid is exposed to algorithms only
// through membership tests "is S independent?". Everything downstream
// (rank, bases, connectivity deciders) is built from this single query.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  // Number of elements in the ground set.
  virtual std::size_t ground_size() const = 0;

  // Whether `subset` is independent. `subset` must live on this oracle's
  // ground set.
  virtual bool is_independent(const SubsetMask& subset) const = 0;

  // Families that know their base list in closed form may expose it so
  // callers can avoid exponential enumeration. The list is the family's
  // canonical order. Returns nullopt when no closed form is available;
  // this default is what generic oracles keep.
  virtual std::optional<std::vector<SubsetMask>> closed_form_bases() const { return std::nullopt; }

 protected:
  void check_subset(const SubsetMask& subset) const {
    if (subset.universe_size() != ground_size()) {
      throw std::invalid_argument("query subset universe does not match oracle ground set");
    }
  }
};

}  // namespace matq
