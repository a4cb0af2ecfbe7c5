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

#include "matq/families.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "matq/matroid_ops.hpp"
#include "matq/union_find.hpp"

namespace matq {

MinimalMatroid::MinimalMatroid(std::size_t ground_size, std::size_t rank)
    : n_(ground_size), r_(rank), prefix_(ground_size) {
  if (r_ < 1 || r_ >= n_) {
    throw std::invalid_argument("minimal family requires 1 <= r < n, got r=" +
                                std::to_string(rank) + ", n=" + std::to_string(ground_size));
  }
  for (ElementId e = 0; e < r_; ++e) prefix_.set(e);
}

bool MinimalMatroid::is_independent(const SubsetMask& subset) const {
  check_subset(subset);
  return subset.count() <= r_ && (subset - prefix_).count() <= 1;
}

std::optional<std::vector<SubsetMask>> MinimalMatroid::closed_form_bases() const {
  return canonical_bases(n_, r_);
}

std::vector<SubsetMask> MinimalMatroid::canonical_bases(std::size_t ground_size,
                                                        std::size_t rank) {
  MinimalMatroid probe(ground_size, rank);  // validates the parameters
  std::vector<SubsetMask> bases;
  bases.reserve(rank * (ground_size - rank) + 1);
  bases.push_back(probe.spanning_prefix());
  for (ElementId removed = 0; removed < rank; ++removed) {
    for (ElementId added = static_cast<ElementId>(rank); added < ground_size; ++added) {
      bases.push_back(probe.spanning_prefix().without(removed).with(added));
    }
  }
  return bases;
}

RemovedBaseMatroid::RemovedBaseMatroid(std::size_t ground_size, std::size_t rank,
                                       SubsetMask removed_base)
    : parent_(ground_size, rank), removed_(std::move(removed_base)) {
  if (removed_.universe_size() != ground_size) {
    throw std::invalid_argument("removed base lives on the wrong ground set");
  }
  if (removed_.count() != rank || !parent_.is_independent(removed_)) {
    throw std::invalid_argument("removed set " + removed_.to_string() +
                                " is not a base of the parent family");
  }
}

bool RemovedBaseMatroid::is_independent(const SubsetMask& subset) const {
  // Deleting one base from the parent's list only retracts that single
  // maximal set; every independent set of smaller size survives because it
  // sits inside at least two parent bases.
  return parent_.is_independent(subset) && subset != removed_;
}

std::optional<std::vector<SubsetMask>> RemovedBaseMatroid::closed_form_bases() const {
  auto bases = MinimalMatroid::canonical_bases(ground_size(), rank());
  std::vector<SubsetMask> kept;
  kept.reserve(bases.size() - 1);
  for (auto& b : bases) {
    if (b != removed_) kept.push_back(std::move(b));
  }
  return kept;
}

UniformMatroid::UniformMatroid(std::size_t ground_size, std::size_t rank)
    : n_(ground_size), r_(rank) {
  if (r_ > n_) {
    throw std::invalid_argument("uniform family requires r <= n, got r=" +
                                std::to_string(rank) + ", n=" + std::to_string(ground_size));
  }
}

bool UniformMatroid::is_independent(const SubsetMask& subset) const {
  check_subset(subset);
  return subset.count() <= r_;
}

std::optional<std::vector<SubsetMask>> UniformMatroid::closed_form_bases() const {
  if (n_ > kSubsetSweepMaxN) return std::nullopt;
  std::vector<SubsetMask> bases;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n_); ++v) {
    const SubsetMask s = SubsetMask::from_value(n_, v);
    if (s.count() == r_) bases.push_back(s);
  }
  return bases;
}

GraphicMatroid::GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      throw std::invalid_argument("edge endpoint outside vertex range");
    }
  }
}

bool GraphicMatroid::is_independent(const SubsetMask& subset) const {
  check_subset(subset);
  UnionFind forest(vertex_count_);
  bool acyclic = true;
  subset.for_each([&](ElementId e) {
    if (acyclic && !forest.unite(edges_[e].tail, edges_[e].head)) acyclic = false;
  });
  return acyclic;
}

ExplicitBasesMatroid::ExplicitBasesMatroid(std::size_t ground_size,
                                           std::vector<SubsetMask> bases)
    : n_(ground_size), bases_(std::move(bases)) {
  for (const auto& b : bases_) {
    if (b.universe_size() != n_) {
      throw std::invalid_argument("base lives on the wrong ground set");
    }
  }
  if (auto violation = verify_base_exchange(bases_)) {
    throw std::invalid_argument("explicit base list is not a matroid: " + *violation);
  }
}

bool ExplicitBasesMatroid::is_independent(const SubsetMask& subset) const {
  check_subset(subset);
  if (subset.count() > rank()) return false;
  for (const auto& b : bases_) {
    if (subset.is_subset_of(b)) return true;
  }
  return false;
}

}  // namespace matq
