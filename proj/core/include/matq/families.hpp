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
#include <vector>

#include "matq/oracle.hpp"
#include "matq/subset_mask.hpp"

namespace matq {

// Connected matroid with the fewest bases possible for its size and rank:
// r(n-r) + 1 of them. The first r elements form the spanning prefix E0; the
// bases are E0 itself and every single swap E0 - e_i + e_j with e_i inside
// and e_j outside the prefix. A set is independent exactly when it has at
// most r elements and at most one of them lies outside the prefix.
// Requires 1 <= r < n.
class MinimalMatroid final : public MatroidOracle {
 public:
  MinimalMatroid(std::size_t ground_size, std::size_t rank);

  std::size_t ground_size() const override { return n_; }
  std::size_t rank() const { return r_; }
  const SubsetMask& spanning_prefix() const { return prefix_; }

  bool is_independent(const SubsetMask& subset) const override;
  std::optional<std::vector<SubsetMask>> closed_form_bases() const override;

  // Base list in canonical order: E0 first, then the swaps E0 - e_i + e_j
  // sorted by removed element, then by added element.
  static std::vector<SubsetMask> canonical_bases(std::size_t ground_size, std::size_t rank);

 private:
  std::size_t n_;
  std::size_t r_;
  SubsetMask prefix_;
};

// The minimal matroid with one base deleted from its base list: exactly that
// one set flips to dependent, every smaller independent set survives (each is
// contained in at least two bases). Deleting the prefix base E0 -- or any
// base when r = 1 or n - r = 1 -- yields a genuine disconnected matroid of
// the same rank. Deleting a swap base with 2 <= r <= n-2 yields an
// independence oracle that is connected under the rank definition and is not
// a matroid: augmenting a subset of the deleted base from an intact base can
// fail, because both completions (the deleted base and a two-swap set) are
// dependent. The base to remove must be a base of the parent.
class RemovedBaseMatroid final : public MatroidOracle {
 public:
  RemovedBaseMatroid(std::size_t ground_size, std::size_t rank, SubsetMask removed_base);

  std::size_t ground_size() const override { return parent_.ground_size(); }
  std::size_t rank() const { return parent_.rank(); }
  const MinimalMatroid& parent() const { return parent_; }
  const SubsetMask& removed_base() const { return removed_; }

  bool is_independent(const SubsetMask& subset) const override;
  std::optional<std::vector<SubsetMask>> closed_form_bases() const override;

 private:
  MinimalMatroid parent_;
  SubsetMask removed_;
};

// Independence is purely by size: at most r elements. Requires 0 <= r <= n.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(std::size_t ground_size, std::size_t rank);

  std::size_t ground_size() const override { return n_; }
  std::size_t rank() const { return r_; }

  bool is_independent(const SubsetMask& subset) const override;
  // All r-subsets in ascending packed order; nullopt once the ground set is
  // too large for the list to be worth materializing.
  std::optional<std::vector<SubsetMask>> closed_form_bases() const override;

 private:
  std::size_t n_;
  std::size_t r_;
};

// The cycle matroid of a multigraph: ground set = edges, independent sets =
// forests. Self-loops become loop elements, parallel edges become parallel
// matroid elements.
class GraphicMatroid final : public MatroidOracle {
 public:
  struct Edge {
    std::uint32_t tail = 0;
    std::uint32_t head = 0;
  };

  GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t ground_size() const override { return edges_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_independent(const SubsetMask& subset) const override;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

// A matroid given by an explicit base list. The constructor verifies the
// base-exchange axiom (quadratic in the list size -- intended for small,
// hand-written instances) and rejects invalid lists.
class ExplicitBasesMatroid final : public MatroidOracle {
 public:
  ExplicitBasesMatroid(std::size_t ground_size, std::vector<SubsetMask> bases);

  std::size_t ground_size() const override { return n_; }
  std::size_t rank() const { return bases_.front().count(); }

  bool is_independent(const SubsetMask& subset) const override;
  std::optional<std::vector<SubsetMask>> closed_form_bases() const override { return bases_; }

 private:
  std::size_t n_;
  std::vector<SubsetMask> bases_;
};

}  // namespace matq
