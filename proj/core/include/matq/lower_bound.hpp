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
#include <memory>
#include <optional>

#include "matq/oracle.hpp"
#include "matq/rng.hpp"

namespace matq {

// Ceiling for the adversary-parameter computation, which materializes full
// independence strings.
inline constexpr std::size_t kAdversaryMaxN = 10;

// One draw from the hard input distribution: a fair coin between the minimal
// matroid and the same matroid with one uniformly chosen base deleted.
struct MuSample {
  std::size_t ground_size = 0;
  std::size_t rank = 0;
  bool connected = false;  // true: the intact minimal matroid was drawn
  // Canonical index of the deleted base; set only on disconnected draws.
  std::optional<std::size_t> removed_index;
  std::shared_ptr<const MatroidOracle> instance;
};

// Draws base index i uniformly from the r(n-r)+1 canonical bases, then a fair
// coin for intact-vs-deleted. The index is drawn first even when the coin
// picks the intact matroid, so the rng stream advances identically on both
// branches. Requires 0 < r < n.
MuSample mu_sample(std::size_t n, std::size_t r, Rng& rng);

// The natural probe strategy against mu: test the first `probe_count` bases
// in canonical order for independence and declare "disconnected" exactly
// when some probe answers dependent. Returns whether the declaration matches
// the sample's label. With N bases, the success probability is
// 1/2 + probe_count/(2N). Requires probe_count <= N.
bool probe_distinguisher(const MuSample& sample, std::size_t probe_count);

// Adversary-method parameters for the relation pairing the minimal matroid's
// independence string against every single-base-deletion string:
//   m  = fewest partners of any left string, m' = fewest of any right string,
//   l  = most right strings differing from one left string at one fixed bit,
//   l' = the symmetric count,
// and the query bound sqrt(m*m' / (l*l')). The single-bit structure of base
// deletion forces m' = l = l' = 1, so the bound is sqrt(r(n-r)+1).
struct AdversaryParameters {
  std::uint64_t m = 0;
  std::uint64_t m_prime = 0;
  std::uint64_t l = 0;
  std::uint64_t l_prime = 0;
  double bound = 0.0;
};

// Computed honestly by scanning all bit positions of the explicit strings;
// n is capped at kAdversaryMaxN. Requires 0 < r < n.
AdversaryParameters adversary_parameters(std::size_t n, std::size_t r);

}  // namespace matq
