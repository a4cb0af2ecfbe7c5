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

#include "matq/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "matq/chi.hpp"
#include "matq/families.hpp"

namespace matq {

MuSample mu_sample(std::size_t n, std::size_t r, Rng& rng) {
  const auto bases = MinimalMatroid::canonical_bases(n, r);  // validates 0 < r < n
  const std::size_t index = rng.pick(bases.size());
  const bool keep_intact = rng.pick(2) == 0;

  MuSample sample;
  sample.ground_size = n;
  sample.rank = r;
  sample.connected = keep_intact;
  if (keep_intact) {
    sample.instance = std::make_shared<MinimalMatroid>(n, r);
  } else {
    sample.removed_index = index;
    sample.instance = std::make_shared<RemovedBaseMatroid>(n, r, bases[index]);
  }
  return sample;
}

bool probe_distinguisher(const MuSample& sample, std::size_t probe_count) {
  const auto bases = MinimalMatroid::canonical_bases(sample.ground_size, sample.rank);
  if (probe_count > bases.size()) {
    throw std::invalid_argument("probe_distinguisher: " + std::to_string(probe_count) +
                                " probes exceed the " + std::to_string(bases.size()) +
                                " canonical bases");
  }
  bool saw_dependent = false;
  for (std::size_t i = 0; i < probe_count && !saw_dependent; ++i) {
    saw_dependent = !sample.instance->is_independent(bases[i]);
  }
  const bool declared_disconnected = saw_dependent;
  return declared_disconnected == !sample.connected;
}

AdversaryParameters adversary_parameters(std::size_t n, std::size_t r) {
  if (n > kAdversaryMaxN) {
    throw std::invalid_argument("adversary_parameters supports at most " +
                                std::to_string(kAdversaryMaxN) + " elements, got " +
                                std::to_string(n));
  }
  const auto bases = MinimalMatroid::canonical_bases(n, r);
  const ChiString left = chi_encode(MinimalMatroid(n, r));
  std::vector<ChiString> right;
  right.reserve(bases.size());
  for (const auto& b : bases) right.push_back(chi_encode(RemovedBaseMatroid(n, r, b)));

  // The relation is complete: the single left string pairs with every right
  // string, so the degree minima are immediate.
  AdversaryParameters params;
  params.m = right.size();
  params.m_prime = 1;

  // Per-bit counts over differing positions, scanned explicitly.
  const std::size_t width = left.bits.size();
  std::uint64_t l = 0, l_prime = 0;
  for (std::size_t bit = 0; bit < width; ++bit) {
    std::uint64_t differing = 0;
    for (const auto& y : right) {
      if (y.bits[bit] != left.bits[bit]) ++differing;
    }
    l = std::max(l, differing);                          // one x, varying y
    if (differing > 0) l_prime = std::max<std::uint64_t>(l_prime, 1);  // |X| = 1
  }
  params.l = l;
  params.l_prime = l_prime;
  params.bound = std::sqrt(static_cast<double>(params.m) * static_cast<double>(params.m_prime) /
                           (static_cast<double>(params.l) * static_cast<double>(params.l_prime)));
  return params;
}

}  // namespace matq
