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

#include "matq/chi.hpp"

#include <stdexcept>

#include "matq/subset_mask.hpp"

namespace matq {

std::string ChiString::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (std::uint8_t b : bits) out += b ? '1' : '0';
  return out;
}

ChiString chi_encode(const MatroidOracle& m) {
  const std::size_t n = m.ground_size();
  if (n > kChiMaxN) {
    throw std::invalid_argument("chi_encode supports at most " +
                                std::to_string(kChiMaxN) + " elements, got " +
                                std::to_string(n));
  }
  ChiString chi;
  chi.ground_size = n;
  chi.bits.resize(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < chi.bits.size(); ++v) {
    chi.bits[v] = m.is_independent(SubsetMask::from_value(n, v)) ? 1 : 0;
  }
  return chi;
}

std::size_t hamming_distance(const ChiString& a, const ChiString& b) {
  if (a.bits.size() != b.bits.size()) {
    throw std::invalid_argument("hamming_distance: strings differ in length");
  }
  std::size_t distance = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    if ((a.bits[i] != 0) != (b.bits[i] != 0)) ++distance;
  }
  return distance;
}

bool is_downward_closed(const ChiString& chi) {
  for (std::uint64_t v = 0; v < chi.bits.size(); ++v) {
    if (!chi.bits[v]) continue;
    for (std::uint64_t bits = v; bits != 0; bits &= bits - 1) {
      const std::uint64_t low = bits & (~bits + 1);
      if (!chi.bits[v & ~low]) return false;
    }
  }
  return true;
}

}  // namespace matq
