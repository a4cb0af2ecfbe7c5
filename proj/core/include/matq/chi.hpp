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
#include <string>
#include <vector>

#include "matq/oracle.hpp"

namespace matq {

// Ceiling for materializing a full 2^n-bit independence string.
inline constexpr std::size_t kChiMaxN = 14;

// The independence bit string of a matroid: one bit per subset, indexed by
// the packed subset value (element i present iff bit i of the index is set);
// 1 means independent. Two matroids on the same ground set are equal iff
// their strings are.
struct ChiString {
  std::size_t ground_size = 0;
  std::vector<std::uint8_t> bits;  // length 2^ground_size

  bool bit(std::uint64_t subset_value) const { return bits[subset_value] != 0; }

  // Bits in ascending index order, e.g. "1110" for the rank-1 uniform
  // matroid on two elements.
  std::string to_string() const;
};

// Evaluates all 2^n subsets in index order; n is capped at kChiMaxN.
ChiString chi_encode(const MatroidOracle& m);

// Number of differing bit positions; the strings must have equal length.
std::size_t hamming_distance(const ChiString& a, const ChiString& b);

// True when every subset marked independent has all its one-element-smaller
// subsets marked independent too; a violation indicates a broken oracle.
bool is_downward_closed(const ChiString& chi);

}  // namespace matq
