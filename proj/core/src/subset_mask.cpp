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

#include "matq/subset_mask.hpp"

namespace matq {

SubsetMask SubsetMask::from_value(std::size_t universe_size, std::uint64_t bits) {
  if (universe_size > 64) {
    throw std::invalid_argument("from_value supports at most 64 elements");
  }
  if (universe_size < 64 && (bits >> universe_size) != 0) {
    throw std::invalid_argument("bit pattern has members outside the ground set");
  }
  SubsetMask m(universe_size);
  if (!m.words_.empty()) m.words_[0] = bits;
  return m;
}

std::vector<ElementId> SubsetMask::elements() const {
  std::vector<ElementId> out;
  out.reserve(count());
  for_each([&out](ElementId e) { out.push_back(e); });
  return out;
}

std::uint64_t SubsetMask::to_value() const {
  if (n_ > 64) {
    throw std::invalid_argument("to_value supports at most 64 elements");
  }
  return words_.empty() ? 0 : words_[0];
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](ElementId e) {
    if (!first) out += ',';
    first = false;
    out += 'e';
    out += std::to_string(e + 1);
  });
  out += '}';
  return out;
}

}  // namespace matq
