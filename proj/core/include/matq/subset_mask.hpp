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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace matq {

// Elements of a ground set are identified by 0-based indices. Human-facing
// documents (instance files, CSV, reports) use 1-based labels e1..en; the
// conversion happens at the I/O boundary only.
using ElementId = std::uint32_t;

// A subset of a fixed ground set {0, ..., n-1}, stored as packed bits.
//
// All binary operations require both operands to share the same universe
// size; mixing universes throws std::invalid_argument. Bits at positions
// >= n are never set (operations that could produce them trim the tail).
class SubsetMask {
 public:
  SubsetMask() = default;

  explicit SubsetMask(std::size_t universe_size)
      : n_(universe_size), words_(word_count(universe_size), 0) {}

  static SubsetMask full(std::size_t universe_size) {
    SubsetMask m(universe_size);
    for (auto& w : m.words_) w = ~std::uint64_t{0};
    m.trim();
    return m;
  }

  static SubsetMask of(std::size_t universe_size, std::initializer_list<ElementId> elements) {
    SubsetMask m(universe_size);
    for (ElementId e : elements) m.set(e);
    return m;
  }

  // Interprets bit i of `bits` as membership of element i. Requires n <= 64.
  static SubsetMask from_value(std::size_t universe_size, std::uint64_t bits);

  std::size_t universe_size() const { return n_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool test(ElementId e) const {
    check_element(e);
    return (words_[e >> 6] >> (e & 63)) & 1;
  }

  SubsetMask& set(ElementId e) {
    check_element(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
    return *this;
  }

  SubsetMask& reset(ElementId e) {
    check_element(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
    return *this;
  }

  SubsetMask with(ElementId e) const {
    SubsetMask m(*this);
    m.set(e);
    return m;
  }

  SubsetMask without(ElementId e) const {
    SubsetMask m(*this);
    m.reset(e);
    return m;
  }

  bool is_subset_of(const SubsetMask& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const SubsetMask& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  SubsetMask complement() const {
    SubsetMask m(*this);
    for (auto& w : m.words_) w = ~w;
    m.trim();
    return m;
  }

  // Index of the smallest element present, or -1 if the set is empty.
  int lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
      }
    }
    return -1;
  }

  // Calls f(ElementId) for every member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<ElementId>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<ElementId> elements() const;

  // Packs the set into a word. Requires a universe of at most 64 elements.
  std::uint64_t to_value() const;

  // Renders as "{e1,e3}" using 1-based element labels; "{}" when empty.
  std::string to_string() const;

  SubsetMask& operator|=(const SubsetMask& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  SubsetMask& operator&=(const SubsetMask& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  SubsetMask& operator^=(const SubsetMask& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  // Set difference.
  SubsetMask& operator-=(const SubsetMask& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator^(SubsetMask a, const SubsetMask& b) { return a ^= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const SubsetMask& a, const SubsetMask& b) { return !(a == b); }

  // Lexicographic-by-value order; usable as a container key within one universe.
  friend bool operator<(const SubsetMask& a, const SubsetMask& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  void check_element(ElementId e) const {
    if (e >= n_) {
      throw std::invalid_argument("element index " + std::to_string(e) +
                                  " outside ground set of size " + std::to_string(n_));
    }
  }

  void check_same_universe(const SubsetMask& other) const {
    if (n_ != other.n_) {
      throw std::invalid_argument("subset operation mixes ground sets of sizes " +
                                  std::to_string(n_) + " and " + std::to_string(other.n_));
    }
  }

  // Clears bits at positions >= n_ in the last word.
  void trim() {
    const std::size_t used = n_ & 63;
    if (!words_.empty() && used != 0) {
      words_.back() &= (std::uint64_t{1} << used) - 1;
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace matq
