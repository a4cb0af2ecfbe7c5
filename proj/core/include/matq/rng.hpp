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
#include <random>
#include <stdexcept>

namespace matq {

// Seedable random source with one extra, fully deterministic mode used for
// pinned traces. Raw draws come from std::mt19937_64 (whose output sequence
// the standard specifies exactly), and the derived draws below avoid
// std::uniform_*_distribution, so identical seeds give identical streams on
// every platform.
class Rng {
 public:
  static Rng seeded(std::uint64_t seed) { return Rng(false, seed); }

  // Degenerate source: pick() always chooses ordinal 0 (the lowest-index
  // candidate) and uniform() returns 0.5 so probability thresholds resolve
  // to their likelier branch. Intended for hand-checkable traces.
  static Rng lowest_index() { return Rng(true, 0); }

  bool deterministic() const { return degenerate_; }

  std::uint64_t next() { return degenerate_ ? 0 : engine_(); }

  // Uniform draw from [0, bound); bound must be positive. Rejection sampling
  // keeps the draw exactly uniform.
  std::uint64_t pick(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("pick: bound must be positive");
    if (degenerate_ || bound == 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return draw % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    if (degenerate_) return 0.5;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Stateless per-stream seed derivation (splitmix64 finalizer), so parallel
  // or per-trial substreams are decorrelated but reproducible.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + stream * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  Rng(bool degenerate, std::uint64_t seed) : degenerate_(degenerate), engine_(seed) {}

  bool degenerate_;
  std::mt19937_64 engine_;
};

}  // namespace matq
