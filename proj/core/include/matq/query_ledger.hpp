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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matq/oracle.hpp"

namespace matq {

// Canonical phase labels used by the deciders. Arbitrary labels are allowed;
// these exist so tests and CSV consumers agree on spelling.
namespace phases {
inline constexpr std::string_view kAdhoc = "adhoc";
inline constexpr std::string_view kFindBase = "find_base";
inline constexpr std::string_view kMatrixBuild = "matrix_build";
inline constexpr std::string_view kGroverSuccess = "grover_success";
inline constexpr std::string_view kGroverFail = "grover_fail";
inline constexpr std::string_view kWitnessVerify = "witness_verify";
}  // namespace phases

struct PhaseCount {
  std::string label;
  std::uint64_t classical = 0;        // independence-oracle calls
  std::uint64_t quantum_charged = 0;  // modeled quantum query cost
};

// Labeled two-column tally: classical oracle calls and modeled quantum
// charges. Classical ticks accumulate into the phase most recently opened
// with begin_phase (before any begin_phase they land in "adhoc"); quantum
// charges always name their phase explicitly. Reopening a label resumes its
// existing tally, and phases are reported in order of first appearance.
class QueryLedger {
 public:
  void begin_phase(std::string_view label) { current_ = index_of(label); }

  // One classical oracle call (or `amount` of them) in the current phase.
  void record(std::uint64_t amount = 1) {
    if (current_ == kNone) current_ = index_of(phases::kAdhoc);
    phases_[current_].classical += amount;
  }

  void record_in(std::string_view label, std::uint64_t amount) {
    phases_[index_of(label)].classical += amount;
  }

  // Adds a modeled quantum cost under the named phase. Costs are integers by
  // design (the cost model rounds with ceilings) so totals stay exact.
  void charge_quantum(std::int64_t amount, std::string_view label) {
    if (amount < 0) {
      throw std::invalid_argument("charge_quantum: negative amount " +
                                  std::to_string(amount));
    }
    phases_[index_of(label)].quantum_charged += static_cast<std::uint64_t>(amount);
  }

  std::uint64_t classical_total() const {
    std::uint64_t sum = 0;
    for (const auto& p : phases_) sum += p.classical;
    return sum;
  }

  std::uint64_t quantum_total() const {
    std::uint64_t sum = 0;
    for (const auto& p : phases_) sum += p.quantum_charged;
    return sum;
  }

  // Per-label tallies; zero if the phase never appeared.
  std::uint64_t phase_classical(std::string_view label) const {
    for (const auto& p : phases_) {
      if (p.label == label) return p.classical;
    }
    return 0;
  }

  std::uint64_t phase_quantum(std::string_view label) const {
    for (const auto& p : phases_) {
      if (p.label == label) return p.quantum_charged;
    }
    return 0;
  }

  const std::vector<PhaseCount>& phases() const { return phases_; }

  std::string_view current_phase() const {
    return current_ == kNone ? phases::kAdhoc : std::string_view(phases_[current_].label);
  }

  // Adds every phase of `other` into this ledger (current phase unchanged).
  void absorb(const QueryLedger& other) {
    for (const auto& p : other.phases_) {
      auto& mine = phases_[index_of(p.label)];
      mine.classical += p.classical;
      mine.quantum_charged += p.quantum_charged;
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t index_of(std::string_view label) {
    for (std::size_t i = 0; i < phases_.size(); ++i) {
      if (phases_[i].label == label) return i;
    }
    phases_.push_back(PhaseCount{std::string(label), 0, 0});
    return phases_.size() - 1;
  }

  std::vector<PhaseCount> phases_;
  std::size_t current_ = kNone;
};

// Pass-through oracle that records every independence query in a ledger.
// Deciders wrap their input in one of these so each run starts from a clean
// count. Non-owning: the wrapped oracle must outlive the wrapper.
class CountingOracle final : public MatroidOracle {
 public:
  explicit CountingOracle(const MatroidOracle& inner) : inner_(&inner) {}

  std::size_t ground_size() const override { return inner_->ground_size(); }

  bool is_independent(const SubsetMask& subset) const override {
    ledger_.record();
    return inner_->is_independent(subset);
  }

  // Metadata, not an independence query: forwards without charging.
  std::optional<std::vector<SubsetMask>> closed_form_bases() const override {
    return inner_->closed_form_bases();
  }

  QueryLedger& ledger() const { return ledger_; }
  const MatroidOracle& inner() const { return *inner_; }

 private:
  const MatroidOracle* inner_;
  mutable QueryLedger ledger_;
};

// Convenience spelling for wrapping an oracle with a fresh ledger.
inline CountingOracle wrap(const MatroidOracle& m) { return CountingOracle(m); }

}  // namespace matq
