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

#include "matq/grover.hpp"
#include "matq/matroid_ops.hpp"
#include "matq/query_ledger.hpp"
#include "matq/rng.hpp"
#include "matq/subset_mask.hpp"

namespace matq {

// Adjacency probe for the bipartite graph induced by a base: element j (in
// the base) neighbors element k (outside it) exactly when base + k - j is
// independent. The probe is total: the defined orientation costs one
// ledgered query, every other orientation answers 0 for free.
class AdjacencyOracle {
 public:
  AdjacencyOracle(const CountingOracle& matroid, SubsetMask base);

  // 1 iff j lies in the base, k outside it, and base + k - j is independent.
  bool adjacency(ElementId j, ElementId k) const;

  // Orientation-free adjacency between two elements on opposite sides.
  bool adjacent(ElementId u, ElementId v) const { return adjacency(u, v) || adjacency(v, u); }

  const SubsetMask& base() const { return base_; }

 private:
  const CountingOracle* matroid_;
  SubsetMask base_;
  mutable SubsetMask probe_;  // scratch, always restored to base_ after use
};

// Run counters for the quantum decider, beyond what the ledger carries.
struct QuantumDfsStats {
  std::uint64_t searches = 0;
  std::uint64_t successes = 0;
  // Failed searches equal the number of stack pops; the count includes
  // searches against an empty opposite side, which charge zero.
  std::uint64_t failures = 0;
  std::uint64_t success_charge = 0;
  std::uint64_t fail_charge = 0;
  // Adjacency evaluations performed to simulate search outcomes; these model
  // the inside of the search black box and are charged via the cost model,
  // not as classical queries.
  std::uint64_t simulation_probes = 0;
  std::size_t discovered = 0;
};

// Quantum-walk-style connectivity decider, simulated at the cost-model
// level: a greedy base splits the elements into two sides, and a stack DFS
// over the induced bipartite graph uses one modeled oracle search per step
// to find an undiscovered neighbor of the stack top on the opposite side
// (search space = that whole side). Successful searches charge
// "grover_success", emptiness declarations charge "grover_fail", and the
// only classical queries are find_base's n. Vertices are marked when
// discovered, so each is pushed and popped at most once and termination is
// unconditional. Connected iff all n elements get discovered.
//
// In idealized mode the verdict is exact and a disconnection comes with a
// witness (the discovered component against the rest). In sampled mode a
// search can falsely declare no neighbor, so the verdict may err toward
// "disconnected" with bounded probability and no witness is attached.
// An empty base (rank 0) means every element is a loop: connected only when
// n = 1. Requires n >= 1.
ConnectivityVerdict quantum_dfs_connected(const MatroidOracle& m,
                                          const GroverCostModel& model, Rng& rng,
                                          QuantumDfsStats* stats = nullptr);

}  // namespace matq
