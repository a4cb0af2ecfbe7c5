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

#include "matq/quantum_dfs.hpp"

#include <utility>
#include <vector>

namespace matq {

AdjacencyOracle::AdjacencyOracle(const CountingOracle& matroid, SubsetMask base)
    : matroid_(&matroid), base_(std::move(base)), probe_(base_) {
  if (base_.universe_size() != matroid_->ground_size()) {
    throw std::invalid_argument("adjacency oracle: base universe mismatch");
  }
}

bool AdjacencyOracle::adjacency(ElementId j, ElementId k) const {
  if (!base_.test(j) || base_.test(k)) return false;
  probe_.reset(j);
  probe_.set(k);
  const bool answer = matroid_->is_independent(probe_);
  probe_.reset(k);
  probe_.set(j);
  return answer;
}

ConnectivityVerdict quantum_dfs_connected(const MatroidOracle& m,
                                          const GroverCostModel& model, Rng& rng,
                                          QuantumDfsStats* stats) {
  model.validate();
  const std::size_t n = m.ground_size();
  if (n == 0) {
    throw std::invalid_argument("connectivity decider requires a nonempty ground set");
  }

  CountingOracle counted(m);
  counted.ledger().begin_phase(phases::kFindBase);
  const SubsetMask base = find_base(counted);

  QuantumDfsStats local_stats;
  QuantumDfsStats& s = stats ? *stats : local_stats;
  s = QuantumDfsStats{};

  ConnectivityVerdict verdict;

  const std::vector<ElementId> rows = base.elements();
  const std::vector<ElementId> cols = base.complement().elements();

  if (rows.empty()) {
    // Rank 0: every element is a loop and the graph has n isolated vertices.
    verdict.connected = (n == 1);
    s.discovered = verdict.connected ? 1 : 0;
    if (!verdict.connected && model.mode == GroverMode::kIdealized) {
      const SubsetMask lone = SubsetMask(n).with(0);
      verdict.witness = SeparationWitness{lone, lone.complement()};
    }
    verdict.ledger = counted.ledger();
    return verdict;
  }

  // Searches evaluate adjacency through a separate meter: those probes model
  // the inside of the search black box, so they must not show up in the
  // decider's classical ledger.
  const CountingOracle probe_meter(counted.inner());
  const AdjacencyOracle graph(probe_meter, base);

  // false = base side (rows), true = complement side (cols).
  std::vector<char> marked_row(rows.size(), 0), marked_col(cols.size(), 0);
  std::vector<std::pair<bool, std::uint32_t>> stack;
  stack.reserve(n);
  marked_row[0] = 1;  // start at the lowest-index base element
  stack.emplace_back(false, 0);
  s.discovered = 1;

  std::vector<std::uint32_t> candidates;
  while (!stack.empty()) {
    const auto [on_col_side, index] = stack.back();
    const ElementId from = on_col_side ? cols[index] : rows[index];
    const std::vector<ElementId>& opposite = on_col_side ? rows : cols;
    std::vector<char>& opposite_marked = on_col_side ? marked_row : marked_col;

    ++s.searches;
    if (opposite.empty()) {
      ++s.failures;
      stack.pop_back();
      continue;
    }

    candidates.clear();
    for (std::uint32_t i = 0; i < opposite.size(); ++i) {
      if (!opposite_marked[i] && graph.adjacent(from, opposite[i])) candidates.push_back(i);
    }

    const GroverResult result =
        grover_find(opposite.size(), candidates.size(), model, rng);
    if (result.found) {
      counted.ledger().charge_quantum(static_cast<std::int64_t>(result.cost),
                                      phases::kGroverSuccess);
      ++s.successes;
      s.success_charge += result.cost;
      const std::uint32_t next = candidates[*result.found];
      opposite_marked[next] = 1;
      stack.emplace_back(!on_col_side, next);
      ++s.discovered;
    } else {
      counted.ledger().charge_quantum(static_cast<std::int64_t>(result.cost),
                                      phases::kGroverFail);
      ++s.failures;
      s.fail_charge += result.cost;
      stack.pop_back();
    }
  }

  s.simulation_probes = probe_meter.ledger().classical_total();
  verdict.connected = (s.discovered == n);
  if (!verdict.connected && model.mode == GroverMode::kIdealized) {
    // Idealized searches are exact, so the discovered set is precisely the
    // start vertex's component and certifies the separation.
    SubsetMask found(n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (marked_row[i]) found.set(rows[i]);
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (marked_col[j]) found.set(cols[j]);
    }
    verdict.witness = SeparationWitness{found, found.complement()};
  }
  verdict.ledger = counted.ledger();
  return verdict;
}

}  // namespace matq
