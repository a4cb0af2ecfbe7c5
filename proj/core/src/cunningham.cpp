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

#include "matq/cunningham.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "matq/errors.hpp"
#include "matq/union_find.hpp"

namespace matq {
namespace {

ConnectivityVerdict decide_from_base(const CountingOracle& counted, const SubsetMask& base) {
  const PartialRepresentation p = build_partial_representation(counted, base);
  const BipartiteSplit split = bipartite_connected(p);

  ConnectivityVerdict verdict;
  verdict.connected = split.connected;
  if (!split.connected) {
    const SubsetMask& first = split.components.front();
    const SubsetMask rest = first.complement();
    counted.ledger().begin_phase(phases::kWitnessVerify);
    const std::size_t split_rank = rank(counted, first) + rank(counted, rest);
    if (split_rank != base.count()) {
      throw InvariantViolation("separation witness " + first.to_string() +
                               " fails the rank identity");
    }
    verdict.witness = SeparationWitness{first, rest};
  }
  verdict.ledger = counted.ledger();
  return verdict;
}

}  // namespace

PartialRepresentation build_partial_representation(const CountingOracle& oracle,
                                                   const SubsetMask& base) {
  if (base.universe_size() != oracle.ground_size()) {
    throw std::invalid_argument("partial representation: base universe mismatch");
  }
  oracle.ledger().begin_phase(phases::kMatrixBuild);

  PartialRepresentation p;
  p.base = base;
  p.rows = base.elements();
  p.cols = base.complement().elements();
  p.entries.assign(p.rows.size() * p.cols.size(), 0);

  SubsetMask probe = base;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    probe.reset(p.rows[i]);
    for (std::size_t j = 0; j < p.cols.size(); ++j) {
      probe.set(p.cols[j]);
      p.entries[i * p.cols.size() + j] = oracle.is_independent(probe) ? 1 : 0;
      probe.reset(p.cols[j]);
    }
    probe.set(p.rows[i]);
  }
  return p;
}

BipartiteSplit bipartite_connected(const PartialRepresentation& p) {
  const std::size_t rows = p.row_count();
  const std::size_t cols = p.col_count();
  const std::size_t n = rows + cols;

  UnionFind groups(n);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (p.entry(i, j)) groups.unite(i, rows + j);
    }
  }

  // Vertex index -> element id, then components keyed by their root.
  std::map<std::size_t, SubsetMask> by_root;
  const std::size_t universe = p.base.universe_size();
  for (std::size_t v = 0; v < n; ++v) {
    const ElementId element = v < rows ? p.rows[v] : p.cols[v - rows];
    auto [it, inserted] = by_root.try_emplace(groups.find(v), SubsetMask(universe));
    it->second.set(element);
  }

  BipartiteSplit split;
  for (auto& [root, members] : by_root) split.components.push_back(std::move(members));
  std::sort(split.components.begin(), split.components.end(),
            [](const SubsetMask& a, const SubsetMask& b) { return a.lowest() < b.lowest(); });
  split.connected = split.components.size() <= 1;
  return split;
}

ConnectivityVerdict cunningham_connected(const MatroidOracle& m) {
  if (m.ground_size() == 0) {
    throw std::invalid_argument("connectivity decider requires a nonempty ground set");
  }
  CountingOracle counted(m);
  counted.ledger().begin_phase(phases::kFindBase);
  const SubsetMask base = find_base(counted);
  return decide_from_base(counted, base);
}

ConnectivityVerdict cunningham_connected(const MatroidOracle& m, const SubsetMask& base) {
  if (m.ground_size() == 0) {
    throw std::invalid_argument("connectivity decider requires a nonempty ground set");
  }
  if (base.universe_size() != m.ground_size()) {
    throw std::invalid_argument("forced base lives on the wrong ground set");
  }
  CountingOracle counted(m);
  return decide_from_base(counted, base);
}

}  // namespace matq
