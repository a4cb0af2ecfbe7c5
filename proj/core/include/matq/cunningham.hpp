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
#include <vector>

#include "matq/matroid_ops.hpp"
#include "matq/query_ledger.hpp"
#include "matq/subset_mask.hpp"

namespace matq {

// Fundamental-circuit incidence matrix of a matroid with respect to a base:
// rows are the base elements, columns the remaining elements, and entry
// (x, y) is 1 exactly when x lies in the fundamental circuit of y, i.e. when
// base + y - x is independent. Its bipartite graph is connected iff the
// matroid is.
struct PartialRepresentation {
  SubsetMask base;
  std::vector<ElementId> rows;  // base elements, ascending
  std::vector<ElementId> cols;  // non-base elements, ascending
  std::vector<std::uint8_t> entries;  // row-major |rows| x |cols|

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return cols.size(); }

  bool entry(std::size_t row, std::size_t col) const {
    return entries[row * cols.size() + col] != 0;
  }
};

// Builds the full matrix eagerly with exactly |rows| * |cols| = r(n-r)
// queries, charged to the "matrix_build" phase of the wrapper's ledger.
// Precondition (unchecked): `base` is a base of the wrapped matroid.
PartialRepresentation build_partial_representation(const CountingOracle& oracle,
                                                   const SubsetMask& base);

// Connected components of the bipartite graph with one vertex per matroid
// element and one edge per nonzero matrix entry.
struct BipartiteSplit {
  bool connected = false;
  // Each component as a set of elements, ordered by smallest member. A graph
  // with at most one vertex counts as connected.
  std::vector<SubsetMask> components;
};

// Pure graph analysis; issues zero oracle queries.
BipartiteSplit bipartite_connected(const PartialRepresentation& p);

// Classical connectivity decider: greedy base (n queries, phase
// "find_base"), eager matrix construction (r(n-r) queries, phase
// "matrix_build"), then component analysis. Decision cost is exactly
// n + r(n-r) queries. When disconnected, the component containing the
// lowest element becomes the witness and the rank identity
// rank(E1) + rank(E2) = rank(E) is re-checked under the same oracle (n more
// queries in the separate "witness_verify" phase; failure of the identity
// throws InvariantViolation). Requires n >= 1.
ConnectivityVerdict cunningham_connected(const MatroidOracle& m);

// Same decider with the starting base forced by the caller, so tests can
// confirm the verdict does not depend on which base the greedy scan finds.
// Precondition (unchecked): `base` is a base of m. No "find_base" phase.
ConnectivityVerdict cunningham_connected(const MatroidOracle& m, const SubsetMask& base);

}  // namespace matq
