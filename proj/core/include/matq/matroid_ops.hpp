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

#include <optional>
#include <string>
#include <vector>

#include "matq/oracle.hpp"
#include "matq/query_ledger.hpp"
#include "matq/subset_mask.hpp"

namespace matq {

// Ground-set ceilings for the exponential-time reference routines. They are
// guards against accidental blowup, not tuning knobs: each routine throws
// std::invalid_argument beyond its cap.
inline constexpr std::size_t kSubsetSweepMaxN = 16;  // full 2^n subset sweeps
inline constexpr std::size_t kAxiomCheckMaxN = 12;   // pairwise augmentation checks
inline constexpr std::size_t kBruteForceMaxN = 20;   // rank sweep over all bipartitions

// Rank of `subset`, computed greedily with exactly |subset| oracle queries.
std::size_t rank(const MatroidOracle& m, const SubsetMask& subset);

// Rank of the whole ground set (n queries).
std::size_t rank(const MatroidOracle& m);

// Greedy lexicographic base: scans elements in ascending order and keeps an
// element whenever the kept set stays independent. Exactly n queries.
SubsetMask find_base(const MatroidOracle& m);

// Fundamental circuit of `element` with respect to `base`: the unique circuit
// inside base + element, namely {element} together with every x in the base
// whose removal restores independence. Preconditions (unchecked beyond
// structural sanity): `base` is a base and element lies outside it, so that
// base + element is dependent. Costs exactly |base| queries.
SubsetMask fundamental_circuit(const MatroidOracle& m, const SubsetMask& base,
                               ElementId element);

// --- Exhaustive reference enumerations (exponential; capped) ---------------

// Every independent set, ascending by packed value (includes the empty set).
std::vector<SubsetMask> enumerate_independent_sets(const MatroidOracle& m);

// Every circuit (minimal dependent set), ordered by size then packed value.
std::vector<SubsetMask> enumerate_circuits(const MatroidOracle& m);

// Every base, found by sweeping all subsets; ascending by packed value.
std::vector<SubsetMask> enumerate_bases_exhaustive(const MatroidOracle& m);

// Every base, via the oracle's closed form when it has one, else exhaustively.
std::vector<SubsetMask> enumerate_bases(const MatroidOracle& m);

// --- Axiom verifiers --------------------------------------------------------
// Each returns nullopt when the axioms hold, otherwise a human-readable
// description of the first violation found.

// Independence axioms: empty set independent; downward closure; augmentation
// between independent sets whose sizes differ by one.
std::optional<std::string> verify_independence_axioms(const MatroidOracle& m);

// Base exchange: the list is nonempty, equicardinal, duplicate-free, and
// every ordered pair B1, B2 admits a single-swap exchange — some x in B1 - B2
// and y in B2 - B1 with B1 - x + y in the list. This is the existential form
// of the exchange property; the universal form (every x admits a y) is
// strictly stronger and fails for some lists this check accepts, such as a
// minimal matroid's base list with one non-prefix base deleted.
std::optional<std::string> verify_base_exchange(const std::vector<SubsetMask>& bases);

// Circuit axioms: no empty circuit, no circuit contains another, and circuit
// elimination (two circuits sharing an element have a third inside their
// union minus it). Cubic in the list size; meant for small instances.
std::optional<std::string> verify_circuit_axioms(const std::vector<SubsetMask>& circuits);

// --- Connectivity ------------------------------------------------------------

// A certified bipartition: both sides nonempty, disjoint, covering, and
// rank(first) + rank(second) == rank(ground set).
struct SeparationWitness {
  SubsetMask first;
  SubsetMask second;
};

struct ConnectivityVerdict {
  bool connected = false;
  // Present when a decider certifies disconnection with a bipartition; the
  // pairwise-circuit decider and the sampled quantum decider leave it empty.
  std::optional<SeparationWitness> witness;
  // Classical queries issued and quantum costs charged, broken down by phase.
  QueryLedger ledger;
};

// Definition-level decider: sweeps every nonempty proper subset A and tests
// whether rank(A) + rank(complement) exceeds rank(E). The first A (by packed
// value) achieving equality is returned as a witness. Exponential; capped at
// kBruteForceMaxN elements. Ground sets of size 0 or 1 are connected
// vacuously. Throws InvariantViolation if the oracle breaks subadditivity.
ConnectivityVerdict brute_force_connected(const MatroidOracle& m);

// Circuit-characterization decider: connected iff every pair of distinct
// elements lies on a common circuit. Enumerates all circuits first, so it is
// exponential and capped at kSubsetSweepMaxN; produces no witness.
ConnectivityVerdict circuit_pairwise_connected(const MatroidOracle& m);

}  // namespace matq
