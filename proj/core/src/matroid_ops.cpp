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

#include "matq/matroid_ops.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "matq/errors.hpp"

namespace matq {
namespace {

void check_sweep_cap(const MatroidOracle& m, std::size_t cap, const char* what) {
  if (m.ground_size() > cap) {
    throw std::invalid_argument(std::string(what) + " supports at most " +
                                std::to_string(cap) + " elements, got " +
                                std::to_string(m.ground_size()));
  }
}

// Answers for all 2^n subsets, indexed by packed value. One oracle call each.
std::vector<char> sweep_independence(const MatroidOracle& m) {
  const std::size_t n = m.ground_size();
  std::vector<char> independent(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < independent.size(); ++v) {
    independent[v] = m.is_independent(SubsetMask::from_value(n, v)) ? 1 : 0;
  }
  return independent;
}

}  // namespace

std::size_t rank(const MatroidOracle& m, const SubsetMask& subset) {
  if (subset.universe_size() != m.ground_size()) {
    throw std::invalid_argument("rank: subset universe does not match oracle ground set");
  }
  SubsetMask kept(m.ground_size());
  subset.for_each([&](ElementId e) {
    if (m.is_independent(kept.with(e))) kept.set(e);
  });
  return kept.count();
}

std::size_t rank(const MatroidOracle& m) {
  return rank(m, SubsetMask::full(m.ground_size()));
}

SubsetMask find_base(const MatroidOracle& m) {
  SubsetMask kept(m.ground_size());
  for (ElementId e = 0; e < m.ground_size(); ++e) {
    if (m.is_independent(kept.with(e))) kept.set(e);
  }
  return kept;
}

SubsetMask fundamental_circuit(const MatroidOracle& m, const SubsetMask& base,
                               ElementId element) {
  if (base.universe_size() != m.ground_size()) {
    throw std::invalid_argument("fundamental_circuit: base universe mismatch");
  }
  if (base.test(element)) {
    throw std::invalid_argument("fundamental_circuit: element already in the base");
  }
  const SubsetMask extended = base.with(element);
  SubsetMask circuit = SubsetMask(m.ground_size()).with(element);
  base.for_each([&](ElementId x) {
    if (m.is_independent(extended.without(x))) circuit.set(x);
  });
  return circuit;
}

std::vector<SubsetMask> enumerate_independent_sets(const MatroidOracle& m) {
  check_sweep_cap(m, kSubsetSweepMaxN, "enumerate_independent_sets");
  const std::size_t n = m.ground_size();
  const auto independent = sweep_independence(m);
  std::vector<SubsetMask> out;
  for (std::uint64_t v = 0; v < independent.size(); ++v) {
    if (independent[v]) out.push_back(SubsetMask::from_value(n, v));
  }
  return out;
}

std::vector<SubsetMask> enumerate_circuits(const MatroidOracle& m) {
  check_sweep_cap(m, kSubsetSweepMaxN, "enumerate_circuits");
  const std::size_t n = m.ground_size();
  const auto independent = sweep_independence(m);
  std::vector<std::uint64_t> values;
  for (std::uint64_t v = 1; v < independent.size(); ++v) {
    if (independent[v]) continue;
    bool minimal = true;
    for (std::uint64_t bits = v; bits != 0; bits &= bits - 1) {
      const std::uint64_t low = bits & (~bits + 1);
      if (!independent[v & ~low]) {
        minimal = false;
        break;
      }
    }
    if (minimal) values.push_back(v);
  }
  std::sort(values.begin(), values.end(), [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<SubsetMask> out;
  out.reserve(values.size());
  for (std::uint64_t v : values) out.push_back(SubsetMask::from_value(n, v));
  return out;
}

std::vector<SubsetMask> enumerate_bases_exhaustive(const MatroidOracle& m) {
  check_sweep_cap(m, kSubsetSweepMaxN, "enumerate_bases_exhaustive");
  const std::size_t n = m.ground_size();
  const auto independent = sweep_independence(m);
  int max_size = 0;
  for (std::uint64_t v = 0; v < independent.size(); ++v) {
    if (independent[v]) max_size = std::max(max_size, std::popcount(v));
  }
  std::vector<SubsetMask> out;
  for (std::uint64_t v = 0; v < independent.size(); ++v) {
    if (independent[v] && std::popcount(v) == max_size) {
      out.push_back(SubsetMask::from_value(n, v));
    }
  }
  return out;
}

std::vector<SubsetMask> enumerate_bases(const MatroidOracle& m) {
  if (auto closed_form = m.closed_form_bases()) return *std::move(closed_form);
  return enumerate_bases_exhaustive(m);
}

std::optional<std::string> verify_independence_axioms(const MatroidOracle& m) {
  check_sweep_cap(m, kAxiomCheckMaxN, "verify_independence_axioms");
  const std::size_t n = m.ground_size();
  const auto independent = sweep_independence(m);
  if (!independent[0]) return "I0 fails: the empty set is dependent";

  for (std::uint64_t v = 1; v < independent.size(); ++v) {
    if (!independent[v]) continue;
    for (std::uint64_t bits = v; bits != 0; bits &= bits - 1) {
      const std::uint64_t low = bits & (~bits + 1);
      if (!independent[v & ~low]) {
        return "I1 fails: " + SubsetMask::from_value(n, v).to_string() +
               " is independent but a subset is not";
      }
    }
  }

  // Independent sets grouped by size; augmentation only needs adjacent sizes.
  std::vector<std::vector<std::uint64_t>> by_size(n + 1);
  for (std::uint64_t v = 0; v < independent.size(); ++v) {
    if (independent[v]) by_size[static_cast<std::size_t>(std::popcount(v))].push_back(v);
  }
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    for (std::uint64_t small : by_size[k]) {
      for (std::uint64_t large : by_size[k + 1]) {
        bool augmented = false;
        for (std::uint64_t bits = large & ~small; bits != 0; bits &= bits - 1) {
          const std::uint64_t low = bits & (~bits + 1);
          if (independent[small | low]) {
            augmented = true;
            break;
          }
        }
        if (!augmented) {
          return "I2 fails: " + SubsetMask::from_value(n, small).to_string() +
                 " cannot be augmented from " + SubsetMask::from_value(n, large).to_string();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> verify_base_exchange(const std::vector<SubsetMask>& bases) {
  if (bases.empty()) return "base list is empty";
  const std::size_t size = bases.front().count();
  for (const auto& b : bases) {
    if (b.count() != size) {
      return "bases are not equicardinal: " + bases.front().to_string() + " vs " +
             b.to_string();
    }
  }
  std::vector<SubsetMask> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "base list contains duplicates";
  }
  const auto is_base = [&sorted](const SubsetMask& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };
  for (const auto& b1 : bases) {
    for (const auto& b2 : bases) {
      if (b1 == b2) continue;
      bool exchanged = false;
      (b1 - b2).for_each([&](ElementId x) {
        if (exchanged) return;
        (b2 - b1).for_each([&](ElementId y) {
          if (!exchanged && is_base(b1.without(x).with(y))) exchanged = true;
        });
      });
      if (!exchanged) {
        return "B1 fails for " + b1.to_string() + ", " + b2.to_string() +
               ": no single-swap exchange stays in the list";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> verify_circuit_axioms(const std::vector<SubsetMask>& circuits) {
  for (const auto& c : circuits) {
    if (c.empty()) return "C1 fails: empty circuit";
  }
  for (const auto& c1 : circuits) {
    for (const auto& c2 : circuits) {
      if (&c1 == &c2) continue;
      if (c1 == c2) continue;
      if (c1.is_subset_of(c2)) {
        return "C1 fails: " + c1.to_string() + " is contained in " + c2.to_string();
      }
    }
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const SubsetMask shared = circuits[i] & circuits[j];
      std::optional<std::string> failure;
      shared.for_each([&](ElementId e) {
        if (failure) return;
        const SubsetMask hull = (circuits[i] | circuits[j]).without(e);
        bool found = false;
        for (const auto& c : circuits) {
          if (c.is_subset_of(hull)) {
            found = true;
            break;
          }
        }
        if (!found) {
          failure = "C2 fails for " + circuits[i].to_string() + ", " +
                    circuits[j].to_string() + " at element e" + std::to_string(e + 1);
        }
      });
      if (failure) return failure;
    }
  }
  return std::nullopt;
}

ConnectivityVerdict brute_force_connected(const MatroidOracle& m) {
  check_sweep_cap(m, kBruteForceMaxN, "brute_force_connected");
  const std::size_t n = m.ground_size();
  CountingOracle counted(m);

  ConnectivityVerdict verdict;
  verdict.connected = true;
  if (n >= 2) {
    const std::size_t total_rank = rank(counted);
    const std::uint64_t limit = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t v = 1; v < limit; ++v) {
      const SubsetMask side = SubsetMask::from_value(n, v);
      const SubsetMask rest = side.complement();
      const std::size_t split_rank = rank(counted, side) + rank(counted, rest);
      if (split_rank < total_rank) {
        throw InvariantViolation("rank subadditivity violated at bipartition " +
                                 side.to_string());
      }
      if (split_rank == total_rank) {
        verdict.connected = false;
        verdict.witness = SeparationWitness{side, rest};
        break;
      }
    }
  }
  verdict.ledger = counted.ledger();
  return verdict;
}

ConnectivityVerdict circuit_pairwise_connected(const MatroidOracle& m) {
  check_sweep_cap(m, kSubsetSweepMaxN, "circuit_pairwise_connected");
  const std::size_t n = m.ground_size();
  CountingOracle counted(m);

  ConnectivityVerdict verdict;
  verdict.connected = true;
  const auto circuits = enumerate_circuits(counted);
  for (ElementId i = 0; i < n && verdict.connected; ++i) {
    for (ElementId j = i + 1; j < n && verdict.connected; ++j) {
      bool covered = false;
      for (const auto& c : circuits) {
        if (c.test(i) && c.test(j)) {
          covered = true;
          break;
        }
      }
      if (!covered) verdict.connected = false;
    }
  }
  verdict.ledger = counted.ledger();
  return verdict;
}

}  // namespace matq
