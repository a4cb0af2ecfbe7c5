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

// Microbenchmarks for the hot paths: mask algebra, oracle evaluation, and the
// two connectivity deciders. Run manually; these are not wired into ctest.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "matq/cunningham.hpp"
#include "matq/families.hpp"
#include "matq/grover.hpp"
#include "matq/matroid_ops.hpp"
#include "matq/quantum_dfs.hpp"
#include "matq/query_ledger.hpp"
#include "matq/rng.hpp"
#include "matq/subset_mask.hpp"

namespace {

using namespace matq;

void BM_SubsetMaskAlgebra(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SubsetMask a(n), b(n);
  for (std::size_t i = 0; i < n; i += 3) a.set(i);
  for (std::size_t i = 0; i < n; i += 5) b.set(i);
  for (auto _ : state) {
    SubsetMask u = a;
    u |= b;
    benchmark::DoNotOptimize(u.count());
    benchmark::DoNotOptimize((a & b).empty());
  }
}
BENCHMARK(BM_SubsetMaskAlgebra)->Arg(64)->Arg(512)->Arg(2048);

void BM_MinimalIndependence(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MinimalMatroid m(n, n / 2);
  Rng rng = Rng::seeded(1);
  SubsetMask subset(n);
  for (std::size_t i = 0; i < n / 2; ++i) subset.set(rng.pick(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.is_independent(subset));
  }
}
BENCHMARK(BM_MinimalIndependence)->Arg(64)->Arg(512)->Arg(2048);

void BM_GraphicIndependence(benchmark::State& state) {
  const std::size_t vertices = static_cast<std::size_t>(state.range(0));
  std::vector<GraphicMatroid::Edge> edges;
  for (std::size_t v = 0; v + 1 < vertices; ++v) {
    edges.push_back({static_cast<ElementId>(v), static_cast<ElementId>(v + 1)});
  }
  edges.push_back({0, static_cast<ElementId>(vertices - 1)});
  const GraphicMatroid m(vertices, edges);
  SubsetMask all(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) all.set(i);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.is_independent(all));
  }
}
BENCHMARK(BM_GraphicIndependence)->Arg(64)->Arg(512);

void BM_FindBase(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MinimalMatroid m(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_base(m));
  }
}
BENCHMARK(BM_FindBase)->Arg(64)->Arg(256)->Arg(1024);

void BM_PartialRepresentation(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MinimalMatroid m(n, n / 2);
  const SubsetMask base = find_base(m);
  for (auto _ : state) {
    CountingOracle counted(m);
    benchmark::DoNotOptimize(build_partial_representation(counted, base));
  }
}
BENCHMARK(BM_PartialRepresentation)->Arg(64)->Arg(256)->Arg(1024);

void BM_CunninghamDecide(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MinimalMatroid m(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cunningham_connected(m).connected);
  }
}
BENCHMARK(BM_CunninghamDecide)->Arg(64)->Arg(256)->Arg(1024);

void BM_QuantumDfsDecide(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MinimalMatroid m(n, n / 2);
  const GroverCostModel model{};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Rng rng = Rng::seeded(Rng::derive_seed(42, seed++));
    benchmark::DoNotOptimize(quantum_dfs_connected(m, model, rng).connected);
  }
}
BENCHMARK(BM_QuantumDfsDecide)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
