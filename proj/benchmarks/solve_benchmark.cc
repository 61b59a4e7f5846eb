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

#include <benchmark/benchmark.h>

#include "exactbasis/catalog.h"
#include "exactbasis/exact_solver.h"
#include "exactbasis/intersection.h"
#include "exactbasis/matroid_spec.h"

namespace exactbasis {
namespace {

// Connected random multigraph: a random spanning tree plus extra edges.
MatroidSpec RandomConnectedGraph(Rng& rng, int vertices, int edges) {
  std::vector<std::pair<int, int>> list;
  for (int v = 1; v < vertices; ++v) {
    list.emplace_back(static_cast<int>(UniformInt(rng, 0, v - 1)), v);
  }
  while (static_cast<int>(list.size()) < edges) {
    const int a = static_cast<int>(UniformInt(rng, 0, vertices - 1));
    const int b = static_cast<int>(UniformInt(rng, 0, vertices - 1));
    if (a != b) list.emplace_back(a, b);
  }
  for (int i = edges - 1; i > 0; --i) {
    std::swap(list[i], list[UniformInt(rng, 0, i)]);
  }
  return Graphic(vertices, std::move(list));
}

struct GraphicInstance {
  Matroid matroid;
  WeightMatrix weights;
  std::vector<int64_t> beta;
};

GraphicInstance MakeGraphicInstance(int n, uint64_t seed) {
  Rng rng(seed);
  MatroidSpec spec = RandomConnectedGraph(rng, n / 3, n);
  Matroid m = *Compile(spec);
  WeightMatrix w = *WeightMatrix::FromRows(n, RandomWeightRows(rng, 1, n, 1));
  // Target: weight of a basis grown in random order.
  std::vector<ElementId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[UniformInt(rng, 0, i)]);
  SubsetMask basis(n);
  for (ElementId e : order) {
    basis.Insert(e);
    if (!m.IsIndependent(basis)) basis.Erase(e);
  }
  return {m, w, w.Apply(basis)};
}

void BM_SolveGraphic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GraphicInstance inst = MakeGraphicInstance(n, 42);
  for (auto _ : state) {
    absl::StatusOr<SolveReport> r = Solve(inst.matroid, inst.weights, inst.beta);
    if (!r.ok() || r->status != SolveReport::Status::kFound) {
      state.SkipWithError("solve did not find the planted basis");
      return;
    }
    state.counters["oracle_calls"] = static_cast<double>(r->stats.oracle_calls);
    state.counters["lp_pivots"] = static_cast<double>(r->stats.lp_pivots);
    state.counters["candidates"] =
        static_cast<double>(r->stats.candidates_tested);
  }
}
BENCHMARK(BM_SolveGraphic)->Arg(25)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_IntersectPartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  MatroidSpec a = RandomSpec(rng, SpecFamily::kPartition, n);
  MatroidSpec b = RandomSpec(rng, SpecFamily::kGraphic, n);
  Matroid ma = *Compile(a);
  Matroid mb = *Compile(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MaxCommonIndependent(ma, mb));
  }
}
BENCHMARK(BM_IntersectPartitions)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_OracleAgreementBatch(benchmark::State& state) {
  for (auto _ : state) {
    Rng rng(1);
    for (int i = 0; i < 100; ++i) {
      RandomInstance inst =
          RandomExactInstance(rng, kAllFamilies[i % 9], 12, 2, 2);
      Matroid m = *Compile(inst.spec);
      benchmark::DoNotOptimize(Solve(m, inst.weights, inst.beta));
    }
  }
}
BENCHMARK(BM_OracleAgreementBatch)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace exactbasis

BENCHMARK_MAIN();
