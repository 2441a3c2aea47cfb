// Copyright 2026 The Graphbench Authors
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


// Dataset generation throughput.

#include "benchmark/benchmark.h"
#include "graphbench/dataset.h"
#include "graphbench/generators.h"
#include "graphbench/rng.h"

namespace graphbench {
namespace {

void BM_ErdosRenyi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ErdosRenyi(n, 0.3, rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ErdosRenyi)->Arg(8)->Arg(20)->Arg(51);

void BM_BipartiteSample(benchmark::State& state) {
  Rng rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleBipartite(kLarge, std::nullopt, rng));
  }
}
BENCHMARK(BM_BipartiteSample);

void BM_GraphGroup(benchmark::State& state) {
  const TaskKind task = static_cast<TaskKind>(state.range(0));
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(GenerateGraphGroup(task, kLarge, ++seed, 0, 5));
  }
}
BENCHMARK(BM_GraphGroup)
    ->Arg(static_cast<int>(TaskKind::kCycleCheck))
    ->Arg(static_cast<int>(TaskKind::kMinimumSpanningTree))
    ->Arg(static_cast<int>(TaskKind::kShortestPath))
    ->Arg(static_cast<int>(TaskKind::kTopologicalSort));

// The whole default dataset, 6600 instances.
void BM_AssembleDataset(benchmark::State& state) {
  for (auto _ : state) {
    absl::StatusOr<Dataset> d = AssembleDataset({.master_seed = 7});
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * 6600);
}
BENCHMARK(BM_AssembleDataset)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace graphbench
