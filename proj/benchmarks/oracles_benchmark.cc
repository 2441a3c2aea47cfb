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


#include <vector>

#include "benchmark/benchmark.h"
#include "graphbench/generators.h"
#include "graphbench/oracles.h"
#include "graphbench/rng.h"

namespace graphbench {
namespace {

std::vector<Graph> Graphs(int count, int n, double p) {
  Rng rng(3);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(ErdosRenyi(n, p, rng));
  return out;
}

void BM_ConnectedComponents(benchmark::State& state) {
  const auto graphs = Graphs(64, static_cast<int>(state.range(0)), 0.05);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConnectedComponents(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_ConnectedComponents)->Arg(11)->Arg(51);

void BM_HasCycle(benchmark::State& state) {
  const auto graphs = Graphs(64, 51, 0.03);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(HasCycle(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_HasCycle);

void BM_IsBipartite(benchmark::State& state) {
  const auto graphs = Graphs(64, 51, 0.05);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsBipartite(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_IsBipartite);

void BM_ShortestPath(benchmark::State& state) {
  const auto graphs = Graphs(64, 51, 0.1);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ShortestPathLength(graphs[i++ % graphs.size()], 0, 50));
  }
}
BENCHMARK(BM_ShortestPath);

void BM_SpanningTreeValidation(benchmark::State& state) {
  Rng rng(4);
  const Graph g = ErdosRenyi(51, 1.0, rng);
  absl::StatusOr<Answer> tree =
      ComputeGold(TaskKind::kMinimumSpanningTree, g, {});
  const auto& edges = std::get<EdgeSetAnswer>(*tree).edges;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ValidateSpanningTree(g, edges));
  }
}
BENCHMARK(BM_SpanningTreeValidation);

void BM_TopoOrder(benchmark::State& state) {
  Rng rng(5);
  const Graph dag = SampleErDag(kLarge, 0.2, rng);
  absl::StatusOr<NodeSeqAnswer> order = TopoOrder(dag);
  for (auto _ : state) {
    benchmark::DoNotOptimize(TopoOrder(dag));
    benchmark::DoNotOptimize(ValidateTopoOrder(dag, order->nodes));
  }
}
BENCHMARK(BM_TopoOrder);

}  // namespace
}  // namespace graphbench
