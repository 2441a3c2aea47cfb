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


// Prompt rendering and answer extraction.

#include <string>

#include "benchmark/benchmark.h"
#include "graphbench/dataset.h"
#include "graphbench/extract.h"
#include "graphbench/prompt.h"

namespace graphbench {
namespace {

const std::vector<TaskInstance>& Instances() {
  static const auto* v = new std::vector<TaskInstance>(
      AssembleDataset({.master_seed = 7, .graphs_per_cell = 10})->instances);
  return *v;
}

void BM_RenderPrompt(benchmark::State& state) {
  const Strategy strategies[] = {
      Strategy::ZeroShot(), Strategy::KShot(5), Strategy::Pseudo(),
      Strategy::PseudoKShot(PseudoStyle::kMultiFunction, 5)};
  const Strategy& s = strategies[state.range(0)];
  state.SetLabel(s.Label());
  size_t i = 0;
  for (auto _ : state) {
    const TaskInstance& inst = Instances()[i++ % Instances().size()];
    benchmark::DoNotOptimize(RenderPrompt(inst, s, {.exemplar_master_seed = 7}));
  }
}
BENCHMARK(BM_RenderPrompt)->DenseRange(0, 3);

void BM_Extract(benchmark::State& state) {
  const TaskKind task = static_cast<TaskKind>(state.range(0));
  std::string response =
      "We start from node 0 and walk through the edges one by one. ";
  for (int i = 0; i < 20; ++i) {
    response += "Node " + std::to_string(i) + " is visited next (step " +
                std::to_string(i + 1) + "). ";
  }
  response +=
      "\nAnswer: [(0, 1), (1, 2), (2, 3)] so the graph contains a cycle; 3";
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ExtractAnswer(task, response, {.node_count = 20}));
  }
  state.SetBytesProcessed(state.iterations() * response.size());
}
BENCHMARK(BM_Extract)
    ->Arg(static_cast<int>(TaskKind::kNodeCount))
    ->Arg(static_cast<int>(TaskKind::kCycleCheck))
    ->Arg(static_cast<int>(TaskKind::kNeighbors))
    ->Arg(static_cast<int>(TaskKind::kMinimumSpanningTree))
    ->Arg(static_cast<int>(TaskKind::kTopologicalSort));

}  // namespace
}  // namespace graphbench
