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

// Seeded random graph generators: Erdos-Renyi, low-to-high oriented
// Erdos-Renyi DAGs, and random bipartite graphs.
//
// Every generator draws n uniformly from the bucket, then p uniformly from
// [0, 1) (unless p is fixed), then visits candidate edges in lexicographic
// order and keeps each with probability p.

#ifndef GRAPHBENCH_GENERATORS_H_
#define GRAPHBENCH_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "graphbench/graph.h"
#include "graphbench/rng.h"
#include "graphbench/task.h"

namespace graphbench {

struct GeneratorConfig {
  SizeBucket bucket = kSmall;
  uint64_t master_seed = 0;
  TaskKind task = TaskKind::kNodeCount;
  // Overrides the uniform draw of the edge probability when set.
  std::optional<double> fixed_p;
};

struct BipartiteSample {
  Graph graph;
  std::vector<Node> part_a;  // sorted, nonempty
  std::vector<Node> part_b;  // sorted, nonempty
};

// Fixed-size building blocks. They consume draws from `rng` so callers can
// keep one stream per instance.
Graph ErdosRenyi(int n, double p, Rng& rng);
// Requires n >= 2. Part sizes are uniform over 1..n-1 and nodes are
// assigned to parts by a random permutation.
BipartiteSample RandomBipartite(int n, double p, Rng& rng);
// Directs every edge from its lower label to its higher label.
Graph OrientLowToHigh(const Graph& g);

// Bucket-driven samplers on an existing stream.
Graph SampleEr(const SizeBucket& bucket, std::optional<double> fixed_p,
               Rng& rng);
Graph SampleErDag(const SizeBucket& bucket, std::optional<double> fixed_p,
                  Rng& rng);
BipartiteSample SampleBipartite(const SizeBucket& bucket,
                                std::optional<double> fixed_p, Rng& rng);

// Seeded entry points: identical (cfg, seed) give identical graphs.
Graph GenerateEr(const GeneratorConfig& cfg, uint64_t seed);
Graph GenerateErDag(const GeneratorConfig& cfg, uint64_t seed);
BipartiteSample GenerateRandomBipartite(const GeneratorConfig& cfg,
                                        uint64_t seed);

}  // namespace graphbench

#endif  // GRAPHBENCH_GENERATORS_H_
