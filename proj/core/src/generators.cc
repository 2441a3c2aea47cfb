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

#include "graphbench/generators.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>
#include <utility>

namespace graphbench {
namespace {

double DrawP(std::optional<double> fixed_p, Rng& rng) {
  return fixed_p.has_value() ? *fixed_p : rng.UnitReal();
}

int DrawN(const SizeBucket& bucket, Rng& rng) {
  return static_cast<int>(rng.UniformInt(bucket.n_min, bucket.n_max));
}

}  // namespace

Graph ErdosRenyi(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (rng.UnitReal() < p) edges.push_back({u, v});
    }
  }
  return *Graph::Create(n, std::move(edges), /*directed=*/false);
}

BipartiteSample RandomBipartite(int n, double p, Rng& rng) {
  assert(n >= 2);
  const int size_a = static_cast<int>(rng.UniformInt(1, n - 1));
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(std::span<Node>(order));

  std::vector<bool> in_a(n, false);
  for (int i = 0; i < size_a; ++i) in_a[order[i]] = true;

  BipartiteSample sample;
  for (Node u = 0; u < n; ++u) {
    (in_a[u] ? sample.part_a : sample.part_b).push_back(u);
  }
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (in_a[u] == in_a[v]) continue;
      if (rng.UnitReal() < p) edges.push_back({u, v});
    }
  }
  sample.graph = *Graph::Create(n, std::move(edges), /*directed=*/false);
  return sample;
}

Graph OrientLowToHigh(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  return *Graph::Create(g.node_count(), std::move(edges), /*directed=*/true);
}

Graph SampleEr(const SizeBucket& bucket, std::optional<double> fixed_p,
               Rng& rng) {
  const int n = DrawN(bucket, rng);
  const double p = DrawP(fixed_p, rng);
  return ErdosRenyi(n, p, rng);
}

Graph SampleErDag(const SizeBucket& bucket, std::optional<double> fixed_p,
                  Rng& rng) {
  return OrientLowToHigh(SampleEr(bucket, fixed_p, rng));
}

BipartiteSample SampleBipartite(const SizeBucket& bucket,
                                std::optional<double> fixed_p, Rng& rng) {
  const int n = DrawN(bucket, rng);
  const double p = DrawP(fixed_p, rng);
  return RandomBipartite(n, p, rng);
}

Graph GenerateEr(const GeneratorConfig& cfg, uint64_t seed) {
  Rng rng(seed);
  return SampleEr(cfg.bucket, cfg.fixed_p, rng);
}

Graph GenerateErDag(const GeneratorConfig& cfg, uint64_t seed) {
  Rng rng(seed);
  return SampleErDag(cfg.bucket, cfg.fixed_p, rng);
}

BipartiteSample GenerateRandomBipartite(const GeneratorConfig& cfg,
                                        uint64_t seed) {
  Rng rng(seed);
  return SampleBipartite(cfg.bucket, cfg.fixed_p, rng);
}

}  // namespace graphbench
