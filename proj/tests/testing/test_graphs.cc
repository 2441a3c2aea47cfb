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


#include "test_graphs.h"

#include <cstdlib>
#include <iostream>

#include "graphbench/generators.h"

namespace graphbench::testing {

Graph MakeGraph(int n, std::vector<Edge> edges, bool directed) {
  absl::StatusOr<Graph> g = Graph::Create(n, std::move(edges), directed);
  if (!g.ok()) {
    std::cerr << "MakeGraph: " << g.status() << "\n";
    std::abort();
  }
  return *std::move(g);
}

Graph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return MakeGraph(n, std::move(edges));
}

Graph RandomGraph(int n, double p, Rng& rng) { return ErdosRenyi(n, p, rng); }

Graph RandomDigraph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = 0; v < n; ++v) {
      if (u != v && rng.UnitReal() < p) edges.push_back({u, v});
    }
  }
  return MakeGraph(n, std::move(edges), /*directed=*/true);
}

Graph RandomDag(int n, double p, Rng& rng) {
  return OrientLowToHigh(ErdosRenyi(n, p, rng));
}

}  // namespace graphbench::testing
