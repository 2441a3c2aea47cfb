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

// Exact solvers and validators for the benchmark tasks. These produce every
// gold answer in the dataset.
//
// Error codes:
//   kOutOfRange          query node not in the graph
//   kFailedPrecondition  wrong graph kind (directed vs undirected) or a
//                        directed cycle passed to TopoOrder
//   kNotFound            ShortestPathLength between different components

#ifndef GRAPHBENCH_ORACLES_H_
#define GRAPHBENCH_ORACLES_H_

#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "graphbench/answer.h"
#include "graphbench/graph.h"
#include "graphbench/task.h"

namespace graphbench {

int NodeCount(const Graph& g);
int EdgeCount(const Graph& g);
absl::StatusOr<int> Degree(const Graph& g, Node u);
absl::StatusOr<NodeSetAnswer> Neighbors(const Graph& g, Node u);

// Union-find. Directed graphs are treated as undirected (weak components).
int ConnectedComponents(const Graph& g);
// Breadth-first flood fill; kept as an independent cross-check of the
// union-find count.
int ConnectedComponentsBfs(const Graph& g);
// Component id per node, ids assigned in order of smallest member.
std::vector<int> ComponentLabels(const Graph& g);

bool HasCycle(const Graph& g);

// Kruskal over the sorted edge list with unit weights: the lexicographically
// first spanning forest. Has exactly n - c edges.
EdgeSetAnswer SpanningForest(const Graph& g);
// True iff `edges` (in either orientation) is a subset of g's edges, contains
// no duplicates, is acyclic, has n - c elements and spans every component.
bool ValidateSpanningTree(const Graph& g, std::span<const Edge> edges);

absl::StatusOr<int> ShortestPathLength(const Graph& g, Node u, Node v);

bool IsBipartite(const Graph& g);

// Kahn's algorithm, always taking the smallest ready node.
absl::StatusOr<NodeSeqAnswer> TopoOrder(const Graph& g);
// True iff `order` is a permutation of all nodes with every edge pointing
// forward.
bool ValidateTopoOrder(const Graph& g, std::span<const Node> order);

// Query arguments of a task instance.
struct QueryArgs {
  std::optional<Node> source;
  std::optional<Node> target;

  friend bool operator==(const QueryArgs&, const QueryArgs&) = default;
};

// The canonical gold answer for `task`. For the MST and topological sorting
// tasks this is one representative; scoring uses the validators.
absl::StatusOr<Answer> ComputeGold(TaskKind task, const Graph& g,
                                   const QueryArgs& query);

}  // namespace graphbench

#endif  // GRAPHBENCH_ORACLES_H_
