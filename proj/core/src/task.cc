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

#include "graphbench/task.h"

#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace graphbench {

std::string_view TaskSlug(TaskKind task) {
  switch (task) {
    case TaskKind::kNodeCount: return "node_count";
    case TaskKind::kEdgeCount: return "edge_count";
    case TaskKind::kNodeDegree: return "node_degree";
    case TaskKind::kNeighbors: return "neighbors";
    case TaskKind::kConnectedComponents: return "connected_components";
    case TaskKind::kCycleCheck: return "cycle_check";
    case TaskKind::kMinimumSpanningTree: return "mst";
    case TaskKind::kShortestPath: return "shortest_path";
    case TaskKind::kBipartiteCheck: return "bipartite_check";
    case TaskKind::kTopologicalSort: return "topological_sort";
  }
  return "unknown";
}

absl::StatusOr<TaskKind> ParseTaskSlug(std::string_view slug) {
  for (TaskKind task : kAllTasks) {
    if (TaskSlug(task) == slug) return task;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown task '", std::string(slug), "'"));
}

std::string_view TaskDisplayName(TaskKind task) {
  switch (task) {
    case TaskKind::kNodeCount: return "Node count";
    case TaskKind::kEdgeCount: return "Edge count";
    case TaskKind::kNodeDegree: return "Node degree";
    case TaskKind::kNeighbors: return "Neighbors";
    case TaskKind::kConnectedComponents: return "Connected components";
    case TaskKind::kCycleCheck: return "Cycle check";
    case TaskKind::kMinimumSpanningTree: return "MST";
    case TaskKind::kShortestPath: return "Shortest path";
    case TaskKind::kBipartiteCheck: return "Bipartite check";
    case TaskKind::kTopologicalSort: return "Topological sorting";
  }
  return "unknown";
}

TaskScope ScopeOf(TaskKind task) {
  switch (task) {
    case TaskKind::kNodeDegree:
    case TaskKind::kNeighbors:
      return TaskScope::kNode;
    case TaskKind::kShortestPath:
      return TaskScope::kNodePair;
    default:
      return TaskScope::kGraph;
  }
}

AnswerShape ShapeOf(TaskKind task) {
  switch (task) {
    case TaskKind::kCycleCheck:
    case TaskKind::kBipartiteCheck:
      return AnswerShape::kBool;
    case TaskKind::kNeighbors:
      return AnswerShape::kNodeSet;
    case TaskKind::kTopologicalSort:
      return AnswerShape::kNodeSeq;
    case TaskKind::kMinimumSpanningTree:
      return AnswerShape::kEdgeSet;
    default:
      return AnswerShape::kInt;
  }
}

}  // namespace graphbench
