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

#ifndef GRAPHBENCH_TASK_H_
#define GRAPHBENCH_TASK_H_

#include <array>
#include <cstdint>
#include <string_view>

#include "absl/status/statusor.h"

namespace graphbench {

// The ten benchmark tasks, in the order they appear in reports.
enum class TaskKind : uint8_t {
  kNodeCount,
  kEdgeCount,
  kNodeDegree,
  kNeighbors,
  kConnectedComponents,
  kCycleCheck,
  kMinimumSpanningTree,
  kShortestPath,
  kBipartiteCheck,
  kTopologicalSort,
};

inline constexpr std::array<TaskKind, 10> kAllTasks = {
    TaskKind::kNodeCount,           TaskKind::kEdgeCount,
    TaskKind::kNodeDegree,          TaskKind::kNeighbors,
    TaskKind::kConnectedComponents, TaskKind::kCycleCheck,
    TaskKind::kMinimumSpanningTree, TaskKind::kShortestPath,
    TaskKind::kBipartiteCheck,      TaskKind::kTopologicalSort,
};

// How many query arguments an instance of the task carries.
enum class TaskScope : uint8_t {
  kGraph,     // no arguments
  kNode,      // one node
  kNodePair,  // two distinct nodes in one component
};

// Shape of the gold answer.
enum class AnswerShape : uint8_t { kInt, kBool, kNodeSet, kNodeSeq, kEdgeSet };

// Stable identifier used in instance ids, file names and the CLI,
// e.g. "shortest_path".
std::string_view TaskSlug(TaskKind task);
absl::StatusOr<TaskKind> ParseTaskSlug(std::string_view slug);

// Column header used in report tables, e.g. "Shortest path".
std::string_view TaskDisplayName(TaskKind task);

TaskScope ScopeOf(TaskKind task);
AnswerShape ShapeOf(TaskKind task);

// True for tasks whose graphs are directed.
inline bool IsDirectedTask(TaskKind task) {
  return task == TaskKind::kTopologicalSort;
}

}  // namespace graphbench

#endif  // GRAPHBENCH_TASK_H_
