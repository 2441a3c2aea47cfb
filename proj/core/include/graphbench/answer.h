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

#ifndef GRAPHBENCH_ANSWER_H_
#define GRAPHBENCH_ANSWER_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "graphbench/graph.h"
#include "graphbench/task.h"

namespace graphbench {

struct IntAnswer {
  int64_t value = 0;
  friend bool operator==(const IntAnswer&, const IntAnswer&) = default;
};

struct BoolAnswer {
  bool value = false;
  friend bool operator==(const BoolAnswer&, const BoolAnswer&) = default;
};

// Sorted, duplicate-free.
struct NodeSetAnswer {
  std::vector<Node> nodes;
  friend bool operator==(const NodeSetAnswer&, const NodeSetAnswer&) = default;
};

// Order matters; duplicates are preserved so malformed orders can be scored.
struct NodeSeqAnswer {
  std::vector<Node> nodes;
  friend bool operator==(const NodeSeqAnswer&, const NodeSeqAnswer&) = default;
};

// Pairs as given; canonicalization happens in the validator.
struct EdgeSetAnswer {
  std::vector<Edge> edges;
  friend bool operator==(const EdgeSetAnswer&, const EdgeSetAnswer&) = default;
};

using Answer =
    std::variant<IntAnswer, BoolAnswer, NodeSetAnswer, NodeSeqAnswer,
                 EdgeSetAnswer>;

AnswerShape ShapeOf(const Answer& answer);

NodeSetAnswer MakeNodeSet(std::vector<Node> nodes);

// Adds `offset` to every node label in the answer.
Answer ShiftLabels(const Answer& answer, int offset);

// Text a well-behaved model would place after "Answer: ".
//   Int      "4"
//   Bool     "yes" / "no"
//   NodeSet  "[1, 3, 4]"
//   NodeSeq  "2, 0, 1, 3"
//   EdgeSet  "[(0, 1), (1, 2)]"
// Labels are shifted by `label_base`.
std::string FormatAnswer(const Answer& answer, int label_base);

}  // namespace graphbench

#endif  // GRAPHBENCH_ANSWER_H_
