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

#include "graphbench/answer.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace graphbench {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Node> Shift(const std::vector<Node>& nodes, int offset) {
  std::vector<Node> out;
  out.reserve(nodes.size());
  for (Node n : nodes) out.push_back(n + offset);
  return out;
}

}  // namespace

AnswerShape ShapeOf(const Answer& answer) {
  return std::visit(
      Overloaded{
          [](const IntAnswer&) { return AnswerShape::kInt; },
          [](const BoolAnswer&) { return AnswerShape::kBool; },
          [](const NodeSetAnswer&) { return AnswerShape::kNodeSet; },
          [](const NodeSeqAnswer&) { return AnswerShape::kNodeSeq; },
          [](const EdgeSetAnswer&) { return AnswerShape::kEdgeSet; },
      },
      answer);
}

NodeSetAnswer MakeNodeSet(std::vector<Node> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return NodeSetAnswer{std::move(nodes)};
}

Answer ShiftLabels(const Answer& answer, int offset) {
  return std::visit(
      Overloaded{
          [](const IntAnswer& a) -> Answer { return a; },
          [](const BoolAnswer& a) -> Answer { return a; },
          [&](const NodeSetAnswer& a) -> Answer {
            return NodeSetAnswer{Shift(a.nodes, offset)};
          },
          [&](const NodeSeqAnswer& a) -> Answer {
            return NodeSeqAnswer{Shift(a.nodes, offset)};
          },
          [&](const EdgeSetAnswer& a) -> Answer {
            EdgeSetAnswer out;
            for (const Edge& e : a.edges) {
              out.edges.push_back({e.u + offset, e.v + offset});
            }
            return out;
          },
      },
      answer);
}

std::string FormatAnswer(const Answer& answer, int label_base) {
  const Answer shifted = ShiftLabels(answer, label_base);
  return std::visit(
      Overloaded{
          [](const IntAnswer& a) { return absl::StrCat(a.value); },
          [](const BoolAnswer& a) { return std::string(a.value ? "yes" : "no"); },
          [](const NodeSetAnswer& a) {
            return absl::StrCat("[", absl::StrJoin(a.nodes, ", "), "]");
          },
          [](const NodeSeqAnswer& a) { return absl::StrJoin(a.nodes, ", "); },
          [](const EdgeSetAnswer& a) {
            return absl::StrCat(
                "[",
                absl::StrJoin(a.edges, ", ",
                              [](std::string* out, const Edge& e) {
                                absl::StrAppend(out, "(", e.u, ", ", e.v, ")");
                              }),
                "]");
          },
      },
      shifted);
}

}  // namespace graphbench
