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

// Answer extraction from free-form model responses.
//
// Every shape first looks at the text after the last "Answer:" sentinel
// (case-insensitive, markdown emphasis tolerated). Without a usable
// sentinel it falls back to a shape-specific search:
//
//   Int      last integer on the sentinel line, ignoring (...) and [...]
//            asides; number words zero..twenty are accepted there. Fallback:
//            last integer in the trailing window, then in the whole text.
//   Bool     yes/no/true/false after the sentinel, else the last task phrase
//            ("contains a cycle" / "no cycle", "is bipartite" /
//            "not bipartite", ...), else a leading yes/no, else the last
//            yes/no in the trailing window.
//   NodeSet  bracketed or bare list after the sentinel ("none" = empty),
//            else the last [...] or {...} list of integers.
//   EdgeSet  every (u, v) pair after the sentinel, else the last [...] or
//            {...} list holding pairs.
//   NodeSeq  integer runs joined by ",", ";", "->", "→" or spaces; the last
//            run covering every node label wins, else the sentinel's run.
//
// Labels are returned exactly as written; the scorer removes the label base.

#ifndef GRAPHBENCH_EXTRACT_H_
#define GRAPHBENCH_EXTRACT_H_

#include <cstddef>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "graphbench/answer.h"
#include "graphbench/prompt.h"
#include "graphbench/task.h"

namespace graphbench {

inline constexpr size_t kDefaultTrailingWindow = 512;

struct ExtractionContext {
  // Needed by NodeSeq to recognise a run covering every node; 0 disables
  // the coverage preference.
  int node_count = 0;
  int label_base = 0;
  MstMode mst_mode = MstMode::kEdgeSet;
  size_t trailing_window = kDefaultTrailingWindow;
};

// Answer shape expected for `task` under `mst_mode`.
AnswerShape ExpectedShape(TaskKind task, MstMode mst_mode);

// Fails with kNotFound when no candidate parse exists. Never throws.
absl::StatusOr<Answer> ExtractAnswer(TaskKind task, std::string_view response,
                                     const ExtractionContext& context);

}  // namespace graphbench

#endif  // GRAPHBENCH_EXTRACT_H_
