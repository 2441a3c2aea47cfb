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

// Prompt rendering for the six prompting strategies.
//
// A rendered prompt is laid out as
//
//   <task description>[ <BaG sentence>][ <0-CoT sentence>]
//
//   [Pseudo-code: fenced block]              Pseudo, Pseudo+k-shot
//
//   [Example i: graph, question, answer]     k-shot, Pseudo+k-shot
//
//   <edge-list encoding of the query graph>
//   Question: <question>
//   <answer format line>
//
// so Pseudo and Pseudo+k-shot prompts for one instance differ only by the
// example blocks. Rendering is a pure function of its inputs.

#ifndef GRAPHBENCH_PROMPT_H_
#define GRAPHBENCH_PROMPT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "graphbench/answer.h"
#include "graphbench/dataset.h"
#include "graphbench/graph.h"
#include "graphbench/pseudocode.h"
#include "graphbench/task.h"

namespace graphbench {

inline constexpr std::string_view kBuildAGraphSentence =
    "Let's construct a graph with the nodes and edges first.";
inline constexpr std::string_view kZeroCotSentence = "Let's think step by step.";
inline constexpr std::string_view kEdgeListEncoding = "edge_list";

enum class StrategyKind : uint8_t {
  kZeroShot,
  kKShot,
  kBuildAGraph,
  kZeroCot,
  kPseudo,
  kPseudoKShot,
};

struct Strategy {
  StrategyKind kind = StrategyKind::kZeroShot;
  PseudoStyle style = PseudoStyle::kPlain;  // Pseudo* only
  int shots = 0;                            // *KShot only, >= 1

  static Strategy ZeroShot() { return {StrategyKind::kZeroShot}; }
  static Strategy KShot(int k) { return {StrategyKind::kKShot, PseudoStyle::kPlain, k}; }
  static Strategy BuildAGraph() { return {StrategyKind::kBuildAGraph}; }
  static Strategy ZeroCot() { return {StrategyKind::kZeroCot}; }
  static Strategy Pseudo(PseudoStyle style = PseudoStyle::kPlain) {
    return {StrategyKind::kPseudo, style, 0};
  }
  static Strategy PseudoKShot(PseudoStyle style, int k) {
    return {StrategyKind::kPseudoKShot, style, k};
  }

  bool uses_pseudocode() const {
    return kind == StrategyKind::kPseudo || kind == StrategyKind::kPseudoKShot;
  }
  bool uses_exemplars() const {
    return kind == StrategyKind::kKShot || kind == StrategyKind::kPseudoKShot;
  }

  // Report row label: "0-shot", "3-shot", "BaG", "0-CoT", "Pseudo",
  // "Pseudo+1-shot". Non-default styles are bracketed: "Pseudo[python]".
  std::string Label() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

absl::Status ValidateStrategy(const Strategy& strategy);
// Inverse of Strategy::Label().
absl::StatusOr<Strategy> ParseStrategyLabel(std::string_view label);
// CLI names: zero-shot, k-shot, bag, zero-cot, pseudo, pseudo-k-shot.
// `style` and `shots` fill in the parameters of the strategies that take them.
absl::StatusOr<Strategy> ParseStrategyName(std::string_view name,
                                           PseudoStyle style, int shots);
// Total order used for report rows.
bool StrategyLess(const Strategy& a, const Strategy& b);

// How the MST question is posed and scored.
enum class MstMode : uint8_t {
  kEdgeSet,  // list the tree's edges; checked with the spanning-tree validator
  kCount,    // give the number of tree edges; gold is n - c
};

std::string_view MstModeSlug(MstMode mode);  // "edges", "count"
absl::StatusOr<MstMode> ParseMstMode(std::string_view text);

// Everything the scorer must know about how labels and answers were posed.
struct AnswerConvention {
  int label_base = 0;
  MstMode mst_mode = MstMode::kEdgeSet;

  friend bool operator==(const AnswerConvention&,
                         const AnswerConvention&) = default;
};

struct RenderOptions {
  // Unset: 1-based for topological sorting, 0-based otherwise.
  std::optional<int> label_base;
  MstMode mst_mode = MstMode::kEdgeSet;
  // Master seed for exemplar generation, normally the dataset's master seed.
  uint64_t exemplar_master_seed = 0;
};

AnswerConvention ConventionFor(TaskKind task, const RenderOptions& options);

// The gold answer as posed under `convention`. Identical to inst.gold except
// for MST in count mode, where it is IntAnswer{n - c}. Labels stay 0-based.
Answer PosedGold(const TaskInstance& inst, const AnswerConvention& convention);

struct PromptBundle {
  std::string text;
  Strategy strategy;
  TaskKind task = TaskKind::kNodeCount;
  std::string instance_id;
  std::string encoding{kEdgeListEncoding};
  AnswerConvention convention;
};

// "The graph has N nodes, numbered A..B. Edges: (u1, v1), (u2, v2)".
// Directed graphs add a sentence stating edge direction. Edges appear in
// canonical sorted order; an empty list renders as "(none)".
std::string EncodeEdgeList(const Graph& g, int label_base);

std::string TaskDescription(TaskKind task, const AnswerConvention& convention);
std::string QuestionText(TaskKind task, const QueryArgs& query,
                         const AnswerConvention& convention);
std::string AnswerFormatLine(TaskKind task, const AnswerConvention& convention);

struct Exemplar {
  Graph graph;
  std::string question;  // encoding + "Question: ..." line
  std::string answer;    // "Answer: <value>"
};

// The first `k` graphs of ExemplarPool(), rendered as worked examples.
absl::StatusOr<std::vector<Exemplar>> BuildExemplars(
    TaskKind task, const SizeBucket& bucket, int k, uint64_t exemplar_seed,
    const AnswerConvention& convention);

// The example section exactly as it appears inside a prompt.
std::string FormatExemplars(std::span<const Exemplar> exemplars);

absl::StatusOr<PromptBundle> RenderPrompt(const TaskInstance& inst,
                                          const Strategy& strategy,
                                          const RenderOptions& options = {});

}  // namespace graphbench

#endif  // GRAPHBENCH_PROMPT_H_
