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

#include "graphbench/prompt.h"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "graphbench/oracles.h"
#include "graphbench/rng.h"

namespace graphbench {
namespace {

std::optional<int> ParseShotCount(std::string_view text) {
  // "<k>-shot"
  if (!text.ends_with("-shot")) return std::nullopt;
  text.remove_suffix(5);
  int k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return k;
}

std::string Label(Node u, int base) { return absl::StrCat(u + base); }

}  // namespace

std::string Strategy::Label() const {
  switch (kind) {
    case StrategyKind::kZeroShot: return "0-shot";
    case StrategyKind::kKShot: return absl::StrCat(shots, "-shot");
    case StrategyKind::kBuildAGraph: return "BaG";
    case StrategyKind::kZeroCot: return "0-CoT";
    case StrategyKind::kPseudo:
    case StrategyKind::kPseudoKShot: {
      std::string label = "Pseudo";
      if (style != PseudoStyle::kPlain) {
        absl::StrAppend(&label, "[", std::string(StyleSlug(style)), "]");
      }
      if (kind == StrategyKind::kPseudoKShot) {
        absl::StrAppend(&label, "+", shots, "-shot");
      }
      return label;
    }
  }
  return "?";
}

absl::Status ValidateStrategy(const Strategy& strategy) {
  if (strategy.uses_exemplars() &&
      (strategy.shots < 1 || strategy.shots > kExemplarPoolSize)) {
    return absl::InvalidArgumentError(
        absl::StrCat("k-shot strategy needs 1 <= k <= ", kExemplarPoolSize,
                     ", got ", strategy.shots));
  }
  return absl::OkStatus();
}

absl::StatusOr<Strategy> ParseStrategyLabel(std::string_view label) {
  if (label == "0-shot") return Strategy::ZeroShot();
  if (label == "BaG") return Strategy::BuildAGraph();
  if (label == "0-CoT") return Strategy::ZeroCot();
  if (auto k = ParseShotCount(label); k.has_value() && *k >= 1) {
    return Strategy::KShot(*k);
  }
  if (label.starts_with("Pseudo")) {
    std::string_view rest = label.substr(6);
    PseudoStyle style = PseudoStyle::kPlain;
    if (rest.starts_with("[")) {
      const size_t close = rest.find(']');
      if (close == std::string_view::npos) {
        return absl::InvalidArgumentError(
            absl::StrCat("bad strategy label '", std::string(label), "'"));
      }
      auto parsed = ParseStyle(rest.substr(1, close - 1));
      if (!parsed.ok()) return parsed.status();
      style = *parsed;
      rest = rest.substr(close + 1);
    }
    if (rest.empty()) return Strategy::Pseudo(style);
    if (rest.starts_with("+")) {
      if (auto k = ParseShotCount(rest.substr(1)); k.has_value() && *k >= 1) {
        return Strategy::PseudoKShot(style, *k);
      }
    }
  }
  return absl::InvalidArgumentError(
      absl::StrCat("bad strategy label '", std::string(label), "'"));
}

absl::StatusOr<Strategy> ParseStrategyName(std::string_view name,
                                           PseudoStyle style, int shots) {
  Strategy strategy;
  if (name == "zero-shot" || name == "0-shot") {
    strategy = Strategy::ZeroShot();
  } else if (name == "k-shot" || name == "few-shot") {
    strategy = Strategy::KShot(shots);
  } else if (name == "one-shot" || name == "1-shot") {
    strategy = Strategy::KShot(1);
  } else if (name == "bag") {
    strategy = Strategy::BuildAGraph();
  } else if (name == "zero-cot" || name == "0-cot") {
    strategy = Strategy::ZeroCot();
  } else if (name == "pseudo") {
    strategy = Strategy::Pseudo(style);
  } else if (name == "pseudo-k-shot" || name == "pseudo+k-shot") {
    strategy = Strategy::PseudoKShot(style, shots);
  } else {
    return absl::InvalidArgumentError(absl::StrCat(
        "unknown strategy '", std::string(name),
        "' (expected zero-shot, k-shot, bag, zero-cot, pseudo, pseudo-k-shot)"));
  }
  if (auto s = ValidateStrategy(strategy); !s.ok()) return s;
  return strategy;
}

bool StrategyLess(const Strategy& a, const Strategy& b) {
  return std::tuple(a.kind, a.shots, a.style) <
         std::tuple(b.kind, b.shots, b.style);
}

std::string_view MstModeSlug(MstMode mode) {
  return mode == MstMode::kEdgeSet ? "edges" : "count";
}

absl::StatusOr<MstMode> ParseMstMode(std::string_view text) {
  if (text == "edges") return MstMode::kEdgeSet;
  if (text == "count") return MstMode::kCount;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown MST mode '", std::string(text), "' (expected edges or count)"));
}

AnswerConvention ConventionFor(TaskKind task, const RenderOptions& options) {
  AnswerConvention convention;
  convention.label_base = options.label_base.value_or(
      task == TaskKind::kTopologicalSort ? 1 : 0);
  convention.mst_mode = options.mst_mode;
  return convention;
}

Answer PosedGold(const TaskInstance& inst, const AnswerConvention& convention) {
  if (inst.task == TaskKind::kMinimumSpanningTree &&
      convention.mst_mode == MstMode::kCount) {
    return IntAnswer{inst.graph.node_count() - ConnectedComponents(inst.graph)};
  }
  return inst.gold;
}

std::string EncodeEdgeList(const Graph& g, int label_base) {
  std::string out = absl::StrCat("The graph has ", g.node_count(),
                                 " nodes, numbered ", label_base, "..",
                                 g.node_count() - 1 + label_base, ".");
  if (g.directed()) {
    absl::StrAppend(&out,
                    " The graph is directed: an edge (u, v) goes from node u "
                    "to node v.");
  }
  absl::StrAppend(&out, " Edges: ");
  if (g.edges().empty()) {
    absl::StrAppend(&out, "(none)");
  } else {
    absl::StrAppend(
        &out, absl::StrJoin(g.edges(), ", ", [&](std::string* s, const Edge& e) {
          absl::StrAppend(s, "(", Label(e.u, label_base), ", ",
                          Label(e.v, label_base), ")");
        }));
  }
  return out;
}

std::string TaskDescription(TaskKind task, const AnswerConvention& convention) {
  constexpr std::string_view kUndirected =
      "You are given an undirected graph as a list of edges.";
  switch (task) {
    case TaskKind::kNodeCount:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to count the number of nodes.");
    case TaskKind::kEdgeCount:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to count the number of edges.");
    case TaskKind::kNodeDegree:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to compute the degree of a node, "
                          "that is, how many edges touch it.");
    case TaskKind::kNeighbors:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to list every node that shares an "
                          "edge with a given node.");
    case TaskKind::kConnectedComponents:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to count the connected components. "
                          "A node without edges is a component by itself.");
    case TaskKind::kCycleCheck:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to decide whether the graph has a "
                          "cycle.");
    case TaskKind::kMinimumSpanningTree:
      if (convention.mst_mode == MstMode::kCount) {
        return absl::StrCat(
            std::string(kUndirected),
            " Your task is to find how many edges a minimum spanning tree "
            "has: a smallest set of edges that keeps every node reachable "
            "from every other node, without forming a cycle.");
      }
      return absl::StrCat(
          std::string(kUndirected),
          " Your task is to find a minimum spanning tree: a smallest set of "
          "edges that keeps every node reachable from every other node, "
          "without forming a cycle.");
    case TaskKind::kShortestPath:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to compute the length, in edges, of "
                          "the shortest path between two nodes.");
    case TaskKind::kBipartiteCheck:
      return absl::StrCat(std::string(kUndirected),
                          " Your task is to decide whether the graph is "
                          "bipartite, that is, whether its nodes can be split "
                          "into two groups with every edge joining the two "
                          "groups.");
    case TaskKind::kTopologicalSort:
      return "You are given a directed acyclic graph as a list of edges. Your "
             "task is to order all of its nodes so that every edge goes from "
             "a node earlier in the order to a node later in the order.";
  }
  return "";
}

std::string QuestionText(TaskKind task, const QueryArgs& query,
                         const AnswerConvention& convention) {
  const int base = convention.label_base;
  switch (task) {
    case TaskKind::kNodeCount:
      return "How many nodes does the graph have?";
    case TaskKind::kEdgeCount:
      return "How many edges does the graph have?";
    case TaskKind::kNodeDegree:
      return absl::StrCat("What is the degree of node ",
                          Label(query.source.value_or(0), base), "?");
    case TaskKind::kNeighbors:
      return absl::StrCat("Which nodes are adjacent to node ",
                          Label(query.source.value_or(0), base), "?");
    case TaskKind::kConnectedComponents:
      return "How many connected components does the graph have?";
    case TaskKind::kCycleCheck:
      return "Does the graph contain a cycle?";
    case TaskKind::kMinimumSpanningTree:
      return convention.mst_mode == MstMode::kCount
                 ? "How many edges does a minimum spanning tree of the graph "
                   "have?"
                 : "Which edges form a minimum spanning tree of the graph?";
    case TaskKind::kShortestPath:
      return absl::StrCat("What is the length of the shortest path between "
                          "node ",
                          Label(query.source.value_or(0), base), " and node ",
                          Label(query.target.value_or(0), base), "?");
    case TaskKind::kBipartiteCheck:
      return "Is the graph bipartite?";
    case TaskKind::kTopologicalSort:
      return "What is a topological ordering of the nodes?";
  }
  return "";
}

std::string AnswerFormatLine(TaskKind task, const AnswerConvention& convention) {
  AnswerShape shape = ShapeOf(task);
  if (task == TaskKind::kMinimumSpanningTree &&
      convention.mst_mode == MstMode::kCount) {
    shape = AnswerShape::kInt;
  }
  switch (shape) {
    case AnswerShape::kInt:
      return "End your response with a final line of the form "
             "\"Answer: <number>\".";
    case AnswerShape::kBool:
      return "End your response with a final line of the form "
             "\"Answer: yes\" or \"Answer: no\".";
    case AnswerShape::kNodeSet:
      return "End your response with a final line of the form "
             "\"Answer: [<node>, <node>, ...]\", or \"Answer: []\" if there "
             "are none.";
    case AnswerShape::kNodeSeq:
      return "End your response with a final line of the form "
             "\"Answer: <node>, <node>, ..., <node>\" listing every node "
             "exactly once.";
    case AnswerShape::kEdgeSet:
      return "End your response with a final line of the form "
             "\"Answer: [(<node>, <node>), (<node>, <node>), ...]\".";
  }
  return "";
}

absl::StatusOr<std::vector<Exemplar>> BuildExemplars(
    TaskKind task, const SizeBucket& bucket, int k, uint64_t exemplar_seed,
    const AnswerConvention& convention) {
  if (k < 1 || k > kExemplarPoolSize) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be in [1, ", kExemplarPoolSize, "], got ", k));
  }
  auto pool = ExemplarPool(task, bucket, exemplar_seed);
  if (!pool.ok()) return pool.status();
  std::vector<Exemplar> exemplars;
  for (int i = 0; i < k; ++i) {
    const TaskInstance& inst = (*pool)[i];
    Exemplar ex;
    ex.graph = inst.graph;
    ex.question =
        absl::StrCat(EncodeEdgeList(inst.graph, convention.label_base),
                     "\nQuestion: ", QuestionText(task, inst.query, convention));
    ex.answer = absl::StrCat(
        "Answer: ",
        FormatAnswer(PosedGold(inst, convention), convention.label_base));
    exemplars.push_back(std::move(ex));
  }
  return exemplars;
}

std::string FormatExemplars(std::span<const Exemplar> exemplars) {
  std::string out;
  for (size_t i = 0; i < exemplars.size(); ++i) {
    absl::StrAppend(&out, "\nExample ", i + 1, ":\n", exemplars[i].question,
                    "\n", exemplars[i].answer, "\n");
  }
  return out;
}

absl::StatusOr<PromptBundle> RenderPrompt(const TaskInstance& inst,
                                          const Strategy& strategy,
                                          const RenderOptions& options) {
  if (auto s = ValidateStrategy(strategy); !s.ok()) return s;
  const AnswerConvention convention = ConventionFor(inst.task, options);

  std::string text = TaskDescription(inst.task, convention);
  if (strategy.kind == StrategyKind::kBuildAGraph) {
    absl::StrAppend(&text, " ", std::string(kBuildAGraphSentence));
  }
  if (strategy.kind == StrategyKind::kZeroCot) {
    absl::StrAppend(&text, " ", std::string(kZeroCotSentence));
  }
  text.push_back('\n');

  if (strategy.uses_pseudocode()) {
    auto code = PseudocodeFor(inst.task, strategy.style);
    if (!code.ok()) return code.status();
    absl::StrAppend(&text, "\nPseudo-code:\n```\n", std::string(*code), "```\n");
  }
  if (strategy.uses_exemplars()) {
    const uint64_t seed = DeriveExemplarSeed(options.exemplar_master_seed,
                                             inst.task, inst.bucket.name);
    auto exemplars = BuildExemplars(inst.task, inst.bucket, strategy.shots,
                                    seed, convention);
    if (!exemplars.ok()) return exemplars.status();
    absl::StrAppend(&text, FormatExemplars(*exemplars));
  }
  absl::StrAppend(&text, "\n", EncodeEdgeList(inst.graph, convention.label_base),
                  "\nQuestion: ", QuestionText(inst.task, inst.query, convention),
                  "\n", AnswerFormatLine(inst.task, convention), "\n");

  PromptBundle bundle;
  bundle.text = std::move(text);
  bundle.strategy = strategy;
  bundle.task = inst.task;
  bundle.instance_id = inst.id;
  bundle.convention = convention;
  return bundle;
}

}  // namespace graphbench
