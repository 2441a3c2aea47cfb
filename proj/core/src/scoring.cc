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


#include "graphbench/scoring.h"

#include <string>
#include <utility>
#include <variant>

#include "absl/strings/str_cat.h"

#include "graphbench/extract.h"
#include "graphbench/oracles.h"
#include "json_codec.h"

namespace graphbench {

using internal::Json;

std::string_view FailureKindSlug(FailureKind kind) {
  switch (kind) {
    case FailureKind::kNone: return "none";
    case FailureKind::kWrongAnswer: return "wrong_answer";
    case FailureKind::kExtractionFailed: return "extraction_failed";
    case FailureKind::kBackendError: return "backend_error";
  }
  return "unknown";
}

absl::StatusOr<FailureKind> ParseFailureKind(std::string_view text) {
  for (FailureKind kind :
       {FailureKind::kNone, FailureKind::kWrongAnswer,
        FailureKind::kExtractionFailed, FailureKind::kBackendError}) {
    if (FailureKindSlug(kind) == text) return kind;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown failure kind '", std::string(text), "'"));
}

bool ScoreInstance(const TaskInstance& inst, const Answer& answer,
                   const AnswerConvention& convention) {
  const Answer shifted = ShiftLabels(answer, -convention.label_base);
  switch (inst.task) {
    case TaskKind::kMinimumSpanningTree: {
      if (convention.mst_mode == MstMode::kCount) {
        return shifted == PosedGold(inst, convention);
      }
      const auto* edges = std::get_if<EdgeSetAnswer>(&shifted);
      return edges != nullptr && ValidateSpanningTree(inst.graph, edges->edges);
    }
    case TaskKind::kTopologicalSort: {
      const auto* order = std::get_if<NodeSeqAnswer>(&shifted);
      return order != nullptr && ValidateTopoOrder(inst.graph, order->nodes);
    }
    case TaskKind::kNeighbors: {
      const auto* set = std::get_if<NodeSetAnswer>(&shifted);
      return set != nullptr && Answer{MakeNodeSet(set->nodes)} == inst.gold;
    }
    default:
      return shifted == inst.gold;
  }
}

EvalRecord EvaluateResponse(const TaskInstance& inst, std::string_view strategy,
                            const AnswerConvention& convention,
                            std::string_view response) {
  EvalRecord record{.instance_id = inst.id,
                    .task = inst.task,
                    .bucket = inst.bucket.name,
                    .strategy = std::string(strategy),
                    .convention = convention};
  const ExtractionContext ctx{.node_count = inst.graph.node_count(),
                              .label_base = convention.label_base,
                              .mst_mode = convention.mst_mode};
  absl::StatusOr<Answer> parsed = ExtractAnswer(inst.task, response, ctx);
  if (!parsed.ok()) {
    record.failure = FailureKind::kExtractionFailed;
    record.detail = std::string(parsed.status().message());
    return record;
  }
  record.correct = ScoreInstance(inst, *parsed, convention);
  record.failure = record.correct ? FailureKind::kNone : FailureKind::kWrongAnswer;
  record.parsed = *std::move(parsed);
  return record;
}

EvalRecord BackendFailureRecord(const TaskInstance& inst,
                                std::string_view strategy,
                                const AnswerConvention& convention,
                                std::string_view message) {
  return EvalRecord{.instance_id = inst.id,
                    .task = inst.task,
                    .bucket = inst.bucket.name,
                    .strategy = std::string(strategy),
                    .convention = convention,
                    .correct = false,
                    .failure = FailureKind::kBackendError,
                    .detail = std::string(message)};
}

std::string SerializeRecord(const EvalRecord& record) {
  Json j;
  j["id"] = record.instance_id;
  j["task"] = std::string(TaskSlug(record.task));
  j["bucket"] = std::string(BucketSlug(record.bucket));
  j["strategy"] = record.strategy;
  j["label_base"] = record.convention.label_base;
  j["mst_mode"] = std::string(MstModeSlug(record.convention.mst_mode));
  j["parsed"] = record.parsed ? internal::AnswerToJson(*record.parsed) : Json();
  j["correct"] = record.correct;
  j["failure"] = std::string(FailureKindSlug(record.failure));
  if (!record.detail.empty()) j["detail"] = record.detail;
  return j.dump();
}

absl::StatusOr<EvalRecord> ParseRecord(std::string_view line) {
  absl::StatusOr<Json> parsed = internal::ParseJson(line);
  if (!parsed.ok()) return parsed.status();
  const Json& j = *parsed;
  auto str = [&](const char* key) -> absl::StatusOr<std::string> {
    if (!j.is_object() || !j.contains(key) || !j[key].is_string()) {
      return absl::DataLossError(absl::StrCat("record lacks string '", key, "'"));
    }
    return j[key].get<std::string>();
  };
  EvalRecord record;
  absl::StatusOr<std::string> id = str("id");
  if (!id.ok()) return id.status();
  record.instance_id = *id;

  absl::StatusOr<std::string> task = str("task");
  if (!task.ok()) return task.status();
  absl::StatusOr<TaskKind> kind = ParseTaskSlug(*task);
  if (!kind.ok()) return kind.status();
  record.task = *kind;

  absl::StatusOr<std::string> bucket = str("bucket");
  if (!bucket.ok()) return bucket.status();
  absl::StatusOr<SizeBucket> sb = StandardBucket(*bucket);
  if (!sb.ok()) return sb.status();
  record.bucket = sb->name;

  absl::StatusOr<std::string> strategy = str("strategy");
  if (!strategy.ok()) return strategy.status();
  record.strategy = *strategy;

  if (!j.contains("label_base") || !j["label_base"].is_number_integer()) {
    return absl::DataLossError("record lacks integer 'label_base'");
  }
  record.convention.label_base = j["label_base"].get<int>();
  absl::StatusOr<std::string> mst = str("mst_mode");
  if (!mst.ok()) return mst.status();
  absl::StatusOr<MstMode> mode = ParseMstMode(*mst);
  if (!mode.ok()) return mode.status();
  record.convention.mst_mode = *mode;

  if (j.contains("parsed") && !j["parsed"].is_null()) {
    absl::StatusOr<Answer> answer = internal::AnswerFromJson(j["parsed"]);
    if (!answer.ok()) return answer.status();
    record.parsed = *std::move(answer);
  }
  if (!j.contains("correct") || !j["correct"].is_boolean()) {
    return absl::DataLossError("record lacks boolean 'correct'");
  }
  record.correct = j["correct"].get<bool>();
  absl::StatusOr<std::string> failure = str("failure");
  if (!failure.ok()) return failure.status();
  absl::StatusOr<FailureKind> fk = ParseFailureKind(*failure);
  if (!fk.ok()) return fk.status();
  record.failure = *fk;
  if (j.contains("detail") && j["detail"].is_string()) {
    record.detail = j["detail"].get<std::string>();
  }
  if (record.correct && record.failure != FailureKind::kNone) {
    return absl::DataLossError("correct record carries a failure kind");
  }
  return record;
}

}  // namespace graphbench
