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


// Scoring of parsed answers against gold.

#ifndef GRAPHBENCH_SCORING_H_
#define GRAPHBENCH_SCORING_H_

#include <optional>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "graphbench/answer.h"
#include "graphbench/dataset.h"
#include "graphbench/graph.h"
#include "graphbench/prompt.h"
#include "graphbench/task.h"

namespace graphbench {

enum class FailureKind : uint8_t {
  kNone,
  kWrongAnswer,
  kExtractionFailed,
  kBackendError,
};

std::string_view FailureKindSlug(FailureKind kind);
absl::StatusOr<FailureKind> ParseFailureKind(std::string_view text);

struct EvalRecord {
  std::string instance_id;
  TaskKind task = TaskKind::kNodeCount;
  BucketName bucket = BucketName::kS;
  std::string strategy;  // Strategy::Label()
  AnswerConvention convention;
  std::optional<Answer> parsed;  // labels as written by the model
  bool correct = false;          // implies failure == kNone
  FailureKind failure = FailureKind::kWrongAnswer;
  std::string detail;  // extraction or backend error message

  friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

// True iff `answer`, written under `convention`, answers `inst`. A shape
// mismatch is simply incorrect.
bool ScoreInstance(const TaskInstance& inst, const Answer& answer,
                   const AnswerConvention& convention = {});

// Extracts and scores one raw response.
EvalRecord EvaluateResponse(const TaskInstance& inst, std::string_view strategy,
                            const AnswerConvention& convention,
                            std::string_view response);

// Record for a call that never produced a response.
EvalRecord BackendFailureRecord(const TaskInstance& inst,
                                std::string_view strategy,
                                const AnswerConvention& convention,
                                std::string_view message);

std::string SerializeRecord(const EvalRecord& record);
absl::StatusOr<EvalRecord> ParseRecord(std::string_view line);

}  // namespace graphbench

#endif  // GRAPHBENCH_SCORING_H_
