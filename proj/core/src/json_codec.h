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

// nlohmann::json converters shared by the dataset, cache and report code.

#ifndef GRAPHBENCH_SRC_JSON_CODEC_H_
#define GRAPHBENCH_SRC_JSON_CODEC_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "graphbench/answer.h"
#include "graphbench/graph.h"
#include "graphbench/oracles.h"
#include "json.hpp"

namespace graphbench::internal {

using Json = nlohmann::ordered_json;

Json AnswerToJson(const Answer& answer);
absl::StatusOr<Answer> AnswerFromJson(const Json& j);

Json GraphToJson(const Graph& g);
absl::StatusOr<Graph> GraphFromJson(const Json& j);

Json QueryToJson(const QueryArgs& query);
absl::StatusOr<QueryArgs> QueryFromJson(const Json& j);

// 64-bit values travel as decimal strings so readers without 64-bit
// integers keep full precision.
std::string SeedToString(uint64_t seed);
absl::StatusOr<uint64_t> SeedFromString(const std::string& text);

absl::StatusOr<Json> ParseJson(std::string_view text);

}  // namespace graphbench::internal

#endif  // GRAPHBENCH_SRC_JSON_CODEC_H_
