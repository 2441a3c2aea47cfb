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


// Pipeline stages behind the graphbench command line.

#ifndef GRAPHBENCH_TOOLS_COMMANDS_H_
#define GRAPHBENCH_TOOLS_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "graphbench/backends.h"
#include "graphbench/client.h"
#include "graphbench/dataset.h"
#include "graphbench/prompt.h"
#include "graphbench/report.h"
#include "graphbench/scoring.h"

namespace graphbench::cli {

inline constexpr std::string_view kPromptsFile = "prompts.jsonl";
inline constexpr std::string_view kTranscriptsFile = "transcripts.jsonl";
inline constexpr std::string_view kRecordsFile = "records.jsonl";
inline constexpr std::string_view kCacheFile = "cache.jsonl";
inline constexpr std::string_view kSummaryFile = "run_summary.json";

// Comma-separated lists; "all" selects everything.
absl::StatusOr<std::vector<TaskKind>> ParseTaskList(std::string_view text);
absl::StatusOr<std::vector<SizeBucket>> ParseBucketList(std::string_view text);

// Cross product of strategy names with pseudo-code styles and shot counts.
// Strategies that take neither are listed once.
absl::StatusOr<std::vector<Strategy>> ExpandStrategies(
    const std::vector<std::string>& names,
    const std::vector<std::string>& styles, const std::vector<int>& shots);

struct GenerateOptions {
  uint64_t seed = 0;
  std::filesystem::path out;
  std::vector<TaskKind> tasks{kAllTasks.begin(), kAllTasks.end()};
  std::vector<SizeBucket> buckets{std::begin(kAllBuckets),
                                  std::end(kAllBuckets)};
  int graphs_per_cell = 100;
  int queries_per_graph = 5;
};

// Writes dataset + manifest and prints per-cell counts and the total.
absl::StatusOr<DatasetManifest> CmdGenerate(const GenerateOptions& options,
                                            std::ostream& log);

struct RunConfig {
  std::filesystem::path dataset;
  std::vector<TaskKind> tasks{kAllTasks.begin(), kAllTasks.end()};
  std::vector<SizeBucket> buckets{std::begin(kAllBuckets),
                                  std::end(kAllBuckets)};
  std::vector<Strategy> strategies;
  std::optional<int> label_base;
  MstMode mst_mode = MstMode::kEdgeSet;
  BackendKind backend = BackendKind::kMockOracle;
  ModelConfig model;
  int parallel = 4;
  std::filesystem::path out;
  std::optional<std::filesystem::path> cache;  // default: <out>/cache.jsonl
  // Replaces the backend named by `backend`; not owned. For tests.
  Backend* backend_override = nullptr;
};

absl::Status ValidateRunConfig(const RunConfig& config);

// Writes prompts.jsonl: one rendered prompt per (instance, strategy).
absl::StatusOr<int> CmdRender(const RunConfig& config, std::ostream& log);

struct RunSummary {
  int prompts = 0;
  int cache_hits = 0;
  int backend_errors = 0;
  int correct = 0;
};

// Renders, executes, scores and reports. Backend failures become
// backend_error records. Re-running reuses the cache, so only prompts
// without a cached response are sent again.
absl::StatusOr<RunSummary> CmdRun(const RunConfig& config, std::ostream& log);

// Re-scores transcripts into records.
absl::StatusOr<std::vector<EvalRecord>> CmdScore(
    const std::filesystem::path& dataset,
    const std::filesystem::path& transcripts,
    const std::filesystem::path& records_out);

// Aggregates records into a report file.
absl::Status CmdReport(const std::filesystem::path& dataset,
                       const std::filesystem::path& records,
                       ReportFormat format, const std::filesystem::path& out);

}  // namespace graphbench::cli

#endif  // GRAPHBENCH_TOOLS_COMMANDS_H_
