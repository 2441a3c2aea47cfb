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


// Accuracy aggregation and table emission.

#ifndef GRAPHBENCH_REPORT_H_
#define GRAPHBENCH_REPORT_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>

#include "absl/status/statusor.h"
#include "graphbench/dataset.h"
#include "graphbench/graph.h"
#include "graphbench/scoring.h"
#include "graphbench/task.h"

namespace graphbench {

struct CellKey {
  TaskKind task = TaskKind::kNodeCount;
  BucketName bucket = BucketName::kS;
  std::string strategy;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct CellStats {
  int correct = 0;
  int total = 0;
  int wrong_answer = 0;
  int extraction_failed = 0;
  int backend_error = 0;

  double accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / total;
  }
  friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct RunMetadata {
  std::string model;
  uint64_t master_seed = 0;
  std::string timestamp;  // never emitted into tables

  friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

struct EvalReport {
  std::map<CellKey, CellStats> cells;
  RunMetadata metadata;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct AggregateOptions {
  // Every (task, bucket, strategy) cell that has records must cover the
  // dataset cell completely.
  bool require_complete = true;
};

// Fails on a record whose id is not in `instances`, on a duplicate id within
// one strategy, and (optionally) on partially covered cells. The result does
// not depend on record order.
absl::StatusOr<EvalReport> AggregateReport(
    std::span<const EvalRecord> records,
    std::span<const TaskInstance> instances, const AggregateOptions& options = {});

enum class ReportFormat : uint8_t { kMarkdown, kCsv };

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view text);
std::string_view ReportFormatExtension(ReportFormat format);  // "md", "csv"

// Rounds correct/total to a whole percent, halves up.
int RoundedPercent(int correct, int total);

// Rows are buckets × strategies, columns are tasks. The best strategy per
// (bucket, task) is marked when at least two strategies ran; ties are all
// marked. A failure-count table follows the accuracy table.
std::string EmitReport(const EvalReport& report, ReportFormat format);

}  // namespace graphbench

#endif  // GRAPHBENCH_REPORT_H_
