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


#include "graphbench/report.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "graphbench/prompt.h"

namespace graphbench {
namespace {

constexpr std::string_view kEmptyCell = "—";

bool StrategyLabelLess(const std::string& a, const std::string& b) {
  absl::StatusOr<Strategy> sa = ParseStrategyLabel(a);
  absl::StatusOr<Strategy> sb = ParseStrategyLabel(b);
  if (sa.ok() && sb.ok()) {
    if (StrategyLess(*sa, *sb)) return true;
    if (StrategyLess(*sb, *sa)) return false;
    return a < b;
  }
  if (sa.ok() != sb.ok()) return sa.ok();  // known strategies first
  return a < b;
}

// a/b > c/d with non-negative integers and positive denominators.
int CompareFractions(const CellStats& x, const CellStats& y) {
  const int64_t lhs = static_cast<int64_t>(x.correct) * y.total;
  const int64_t rhs = static_cast<int64_t>(y.correct) * x.total;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

struct Layout {
  std::vector<TaskKind> tasks;
  std::vector<BucketName> buckets;
  std::vector<std::string> strategies;
  std::set<CellKey> best;
};

Layout MakeLayout(const EvalReport& report) {
  Layout layout;
  std::set<TaskKind> tasks;
  std::set<BucketName> buckets;
  std::set<std::string> strategies;
  for (const auto& [key, stats] : report.cells) {
    tasks.insert(key.task);
    buckets.insert(key.bucket);
    strategies.insert(key.strategy);
  }
  for (TaskKind t : kAllTasks) {
    if (tasks.contains(t)) layout.tasks.push_back(t);
  }
  layout.buckets.assign(buckets.begin(), buckets.end());
  layout.strategies.assign(strategies.begin(), strategies.end());
  std::sort(layout.strategies.begin(), layout.strategies.end(),
            StrategyLabelLess);

  for (BucketName b : layout.buckets) {
    for (TaskKind t : layout.tasks) {
      std::vector<std::pair<CellKey, CellStats>> group;
      for (const std::string& s : layout.strategies) {
        auto it = report.cells.find(CellKey{t, b, s});
        if (it != report.cells.end() && it->second.total > 0) {
          group.push_back(*it);
        }
      }
      if (group.size() < 2) continue;
      const CellStats* top = &group.front().second;
      for (const auto& [key, stats] : group) {
        if (CompareFractions(stats, *top) > 0) top = &stats;
      }
      for (const auto& [key, stats] : group) {
        if (CompareFractions(stats, *top) == 0) layout.best.insert(key);
      }
    }
  }
  return layout;
}

std::string CsvField(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

absl::StatusOr<EvalReport> AggregateReport(
    std::span<const EvalRecord> records,
    std::span<const TaskInstance> instances, const AggregateOptions& options) {
  std::unordered_map<std::string, const TaskInstance*> by_id;
  std::map<std::pair<TaskKind, BucketName>, int> cell_sizes;
  for (const TaskInstance& inst : instances) {
    by_id.emplace(inst.id, &inst);
    ++cell_sizes[{inst.task, inst.bucket.name}];
  }

  EvalReport report;
  std::set<std::pair<std::string, std::string>> seen;
  for (const EvalRecord& r : records) {
    auto it = by_id.find(r.instance_id);
    if (it == by_id.end()) {
      return absl::NotFoundError(
          absl::StrCat("record for unknown instance '", r.instance_id, "'"));
    }
    if (!seen.emplace(r.strategy, r.instance_id).second) {
      return absl::AlreadyExistsError(absl::StrCat(
          "duplicate record for '", r.instance_id, "' under ", r.strategy));
    }
    if (r.correct && r.failure != FailureKind::kNone) {
      return absl::InvalidArgumentError(
          absl::StrCat("record '", r.instance_id, "' is correct with a failure"));
    }
    const TaskInstance& inst = *it->second;
    CellStats& cell =
        report.cells[CellKey{inst.task, inst.bucket.name, r.strategy}];
    ++cell.total;
    if (r.correct) ++cell.correct;
    switch (r.failure) {
      case FailureKind::kNone: break;
      case FailureKind::kWrongAnswer: ++cell.wrong_answer; break;
      case FailureKind::kExtractionFailed: ++cell.extraction_failed; break;
      case FailureKind::kBackendError: ++cell.backend_error; break;
    }
  }
  if (options.require_complete) {
    for (const auto& [key, stats] : report.cells) {
      const int expected = cell_sizes[{key.task, key.bucket}];
      if (stats.total != expected) {
        return absl::FailedPreconditionError(absl::StrCat(
            "cell ", std::string(TaskSlug(key.task)), "/", std::string(BucketSlug(key.bucket)), "/",
            key.strategy, " has ", stats.total, " records, dataset has ",
            expected));
      }
    }
  }
  return report;
}

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view text) {
  if (text == "markdown" || text == "md") return ReportFormat::kMarkdown;
  if (text == "csv") return ReportFormat::kCsv;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown report format '", std::string(text), "'"));
}

std::string_view ReportFormatExtension(ReportFormat format) {
  return format == ReportFormat::kCsv ? "csv" : "md";
}

int RoundedPercent(int correct, int total) {
  if (total <= 0) return 0;
  const int64_t c = correct;
  const int64_t t = total;
  return static_cast<int>((200 * c + t) / (2 * t));
}

std::string EmitReport(const EvalReport& report, ReportFormat format) {
  const Layout layout = MakeLayout(report);
  const bool md = format == ReportFormat::kMarkdown;

  auto row = [&](const std::vector<std::string>& fields) {
    if (md) return absl::StrCat("| ", absl::StrJoin(fields, " | "), " |\n");
    std::vector<std::string> quoted;
    for (const std::string& f : fields) quoted.push_back(CsvField(f));
    return absl::StrCat(absl::StrJoin(quoted, ","), "\n");
  };
  auto rule = [&](size_t columns) {
    std::vector<std::string> dashes(columns, "---");
    return row(dashes);
  };

  std::string out;
  if (md) {
    absl::StrAppend(&out, "## Accuracy (%)\n\n");
    if (!report.metadata.model.empty()) {
      absl::StrAppend(&out, "Model: ", report.metadata.model,
                      ". Master seed: ", report.metadata.master_seed, ".\n\n");
    }
  }
  std::vector<std::string> header = {"Size", "Strategy"};
  for (TaskKind t : layout.tasks) {
    header.push_back(md ? std::string(TaskDisplayName(t))
                        : std::string(TaskSlug(t)));
  }
  absl::StrAppend(&out, row(header));
  if (md) absl::StrAppend(&out, rule(header.size()));
  for (BucketName b : layout.buckets) {
    for (const std::string& s : layout.strategies) {
      std::vector<std::string> fields = {std::string(BucketSlug(b)), s};
      for (TaskKind t : layout.tasks) {
        const CellKey key{t, b, s};
        auto it = report.cells.find(key);
        if (it == report.cells.end() || it->second.total == 0) {
          fields.emplace_back(kEmptyCell);
          continue;
        }
        std::string cell =
            absl::StrCat(RoundedPercent(it->second.correct, it->second.total));
        if (layout.best.contains(key)) {
          cell = md ? absl::StrCat("**", cell, "**") : absl::StrCat(cell, "*");
        }
        fields.push_back(std::move(cell));
      }
      absl::StrAppend(&out, row(fields));
    }
  }

  absl::StrAppend(&out, md ? "\n## Failures\n\n" : "\n");
  const std::vector<std::string> failure_header = {
      "Size",         "Strategy",          "Correct",      "Total",
      "Wrong answer", "Extraction failed", "Backend error"};
  absl::StrAppend(&out, row(failure_header));
  if (md) absl::StrAppend(&out, rule(failure_header.size()));
  for (BucketName b : layout.buckets) {
    for (const std::string& s : layout.strategies) {
      CellStats sum;
      bool any = false;
      for (TaskKind t : layout.tasks) {
        auto it = report.cells.find(CellKey{t, b, s});
        if (it == report.cells.end()) continue;
        any = true;
        sum.correct += it->second.correct;
        sum.total += it->second.total;
        sum.wrong_answer += it->second.wrong_answer;
        sum.extraction_failed += it->second.extraction_failed;
        sum.backend_error += it->second.backend_error;
      }
      if (!any) continue;
      absl::StrAppend(
          &out, row({std::string(BucketSlug(b)), s, absl::StrCat(sum.correct),
                     absl::StrCat(sum.total), absl::StrCat(sum.wrong_answer),
                     absl::StrCat(sum.extraction_failed),
                     absl::StrCat(sum.backend_error)}));
    }
  }
  return out;
}

}  // namespace graphbench
