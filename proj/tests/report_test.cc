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
#include <random>
#include <regex>
#include <sstream>

#include "gtest/gtest.h"

namespace graphbench {
namespace {

const std::vector<TaskInstance>& Instances() {
  static const auto* v = [] {
    absl::StatusOr<Dataset> d = AssembleDataset(
        {.master_seed = 5, .graphs_per_cell = 200,
         .tasks = {TaskKind::kEdgeCount, TaskKind::kCycleCheck},
         .buckets = {kSmall, kMedium}});
    if (!d.ok()) std::abort();
    return new std::vector<TaskInstance>(std::move(d->instances));
  }();
  return *v;
}

// One record per instance of `task`, the first `correct` of which are right.
std::vector<EvalRecord> Records(TaskKind task, BucketName bucket,
                                std::string_view strategy, int correct) {
  std::vector<EvalRecord> out;
  for (const TaskInstance& inst : Instances()) {
    if (inst.task != task || inst.bucket.name != bucket) continue;
    const bool right = static_cast<int>(out.size()) < correct;
    std::string response = "Answer: " + FormatAnswer(inst.gold, 0);
    if (!right) response = "I cannot tell.";
    out.push_back(EvaluateResponse(inst, strategy, {}, response));
  }
  return out;
}

void Append(std::vector<EvalRecord>& to, std::vector<EvalRecord> from) {
  to.insert(to.end(), from.begin(), from.end());
}

std::string Emit(std::span<const EvalRecord> records, ReportFormat f) {
  absl::StatusOr<EvalReport> r = AggregateReport(records, Instances());
  if (!r.ok()) {
    ADD_FAILURE() << r.status();
    return "";
  }
  return EmitReport(*r, f);
}

TEST(ReportTest, RoundsHalfUp) {
  EXPECT_EQ(RoundedPercent(181, 200), 91);  // 90.5
  EXPECT_EQ(RoundedPercent(179, 200), 90);  // 89.5
  EXPECT_EQ(RoundedPercent(1, 8), 13);      // 12.5
  EXPECT_EQ(RoundedPercent(1, 3), 33);
  EXPECT_EQ(RoundedPercent(2, 3), 67);
  EXPECT_EQ(RoundedPercent(200, 200), 100);
  EXPECT_EQ(RoundedPercent(0, 200), 0);
}

TEST(ReportTest, CountsCells) {
  std::vector<EvalRecord> recs = Records(TaskKind::kEdgeCount, BucketName::kS,
                                         "0-shot", 181);
  absl::StatusOr<EvalReport> r = AggregateReport(recs, Instances());
  ASSERT_TRUE(r.ok()) << r.status();
  ASSERT_EQ(r->cells.size(), 1u);
  const CellStats& s = r->cells.begin()->second;
  EXPECT_EQ(s.correct, 181);
  EXPECT_EQ(s.total, 200);
  EXPECT_EQ(s.extraction_failed, 19);
  EXPECT_NE(EmitReport(*r, ReportFormat::kMarkdown).find("| 91 |"),
            std::string::npos);
}

TEST(ReportTest, EmptyCellsShowDash) {
  std::vector<EvalRecord> recs =
      Records(TaskKind::kEdgeCount, BucketName::kS, "0-shot", 100);
  Append(recs, Records(TaskKind::kCycleCheck, BucketName::kM, "0-shot", 100));
  const std::string md = Emit(recs, ReportFormat::kMarkdown);
  EXPECT_NE(md.find("| S | 0-shot | 50 | — |"), std::string::npos) << md;
  EXPECT_NE(md.find("| M | 0-shot | — | 50 |"), std::string::npos) << md;
}

TEST(ReportTest, IndependentOfRecordOrder) {
  std::vector<EvalRecord> recs;
  Append(recs, Records(TaskKind::kEdgeCount, BucketName::kS, "0-shot", 150));
  Append(recs, Records(TaskKind::kCycleCheck, BucketName::kM, "BaG", 20));
  Append(recs, Records(TaskKind::kEdgeCount, BucketName::kS, "BaG", 199));
  const std::string first = Emit(recs, ReportFormat::kMarkdown);
  std::mt19937 gen(3);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(recs.begin(), recs.end(), gen);
    EXPECT_EQ(Emit(recs, ReportFormat::kMarkdown), first);
    EXPECT_EQ(AggregateReport(recs, Instances())->cells,
              AggregateReport(recs, Instances())->cells);
  }
}

TEST(ReportTest, RejectsDuplicateAndUnknownIds) {
  std::vector<EvalRecord> recs =
      Records(TaskKind::kEdgeCount, BucketName::kS, "0-shot", 10);
  std::vector<EvalRecord> dup = recs;
  dup.push_back(recs.front());
  EXPECT_EQ(AggregateReport(dup, Instances()).status().code(),
            absl::StatusCode::kAlreadyExists);
  std::vector<EvalRecord> unknown = recs;
  unknown.back().instance_id = "edge_count-S-999-0";
  EXPECT_EQ(AggregateReport(unknown, Instances()).status().code(),
            absl::StatusCode::kNotFound);
  std::vector<EvalRecord> partial = recs;
  partial.pop_back();
  EXPECT_EQ(AggregateReport(partial, Instances()).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_TRUE(AggregateReport(partial, Instances(), {.require_complete = false})
                  .ok());
  // The same id under two strategies is fine.
  std::vector<EvalRecord> two = recs;
  Append(two, Records(TaskKind::kEdgeCount, BucketName::kS, "BaG", 10));
  EXPECT_TRUE(AggregateReport(two, Instances()).ok());
}

TEST(ReportTest, BestCellFlags) {
  std::vector<EvalRecord> recs;
  Append(recs, Records(TaskKind::kEdgeCount, BucketName::kS, "0-shot", 100));
  Append(recs, Records(TaskKind::kEdgeCount, BucketName::kS, "BaG", 100));
  Append(recs, Records(TaskKind::kEdgeCount, BucketName::kS, "0-CoT", 99));
  Append(recs, Records(TaskKind::kCycleCheck, BucketName::kM, "0-shot", 7));
  const std::string md = Emit(recs, ReportFormat::kMarkdown);
  EXPECT_NE(md.find("| S | 0-shot | **50** | — |"), std::string::npos) << md;
  EXPECT_NE(md.find("| S | BaG | **50** | — |"), std::string::npos) << md;
  EXPECT_NE(md.find("| S | 0-CoT | 50 | — |"), std::string::npos) << md;
  // A lone strategy in its group is not flagged.
  EXPECT_EQ(md.find("**4**"), std::string::npos) << md;
  const std::string csv = Emit(recs, ReportFormat::kCsv);
  EXPECT_NE(csv.find("S,0-shot,50*,"), std::string::npos) << csv;
  EXPECT_NE(csv.find("S,0-CoT,50,"), std::string::npos) << csv;
}

std::vector<int> Numbers(const std::string& text) {
  // Accuracy table only.
  const std::string table = text.substr(0, text.find("Correct"));
  std::vector<int> out;
  const std::regex num(R"((?:^|[|,]\s*)\**(\d+)\**\*?(?=\s*[|,]|$))");
  std::istringstream in(table);
  for (std::string line; std::getline(in, line);) {
    if (line.find("Master seed") != std::string::npos) continue;
    for (std::sregex_iterator it(line.begin(), line.end(), num), end; it != end;
         ++it) {
      out.push_back(std::stoi((*it)[1]));
    }
  }
  return out;
}

TEST(ReportTest, MarkdownAndCsvAgree) {
  std::vector<EvalRecord> recs;
  Append(recs, Records(TaskKind::kEdgeCount, BucketName::kS, "0-shot", 37));
  Append(recs, Records(TaskKind::kCycleCheck, BucketName::kS, "0-shot", 181));
  Append(recs, Records(TaskKind::kEdgeCount, BucketName::kM, "Pseudo", 3));
  Append(recs, Records(TaskKind::kCycleCheck, BucketName::kM, "2-shot", 200));
  const std::vector<int> md = Numbers(Emit(recs, ReportFormat::kMarkdown));
  const std::vector<int> csv = Numbers(Emit(recs, ReportFormat::kCsv));
  EXPECT_EQ(md, csv);
  EXPECT_EQ(md, (std::vector<int>{19, 91, 100, 2}));
}

TEST(ReportTest, FailureTableFollows) {
  std::vector<EvalRecord> recs =
      Records(TaskKind::kEdgeCount, BucketName::kS, "0-shot", 150);
  recs[0] = BackendFailureRecord(Instances()[0], "0-shot", {}, "Timeout");
  ASSERT_EQ(Instances()[0].task, TaskKind::kEdgeCount);
  const std::string md = Emit(recs, ReportFormat::kMarkdown);
  const size_t acc = md.find("## Accuracy");
  const size_t fail = md.find("## Failures");
  ASSERT_NE(acc, std::string::npos);
  ASSERT_NE(fail, std::string::npos);
  EXPECT_LT(acc, fail);
  EXPECT_NE(md.find("| S | 0-shot | 149 | 200 | 0 | 50 | 1 |"),
            std::string::npos)
      << md;
}

TEST(ReportTest, MetadataLineHasNoTimestamp) {
  std::vector<EvalRecord> recs =
      Records(TaskKind::kEdgeCount, BucketName::kS, "0-shot", 1);
  absl::StatusOr<EvalReport> r = AggregateReport(recs, Instances());
  ASSERT_TRUE(r.ok());
  r->metadata = {.model = "m", .master_seed = 5,
                 .timestamp = "2026-01-01T00:00:00Z"};
  const std::string md = EmitReport(*r, ReportFormat::kMarkdown);
  EXPECT_NE(md.find("Model: m. Master seed: 5."), std::string::npos);
  EXPECT_EQ(md.find("2026"), std::string::npos);
}

TEST(ReportTest, FormatParsing) {
  EXPECT_EQ(*ParseReportFormat("md"), ReportFormat::kMarkdown);
  EXPECT_EQ(*ParseReportFormat("markdown"), ReportFormat::kMarkdown);
  EXPECT_EQ(*ParseReportFormat("csv"), ReportFormat::kCsv);
  EXPECT_FALSE(ParseReportFormat("html").ok());
  EXPECT_EQ(ReportFormatExtension(ReportFormat::kCsv), "csv");
}

}  // namespace
}  // namespace graphbench
