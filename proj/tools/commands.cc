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


#include "commands.h"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "graphbench/cache.h"
#include "graphbench/pseudocode.h"
#include "json.hpp"

namespace graphbench::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::vector<std::string> SplitList(std::string_view text) {
  std::vector<std::string> out;
  const std::vector<std::string> parts = absl::StrSplit(std::string(text), ',');
  for (std::string part : parts) {
    absl::StripAsciiWhitespace(&part);
    if (!part.empty()) out.push_back(std::move(part));
  }
  return out;
}

std::string Now() {
  const std::time_t secs =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Write-then-rename so readers never see half a file.
absl::Status WriteFile(const fs::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      return absl::InternalError(absl::StrCat("cannot write ", tmp.string()));
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    return absl::InternalError(
        absl::StrCat("cannot rename to ", path.string(), ": ", ec.message()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<std::string>> ReadLines(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot read ", path.string()));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

template <typename T>
bool Contains(const std::vector<T>& items, const T& item) {
  return std::find(items.begin(), items.end(), item) != items.end();
}

absl::StatusOr<Dataset> LoadSelection(const fs::path& dir,
                                      const std::vector<TaskKind>& tasks,
                                      const std::vector<SizeBucket>& buckets) {
  absl::StatusOr<Dataset> dataset = LoadDataset(dir);
  if (!dataset.ok()) return dataset.status();
  std::vector<BucketName> names;
  for (const SizeBucket& b : buckets) names.push_back(b.name);
  std::erase_if(dataset->instances, [&](const TaskInstance& inst) {
    return !Contains(tasks, inst.task) || !Contains(names, inst.bucket.name);
  });
  return dataset;
}

RenderOptions RenderOptionsFor(const RunConfig& config, uint64_t master_seed) {
  return RenderOptions{.label_base = config.label_base,
                       .mst_mode = config.mst_mode,
                       .exemplar_master_seed = master_seed};
}

absl::StatusOr<std::vector<PromptBundle>> RenderAll(
    const RunConfig& config, const Dataset& dataset) {
  const RenderOptions options =
      RenderOptionsFor(config, dataset.manifest.master_seed);
  std::vector<PromptBundle> bundles;
  bundles.reserve(config.strategies.size() * dataset.instances.size());
  for (const Strategy& strategy : config.strategies) {
    for (const TaskInstance& inst : dataset.instances) {
      absl::StatusOr<PromptBundle> bundle = RenderPrompt(inst, strategy, options);
      if (!bundle.ok()) {
        return absl::Status(bundle.status().code(),
                            absl::StrCat(inst.id, ": ",
                                         std::string(bundle.status().message())));
      }
      bundles.push_back(*std::move(bundle));
    }
  }
  return bundles;
}

EvalRecord RecordFromTranscript(const TaskInstance& inst, const Transcript& t) {
  if (!t.error.empty()) {
    return BackendFailureRecord(inst, t.strategy, t.convention, t.error);
  }
  return EvaluateResponse(inst, t.strategy, t.convention, t.response);
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& line : lines) absl::StrAppend(&out, line, "\n");
  return out;
}

absl::StatusOr<std::string> RenderReport(std::span<const EvalRecord> records,
                                         const Dataset& dataset,
                                         const RunMetadata& metadata,
                                         ReportFormat format) {
  absl::StatusOr<EvalReport> report = AggregateReport(records, dataset.instances);
  if (!report.ok()) return report.status();
  report->metadata = metadata;
  return EmitReport(*report, format);
}

}  // namespace

absl::StatusOr<std::vector<TaskKind>> ParseTaskList(std::string_view text) {
  if (text == "all") return std::vector<TaskKind>(kAllTasks.begin(), kAllTasks.end());
  std::vector<TaskKind> out;
  for (const std::string& slug : SplitList(text)) {
    absl::StatusOr<TaskKind> task = ParseTaskSlug(slug);
    if (!task.ok()) return task.status();
    if (!Contains(out, *task)) out.push_back(*task);
  }
  if (out.empty()) return absl::InvalidArgumentError("empty task list");
  return out;
}

absl::StatusOr<std::vector<SizeBucket>> ParseBucketList(std::string_view text) {
  if (text == "all") {
    return std::vector<SizeBucket>(std::begin(kAllBuckets), std::end(kAllBuckets));
  }
  std::vector<SizeBucket> out;
  for (const std::string& slug : SplitList(text)) {
    absl::StatusOr<SizeBucket> bucket = StandardBucket(slug);
    if (!bucket.ok()) return bucket.status();
    if (std::none_of(out.begin(), out.end(), [&](const SizeBucket& b) {
          return b.name == bucket->name;
        })) {
      out.push_back(*bucket);
    }
  }
  if (out.empty()) return absl::InvalidArgumentError("empty bucket list");
  return out;
}

absl::StatusOr<std::vector<Strategy>> ExpandStrategies(
    const std::vector<std::string>& names,
    const std::vector<std::string>& styles, const std::vector<int>& shots) {
  std::vector<std::string> expanded;
  for (const std::string& name : names) {
    if (name == "all") {
      for (const char* n :
           {"zero-shot", "k-shot", "bag", "zero-cot", "pseudo", "pseudo-k-shot"}) {
        expanded.emplace_back(n);
      }
    } else {
      expanded.push_back(name);
    }
  }
  std::vector<PseudoStyle> style_list;
  for (const std::string& s : styles) {
    absl::StatusOr<PseudoStyle> style = ParseStyle(s);
    if (!style.ok()) return style.status();
    style_list.push_back(*style);
  }
  if (style_list.empty()) style_list.push_back(PseudoStyle::kPlain);
  const std::vector<int> shot_list = shots.empty() ? std::vector<int>{1} : shots;

  std::vector<Strategy> out;
  auto add = [&](const Strategy& s) {
    if (!Contains(out, s)) out.push_back(s);
  };
  for (const std::string& name : expanded) {
    absl::StatusOr<Strategy> probe =
        ParseStrategyName(name, PseudoStyle::kPlain, 1);
    if (!probe.ok()) {
      // Report labels such as "Pseudo[python]+2-shot" are accepted verbatim.
      absl::StatusOr<Strategy> labelled = ParseStrategyLabel(name);
      if (!labelled.ok()) return probe.status();
      add(*labelled);
      continue;
    }
    const bool styled = probe->uses_pseudocode();
    const bool shot = probe->uses_exemplars() && name != "one-shot" &&
                      name != "1-shot";
    for (PseudoStyle style : styled ? style_list : std::vector{PseudoStyle::kPlain}) {
      for (int k : shot ? shot_list : std::vector{1}) {
        absl::StatusOr<Strategy> s = ParseStrategyName(name, style, k);
        if (!s.ok()) return s.status();
        add(*s);
      }
    }
  }
  if (out.empty()) return absl::InvalidArgumentError("no strategies selected");
  return out;
}

absl::StatusOr<DatasetManifest> CmdGenerate(const GenerateOptions& options,
                                            std::ostream& log) {
  DatasetOptions dataset_options{.master_seed = options.seed,
                                 .graphs_per_cell = options.graphs_per_cell,
                                 .queries_per_graph = options.queries_per_graph,
                                 .tasks = options.tasks,
                                 .buckets = options.buckets};
  absl::StatusOr<Dataset> dataset = AssembleDataset(dataset_options);
  if (!dataset.ok()) return dataset.status();
  if (absl::Status s = SaveDataset(*dataset, options.out); !s.ok()) return s;
  for (const auto& [cell, count] : dataset->manifest.counts) {
    log << TaskSlug(cell.first) << " " << BucketSlug(cell.second) << ": "
        << count << "\n";
  }
  log << "total: " << dataset->manifest.total << "\n";
  log << "digest: " << dataset->manifest.digest_algorithm << ":"
      << dataset->manifest.content_digest << "\n";
  return dataset->manifest;
}

absl::Status ValidateRunConfig(const RunConfig& config) {
  std::error_code ec;
  if (!fs::is_directory(config.dataset, ec)) {
    return absl::NotFoundError(
        absl::StrCat("dataset directory ", config.dataset.string(), " not found"));
  }
  if (config.strategies.empty()) {
    return absl::InvalidArgumentError("no strategies selected");
  }
  for (const Strategy& s : config.strategies) {
    if (absl::Status st = ValidateStrategy(s); !st.ok()) return st;
  }
  if (config.parallel < 1) {
    return absl::InvalidArgumentError("--parallel must be at least 1");
  }
  if (config.out.empty()) return absl::InvalidArgumentError("--out is required");
  if (config.model.max_retries < 0 || config.model.max_tokens < 1 ||
      config.model.timeout_seconds < 1) {
    return absl::InvalidArgumentError("invalid model configuration");
  }
  return absl::OkStatus();
}

absl::StatusOr<int> CmdRender(const RunConfig& config, std::ostream& log) {
  if (absl::Status s = ValidateRunConfig(config); !s.ok()) return s;
  absl::StatusOr<Dataset> dataset =
      LoadSelection(config.dataset, config.tasks, config.buckets);
  if (!dataset.ok()) return dataset.status();
  absl::StatusOr<std::vector<PromptBundle>> bundles = RenderAll(config, *dataset);
  if (!bundles.ok()) return bundles.status();
  std::string out;
  for (const PromptBundle& b : *bundles) {
    Json j;
    j["id"] = b.instance_id;
    j["strategy"] = b.strategy.Label();
    j["task"] = std::string(TaskSlug(b.task));
    j["encoding"] = b.encoding;
    j["label_base"] = b.convention.label_base;
    j["mst_mode"] = std::string(MstModeSlug(b.convention.mst_mode));
    j["prompt_hash"] = CacheKey(b, config.model);
    j["text"] = b.text;
    absl::StrAppend(&out, j.dump(), "\n");
  }
  const fs::path path = config.out / kPromptsFile;
  if (absl::Status s = WriteFile(path, out); !s.ok()) return s;
  log << "rendered " << bundles->size() << " prompts to " << path.string()
      << "\n";
  return static_cast<int>(bundles->size());
}

absl::StatusOr<RunSummary> CmdRun(const RunConfig& config, std::ostream& log) {
  if (absl::Status s = ValidateRunConfig(config); !s.ok()) return s;
  const std::string started = Now();
  absl::StatusOr<Dataset> dataset =
      LoadSelection(config.dataset, config.tasks, config.buckets);
  if (!dataset.ok()) return dataset.status();
  absl::StatusOr<std::vector<PromptBundle>> bundles = RenderAll(config, *dataset);
  if (!bundles.ok()) return bundles.status();

  std::unique_ptr<Backend> owned;
  Backend* backend = config.backend_override;
  if (backend == nullptr) {
    absl::StatusOr<std::unique_ptr<Backend>> made =
        MakeBackend(config.backend, dataset->instances);
    if (!made.ok()) return made.status();
    owned = *std::move(made);
    backend = owned.get();
  }
  const fs::path cache_path = config.cache.value_or(config.out / kCacheFile);
  absl::StatusOr<std::unique_ptr<ResponseCache>> cache =
      ResponseCache::Open(cache_path);
  if (!cache.ok()) return cache.status();

  Client client(backend, cache->get(), config.model);
  std::vector<absl::StatusOr<Transcript>> results =
      client.CompleteAll(*bundles, config.parallel);

  std::unordered_map<std::string, const TaskInstance*> by_id;
  for (const TaskInstance& inst : dataset->instances) by_id.emplace(inst.id, &inst);

  RunSummary summary;
  std::vector<std::string> transcript_lines;
  std::vector<std::string> record_lines;
  std::vector<EvalRecord> records;
  std::map<std::string, int> error_kinds;
  for (size_t i = 0; i < results.size(); ++i) {
    const PromptBundle& bundle = (*bundles)[i];
    Transcript t;
    if (results[i].ok()) {
      t = *std::move(results[i]);
    } else {
      const absl::Status& st = results[i].status();
      t = Transcript{.instance_id = bundle.instance_id,
                     .strategy = bundle.strategy.Label(),
                     .prompt_hash = CacheKey(bundle, config.model),
                     .model = config.model.model,
                     .temperature = config.model.temperature,
                     .max_tokens = config.model.max_tokens,
                     .timestamp = Now(),
                     .backend = backend->kind(),
                     .convention = bundle.convention,
                     .error = absl::StrCat(std::string(ClientErrorName(st)), ": ",
                                           std::string(st.message()))};
      ++error_kinds[std::string(ClientErrorName(st))];
      ++summary.backend_errors;
    }
    if (t.from_cache) ++summary.cache_hits;
    EvalRecord record = RecordFromTranscript(*by_id.at(t.instance_id), t);
    if (record.correct) ++summary.correct;
    transcript_lines.push_back(SerializeTranscript(t));
    record_lines.push_back(SerializeRecord(record));
    records.push_back(std::move(record));
  }
  summary.prompts = static_cast<int>(results.size());

  if (absl::Status s = WriteFile(config.out / kTranscriptsFile,
                                 JoinLines(transcript_lines));
      !s.ok()) {
    return s;
  }
  if (absl::Status s =
          WriteFile(config.out / kRecordsFile, JoinLines(record_lines));
      !s.ok()) {
    return s;
  }
  const RunMetadata metadata{.model = config.model.model,
                             .master_seed = dataset->manifest.master_seed,
                             .timestamp = started};
  for (ReportFormat format : {ReportFormat::kMarkdown, ReportFormat::kCsv}) {
    absl::StatusOr<std::string> text =
        RenderReport(records, *dataset, metadata, format);
    if (!text.ok()) return text.status();
    const fs::path path =
        config.out / absl::StrCat("report.", std::string(ReportFormatExtension(format)));
    if (absl::Status s = WriteFile(path, *text); !s.ok()) return s;
  }

  Json j;
  j["started"] = started;
  j["finished"] = Now();
  j["dataset"] = config.dataset.string();
  j["dataset_digest"] = dataset->manifest.content_digest;
  j["master_seed"] = std::to_string(dataset->manifest.master_seed);
  j["backend"] = std::string(BackendKindSlug(backend->kind()));
  j["model"] = config.model.model;
  j["endpoint"] = config.model.endpoint;
  j["temperature"] = config.model.temperature;
  j["max_tokens"] = config.model.max_tokens;
  j["parallel"] = config.parallel;
  j["cache"] = cache_path.string();
  Json strategies = Json::array();
  for (const Strategy& s : config.strategies) strategies.push_back(s.Label());
  j["strategies"] = strategies;
  j["prompts"] = summary.prompts;
  j["cache_hits"] = summary.cache_hits;
  j["correct"] = summary.correct;
  j["backend_errors"] = summary.backend_errors;
  j["backend_error_kinds"] = error_kinds;
  if (absl::Status s = WriteFile(config.out / kSummaryFile, j.dump(2) + "\n");
      !s.ok()) {
    return s;
  }
  log << "prompts: " << summary.prompts << ", cache hits: " << summary.cache_hits
      << ", correct: " << summary.correct
      << ", backend errors: " << summary.backend_errors << "\n";
  return summary;
}

absl::StatusOr<std::vector<EvalRecord>> CmdScore(
    const fs::path& dataset_dir, const fs::path& transcripts,
    const fs::path& records_out) {
  absl::StatusOr<Dataset> dataset = LoadDataset(dataset_dir);
  if (!dataset.ok()) return dataset.status();
  std::unordered_map<std::string, const TaskInstance*> by_id;
  for (const TaskInstance& inst : dataset->instances) by_id.emplace(inst.id, &inst);

  absl::StatusOr<std::vector<std::string>> lines = ReadLines(transcripts);
  if (!lines.ok()) return lines.status();
  std::vector<EvalRecord> records;
  std::vector<std::string> out;
  for (size_t i = 0; i < lines->size(); ++i) {
    absl::StatusOr<Transcript> t = ParseTranscript((*lines)[i]);
    if (!t.ok()) {
      return absl::DataLossError(absl::StrCat(
          transcripts.string(), ": line ", i + 1, ": ",
          std::string(t.status().message())));
    }
    auto it = by_id.find(t->instance_id);
    if (it == by_id.end()) {
      return absl::NotFoundError(
          absl::StrCat("transcript for unknown instance '", t->instance_id, "'"));
    }
    records.push_back(RecordFromTranscript(*it->second, *t));
    out.push_back(SerializeRecord(records.back()));
  }
  if (absl::Status s = WriteFile(records_out, JoinLines(out)); !s.ok()) return s;
  return records;
}

absl::Status CmdReport(const fs::path& dataset_dir, const fs::path& records_path,
                       ReportFormat format, const fs::path& out) {
  absl::StatusOr<Dataset> dataset = LoadDataset(dataset_dir);
  if (!dataset.ok()) return dataset.status();
  absl::StatusOr<std::vector<std::string>> lines = ReadLines(records_path);
  if (!lines.ok()) return lines.status();
  std::vector<EvalRecord> records;
  for (size_t i = 0; i < lines->size(); ++i) {
    absl::StatusOr<EvalRecord> r = ParseRecord((*lines)[i]);
    if (!r.ok()) {
      return absl::DataLossError(absl::StrCat(
          records_path.string(), ": line ", i + 1, ": ",
          std::string(r.status().message())));
    }
    records.push_back(*std::move(r));
  }
  const RunMetadata metadata{.master_seed = dataset->manifest.master_seed};
  absl::StatusOr<std::string> text =
      RenderReport(records, *dataset, metadata, format);
  if (!text.ok()) return text.status();
  return WriteFile(out, *text);
}

}  // namespace graphbench::cli
