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


// graphbench: generate, render, run, score and report.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"

namespace {

namespace cli = graphbench::cli;

struct Flags {
  uint64_t seed = 0;
  std::string out;
  std::string dataset;
  std::string tasks = "all";
  std::string buckets = "all";
  int graphs_per_cell = 100;
  int queries_per_graph = 5;
  std::vector<std::string> strategies{"all"};
  std::vector<std::string> styles{"pseudo"};
  std::vector<int> shots{1};
  int label_base = -1;
  std::string mst_mode = "edges";
  std::string backend = "mock:oracle";
  graphbench::ModelConfig model;
  int parallel = 4;
  std::string cache;
  std::string transcripts;
  std::string records;
  std::string format = "markdown";
};

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status << "\n";
  return 1;
}

void AddSelection(CLI::App* cmd, Flags& f) {
  cmd->add_option("--tasks", f.tasks, "Comma-separated task slugs or 'all'")
      ->capture_default_str();
  cmd->add_option("--buckets", f.buckets, "Comma-separated S,M,L or 'all'")
      ->capture_default_str();
}

void AddRunFlags(CLI::App* cmd, Flags& f, bool with_backend) {
  cmd->add_option("--dataset", f.dataset, "Dataset directory")->required();
  AddSelection(cmd, f);
  cmd->add_option("--strategy", f.strategies,
                  "zero-shot, k-shot, one-shot, bag, zero-cot, pseudo, "
                  "pseudo-k-shot or 'all'")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--style", f.styles, "Pseudo-code styles: python, pseudo, multi")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--shots", f.shots, "Example counts for k-shot strategies")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--label-base", f.label_base,
                  "First node label; default 1 for topological sorting, else 0")
      ->check(CLI::Range(0, 1));
  cmd->add_option("--mst-mode", f.mst_mode, "edges or count")->capture_default_str();
  cmd->add_option("--out", f.out, "Output directory")->required();
  cmd->add_option("--model", f.model.model, "Model identifier")->capture_default_str();
  if (!with_backend) return;
  cmd->add_option("--backend", f.backend,
                  "http, mock:oracle, mock:adversary or replay")
      ->capture_default_str();
  cmd->add_option("--endpoint", f.model.endpoint, "Chat-completions URL")
      ->capture_default_str();
  cmd->add_option("--temperature", f.model.temperature)->capture_default_str();
  cmd->add_option("--max-tokens", f.model.max_tokens)->capture_default_str();
  cmd->add_option("--timeout", f.model.timeout_seconds, "Request timeout, seconds")
      ->capture_default_str();
  cmd->add_option("--retries", f.model.max_retries)->capture_default_str();
  cmd->add_option("--api-key-env", f.model.api_key_env,
                  "Environment variable holding the API key")
      ->capture_default_str();
  cmd->add_option("--parallel", f.parallel, "Concurrent requests")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--cache", f.cache, "Response cache (default <out>/cache.jsonl)");
}

absl::StatusOr<cli::RunConfig> MakeRunConfig(const Flags& f) {
  cli::RunConfig config;
  config.dataset = f.dataset;
  absl::StatusOr<std::vector<graphbench::TaskKind>> tasks = cli::ParseTaskList(f.tasks);
  if (!tasks.ok()) return tasks.status();
  config.tasks = *tasks;
  absl::StatusOr<std::vector<graphbench::SizeBucket>> buckets =
      cli::ParseBucketList(f.buckets);
  if (!buckets.ok()) return buckets.status();
  config.buckets = *buckets;
  absl::StatusOr<std::vector<graphbench::Strategy>> strategies =
      cli::ExpandStrategies(f.strategies, f.styles, f.shots);
  if (!strategies.ok()) return strategies.status();
  config.strategies = *strategies;
  if (f.label_base >= 0) config.label_base = f.label_base;
  absl::StatusOr<graphbench::MstMode> mode = graphbench::ParseMstMode(f.mst_mode);
  if (!mode.ok()) return mode.status();
  config.mst_mode = *mode;
  absl::StatusOr<graphbench::BackendKind> backend =
      graphbench::ParseBackendKind(f.backend);
  if (!backend.ok()) return backend.status();
  config.backend = *backend;
  config.model = f.model;
  config.parallel = f.parallel;
  config.out = f.out;
  if (!f.cache.empty()) config.cache = f.cache;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph reasoning benchmark generator and evaluation harness"};
  app.set_config("--config", "", "TOML or INI file with flag defaults");
  app.require_subcommand(1);
  Flags f;

  CLI::App* generate = app.add_subcommand("generate", "Generate the dataset");
  generate->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  generate->add_option("--out", f.out, "Output directory")->required();
  AddSelection(generate, f);
  generate->add_option("--graphs-per-cell", f.graphs_per_cell)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--queries-per-graph", f.queries_per_graph)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* render = app.add_subcommand("render", "Write prompts without calling a model");
  AddRunFlags(render, f, /*with_backend=*/false);

  CLI::App* run = app.add_subcommand("run", "Render, execute, score and report");
  AddRunFlags(run, f, /*with_backend=*/true);

  CLI::App* score = app.add_subcommand("score", "Score transcripts into records");
  score->add_option("--dataset", f.dataset)->required();
  score->add_option("--transcripts", f.transcripts)->required();
  score->add_option("--out", f.out, "Records file")->required();

  CLI::App* report = app.add_subcommand("report", "Build an accuracy table from records");
  report->add_option("--dataset", f.dataset)->required();
  report->add_option("--records", f.records)->required();
  report->add_option("--format", f.format, "markdown or csv")->capture_default_str();
  report->add_option("--out", f.out, "Report file")->required();

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) {
    cli::GenerateOptions options{.seed = f.seed,
                                 .out = f.out,
                                 .graphs_per_cell = f.graphs_per_cell,
                                 .queries_per_graph = f.queries_per_graph};
    absl::StatusOr<std::vector<graphbench::TaskKind>> tasks = cli::ParseTaskList(f.tasks);
    if (!tasks.ok()) return Fail(tasks.status());
    options.tasks = *tasks;
    absl::StatusOr<std::vector<graphbench::SizeBucket>> buckets =
        cli::ParseBucketList(f.buckets);
    if (!buckets.ok()) return Fail(buckets.status());
    options.buckets = *buckets;
    absl::StatusOr<graphbench::DatasetManifest> manifest =
        cli::CmdGenerate(options, std::cout);
    return manifest.ok() ? 0 : Fail(manifest.status());
  }
  if (render->parsed() || run->parsed()) {
    absl::StatusOr<cli::RunConfig> config = MakeRunConfig(f);
    if (!config.ok()) return Fail(config.status());
    if (render->parsed()) {
      absl::StatusOr<int> n = cli::CmdRender(*config, std::cout);
      return n.ok() ? 0 : Fail(n.status());
    }
    absl::StatusOr<cli::RunSummary> summary = cli::CmdRun(*config, std::cout);
    return summary.ok() ? 0 : Fail(summary.status());
  }
  if (score->parsed()) {
    auto records = cli::CmdScore(f.dataset, f.transcripts, f.out);
    return records.ok() ? 0 : Fail(records.status());
  }
  if (report->parsed()) {
    absl::StatusOr<graphbench::ReportFormat> format =
        graphbench::ParseReportFormat(f.format);
    if (!format.ok()) return Fail(format.status());
    absl::Status s = cli::CmdReport(f.dataset, f.records, *format, f.out);
    return s.ok() ? 0 : Fail(s);
  }
  return 1;
}
