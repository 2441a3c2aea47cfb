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

// Benchmark assembly and persistence.
//
// A full dataset has, per size bucket S/M/L:
//   7 graph-level tasks x 100 graphs             = 2,100 instances
//   node degree, neighbors: 100 graphs x 5 nodes = 3,000 instances
//   shortest path: 100 graphs x 5 node pairs     = 1,500 instances
// for 6,600 in total. Every task draws its own graphs.
//
// On disk a dataset is a directory holding
//   dataset.jsonl   header line, then one instance per line
//   manifest.json   seed, counts, generator version and content digest
// The content digest is the SHA-256 of the dataset.jsonl bytes.

#ifndef GRAPHBENCH_DATASET_H_
#define GRAPHBENCH_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "graphbench/answer.h"
#include "graphbench/graph.h"
#include "graphbench/oracles.h"
#include "graphbench/task.h"

namespace graphbench {

inline constexpr int kDatasetSchemaVersion = 1;
inline constexpr std::string_view kGeneratorVersion =
    "graphbench-gen/1 mt19937_64+splitmix64";
inline constexpr std::string_view kDatasetFileName = "dataset.jsonl";
inline constexpr std::string_view kManifestFileName = "manifest.json";

enum class Construction : uint8_t { kErdosRenyi, kErdosRenyiDag, kBipartite };

std::string_view ConstructionSlug(Construction c);

struct TaskInstance {
  std::string id;  // "{task}-{bucket}-{graph_index}-{query_index}"
  TaskKind task = TaskKind::kNodeCount;
  SizeBucket bucket = kSmall;
  int graph_index = 0;
  int query_index = 0;
  uint64_t seed = 0;  // seed of the graph's random stream
  Construction construction = Construction::kErdosRenyi;
  Graph graph;
  QueryArgs query;
  Answer gold;

  friend bool operator==(const TaskInstance&, const TaskInstance&) = default;
};

std::string InstanceId(TaskKind task, BucketName bucket, int graph_index,
                       int query_index);

// Builds the instances that share one generated graph: one for graph-level
// tasks, `queries_per_graph` for node and node-pair tasks.
//
// Per-task rules:
//   mst             regenerate until connected
//   shortest_path   regenerate until `queries_per_graph` distinct unordered
//                   same-component pairs exist; pairs drawn without
//                   replacement, orientation by coin flip
//   node tasks      distinct nodes drawn without replacement
//   bipartite       fair coin between Erdos-Renyi and random bipartite
//   topological     low-to-high oriented Erdos-Renyi
absl::StatusOr<std::vector<TaskInstance>> GenerateGraphGroup(
    TaskKind task, const SizeBucket& bucket, uint64_t seed, int graph_index,
    int queries_per_graph);

// Worked-example graphs per (task, bucket). Few-shot prompts take the first
// k of them, so k is capped at this size.
inline constexpr int kExemplarPoolSize = 8;

// The first kExemplarPoolSize distinct graphs of the exemplar stream seeded
// by `exemplar_seed`, one query each. Datasets assembled from the matching
// master seed never contain these graphs.
absl::StatusOr<std::vector<TaskInstance>> ExemplarPool(TaskKind task,
                                                       const SizeBucket& bucket,
                                                       uint64_t exemplar_seed);

struct DatasetOptions {
  uint64_t master_seed = 0;
  int graphs_per_cell = 100;
  int queries_per_graph = 5;
  std::vector<TaskKind> tasks{kAllTasks.begin(), kAllTasks.end()};
  std::vector<SizeBucket> buckets{std::begin(kAllBuckets),
                                  std::end(kAllBuckets)};
};

struct DatasetManifest {
  int schema_version = kDatasetSchemaVersion;
  std::string generator_version{kGeneratorVersion};
  uint64_t master_seed = 0;
  int graphs_per_cell = 0;
  int queries_per_graph = 0;
  std::map<std::pair<TaskKind, BucketName>, int> counts;
  int total = 0;
  // Realized share of cycle-check instances whose gold is "yes", per bucket.
  std::map<BucketName, std::pair<int, int>> cycle_check_yes;  // (yes, total)
  std::string digest_algorithm = "sha256";
  std::string content_digest;

  friend bool operator==(const DatasetManifest&,
                         const DatasetManifest&) = default;
};

struct Dataset {
  DatasetManifest manifest;
  std::vector<TaskInstance> instances;
};

absl::StatusOr<Dataset> AssembleDataset(const DatasetOptions& options);

// Checks the instance against its task's preconditions and recomputes the
// gold answer with the oracles.
absl::Status VerifyInstance(const TaskInstance& instance);

// dataset.jsonl contents: header line then one instance per line.
std::string SerializeDataset(const std::vector<TaskInstance>& instances);
std::string SerializeInstance(const TaskInstance& instance);
absl::StatusOr<TaskInstance> ParseInstance(std::string_view line);

std::string SerializeManifest(const DatasetManifest& manifest);
absl::StatusOr<DatasetManifest> ParseManifest(std::string_view text);

// Writes dataset.jsonl and manifest.json into `dir`, creating it if needed.
absl::Status SaveDataset(const Dataset& dataset,
                         const std::filesystem::path& dir);

struct LoadOptions {
  // Stop at the first bad line. Otherwise bad lines are skipped and
  // reported in LoadedDataset::errors.
  bool strict = true;
  // Re-run the oracles on every instance.
  bool verify = true;
};

struct LoadedDataset {
  std::vector<TaskInstance> instances;
  std::vector<std::string> errors;  // "line N: ..."
};

// Reads a dataset.jsonl file. A schema-version mismatch in the header is
// always fatal.
absl::StatusOr<LoadedDataset> LoadDatasetFile(const std::filesystem::path& path,
                                              const LoadOptions& options = {});

// Reads a dataset directory and checks the file digest against the manifest.
absl::StatusOr<Dataset> LoadDataset(const std::filesystem::path& dir,
                                    const LoadOptions& options = {});

}  // namespace graphbench

#endif  // GRAPHBENCH_DATASET_H_
