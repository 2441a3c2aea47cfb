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

#include "graphbench/dataset.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "graphbench/digest.h"
#include "graphbench/generators.h"
#include "graphbench/rng.h"
#include "json_codec.h"

namespace graphbench {

using internal::Json;

namespace {

constexpr std::string_view kDatasetSchemaName = "graphbench.dataset";
constexpr std::string_view kManifestSchemaName = "graphbench.manifest";
// Guards against pathological bucket/seed combinations in the regeneration
// loops. Never reached with the standard buckets.
constexpr int kMaxRegenerations = 100000;

absl::StatusOr<Construction> ParseConstruction(std::string_view slug) {
  for (Construction c : {Construction::kErdosRenyi, Construction::kErdosRenyiDag,
                         Construction::kBipartite}) {
    if (ConstructionSlug(c) == slug) return c;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown construction '", std::string(slug), "'"));
}

// Draws `k` distinct indices from [0, size) by partial Fisher-Yates.
std::vector<int> SampleWithoutReplacement(int size, int k, Rng& rng) {
  std::vector<int> pool(size);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    int j = static_cast<int>(rng.UniformInt(i, size - 1));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::vector<Edge> SameComponentPairs(const Graph& g) {
  const std::vector<int> label = ComponentLabels(g);
  std::vector<Edge> pairs;
  for (Node u = 0; u < g.node_count(); ++u) {
    for (Node v = u + 1; v < g.node_count(); ++v) {
      if (label[u] == label[v]) pairs.push_back({u, v});
    }
  }
  return pairs;
}

TaskInstance MakeInstance(TaskKind task, const SizeBucket& bucket,
                          uint64_t seed, int graph_index, int query_index,
                          Construction construction, const Graph& g,
                          QueryArgs query, Answer gold) {
  TaskInstance inst;
  inst.id = InstanceId(task, bucket.name, graph_index, query_index);
  inst.task = task;
  inst.bucket = bucket;
  inst.graph_index = graph_index;
  inst.query_index = query_index;
  inst.seed = seed;
  inst.construction = construction;
  inst.graph = g;
  inst.query = std::move(query);
  inst.gold = std::move(gold);
  return inst;
}

std::string ReadFile(const std::filesystem::path& path, absl::Status* status) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *status = absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
    return {};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *status = absl::OkStatus();
  return buffer.str();
}

absl::Status WriteFile(const std::filesystem::path& path,
                       std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) {
    return absl::DataLossError(absl::StrCat("short write to ", path.string()));
  }
  return absl::OkStatus();
}

std::string DatasetHeader() {
  Json header{{"schema", kDatasetSchemaName},
              {"schema_version", kDatasetSchemaVersion},
              {"generator_version", kGeneratorVersion}};
  return header.dump();
}

}  // namespace

std::string_view ConstructionSlug(Construction c) {
  switch (c) {
    case Construction::kErdosRenyi: return "er";
    case Construction::kErdosRenyiDag: return "er_dag";
    case Construction::kBipartite: return "bipartite";
  }
  return "?";
}

std::string InstanceId(TaskKind task, BucketName bucket, int graph_index,
                       int query_index) {
  return absl::StrCat(std::string(TaskSlug(task)), "-", std::string(BucketSlug(bucket)), "-",
                      graph_index, "-", query_index);
}

absl::StatusOr<std::vector<TaskInstance>> GenerateGraphGroup(
    TaskKind task, const SizeBucket& bucket, uint64_t seed, int graph_index,
    int queries_per_graph) {
  Rng rng(seed);
  std::vector<TaskInstance> group;

  auto single = [&](Construction construction,
                    const Graph& g) -> absl::StatusOr<std::vector<TaskInstance>> {
    auto gold = ComputeGold(task, g, {});
    if (!gold.ok()) return gold.status();
    group.push_back(MakeInstance(task, bucket, seed, graph_index, 0,
                                 construction, g, {}, *std::move(gold)));
    return std::move(group);
  };

  switch (task) {
    case TaskKind::kNodeCount:
    case TaskKind::kEdgeCount:
    case TaskKind::kConnectedComponents:
    case TaskKind::kCycleCheck:
      return single(Construction::kErdosRenyi,
                    SampleEr(bucket, std::nullopt, rng));

    case TaskKind::kMinimumSpanningTree:
      for (int attempt = 0; attempt < kMaxRegenerations; ++attempt) {
        Graph g = SampleEr(bucket, std::nullopt, rng);
        if (ConnectedComponents(g) == 1) {
          return single(Construction::kErdosRenyi, g);
        }
      }
      return absl::ResourceExhaustedError("no connected graph generated");

    case TaskKind::kBipartiteCheck:
      if (rng.Coin()) {
        return single(Construction::kBipartite,
                      SampleBipartite(bucket, std::nullopt, rng).graph);
      }
      return single(Construction::kErdosRenyi,
                    SampleEr(bucket, std::nullopt, rng));

    case TaskKind::kTopologicalSort:
      return single(Construction::kErdosRenyiDag,
                    SampleErDag(bucket, std::nullopt, rng));

    case TaskKind::kNodeDegree:
    case TaskKind::kNeighbors: {
      Graph g = SampleEr(bucket, std::nullopt, rng);
      if (queries_per_graph > g.node_count()) {
        return absl::InvalidArgumentError(
            absl::StrCat("cannot draw ", queries_per_graph,
                         " distinct nodes from ", g.node_count()));
      }
      const std::vector<int> nodes =
          SampleWithoutReplacement(g.node_count(), queries_per_graph, rng);
      for (int q = 0; q < queries_per_graph; ++q) {
        QueryArgs query{.source = nodes[q], .target = std::nullopt};
        auto gold = ComputeGold(task, g, query);
        if (!gold.ok()) return gold.status();
        group.push_back(MakeInstance(task, bucket, seed, graph_index, q,
                                     Construction::kErdosRenyi, g, query,
                                     *std::move(gold)));
      }
      return group;
    }

    case TaskKind::kShortestPath:
      for (int attempt = 0; attempt < kMaxRegenerations; ++attempt) {
        Graph g = SampleEr(bucket, std::nullopt, rng);
        const std::vector<Edge> pairs = SameComponentPairs(g);
        if (static_cast<int>(pairs.size()) < queries_per_graph) continue;
        const std::vector<int> picks = SampleWithoutReplacement(
            static_cast<int>(pairs.size()), queries_per_graph, rng);
        for (int q = 0; q < queries_per_graph; ++q) {
          Edge pair = pairs[picks[q]];
          if (rng.Coin()) std::swap(pair.u, pair.v);
          QueryArgs query{.source = pair.u, .target = pair.v};
          auto gold = ComputeGold(task, g, query);
          if (!gold.ok()) return gold.status();
          group.push_back(MakeInstance(task, bucket, seed, graph_index, q,
                                       Construction::kErdosRenyi, g, query,
                                       *std::move(gold)));
        }
        return group;
      }
      return absl::ResourceExhaustedError("not enough same-component pairs");
  }
  return absl::InternalError("unhandled task");
}

namespace {

// Graphs already used by one task, keyed by node count and edge list.
using GraphKey = std::pair<int, std::vector<Edge>>;

GraphKey KeyOf(const Graph& g) { return {g.node_count(), g.edges()}; }

// Candidates tried per slot before a cell is declared unfillable.
constexpr int kMaxRedraws = 1000;

}  // namespace

absl::StatusOr<std::vector<TaskInstance>> ExemplarPool(TaskKind task,
                                                       const SizeBucket& bucket,
                                                       uint64_t exemplar_seed) {
  std::vector<TaskInstance> pool;
  std::set<GraphKey> seen;
  for (int candidate = 0;
       static_cast<int>(pool.size()) < kExemplarPoolSize; ++candidate) {
    if (candidate >= kMaxRedraws) {
      return absl::ResourceExhaustedError("could not draw distinct exemplars");
    }
    const uint64_t seed =
        DeriveInstanceSeed(exemplar_seed, task, bucket.name, candidate);
    auto group = GenerateGraphGroup(task, bucket, seed, candidate,
                                    /*queries_per_graph=*/1);
    if (!group.ok()) return group.status();
    if (!seen.insert(KeyOf(group->front().graph)).second) continue;
    pool.push_back(std::move(group->front()));
  }
  return pool;
}

absl::StatusOr<Dataset> AssembleDataset(const DatasetOptions& options) {
  Dataset dataset;
  DatasetManifest& manifest = dataset.manifest;
  manifest.master_seed = options.master_seed;
  manifest.graphs_per_cell = options.graphs_per_cell;
  manifest.queries_per_graph = options.queries_per_graph;

  for (TaskKind task : options.tasks) {
    // Graphs are distinct within a task, and exemplar graphs stay out.
    std::set<GraphKey> used;
    for (const SizeBucket& bucket : options.buckets) {
      auto pool = ExemplarPool(
          task, bucket, DeriveExemplarSeed(options.master_seed, task, bucket.name));
      if (!pool.ok()) return pool.status();
      for (const TaskInstance& ex : *pool) used.insert(KeyOf(ex.graph));
    }
    for (const SizeBucket& bucket : options.buckets) {
      int& count = manifest.counts[{task, bucket.name}];
      for (int index = 0; index < options.graphs_per_cell; ++index) {
        uint64_t seed =
            DeriveInstanceSeed(options.master_seed, task, bucket.name, index);
        absl::StatusOr<std::vector<TaskInstance>> group;
        for (int redraw = 0;; ++redraw) {
          if (redraw >= kMaxRedraws) {
            return absl::ResourceExhaustedError(absl::StrCat(
                "no fresh graph for ", std::string(TaskSlug(task)), "-",
                std::string(BucketSlug(bucket.name)), "-", index));
          }
          group = GenerateGraphGroup(task, bucket, seed, index,
                                     options.queries_per_graph);
          if (!group.ok()) return group.status();
          if (used.insert(KeyOf(group->front().graph)).second) break;
          seed = SplitMix64(seed);
        }
        for (TaskInstance& inst : *group) {
          if (task == TaskKind::kCycleCheck) {
            auto& [yes, total] = manifest.cycle_check_yes[bucket.name];
            yes += std::get<BoolAnswer>(inst.gold).value ? 1 : 0;
            ++total;
          }
          ++count;
          dataset.instances.push_back(std::move(inst));
        }
      }
    }
  }
  manifest.total = static_cast<int>(dataset.instances.size());
  manifest.content_digest = Sha256Hex(SerializeDataset(dataset.instances));
  return dataset;
}

absl::Status VerifyInstance(const TaskInstance& inst) {
  const Graph& g = inst.graph;
  const std::string where = absl::StrCat(inst.id, ": ");
  if (inst.id != InstanceId(inst.task, inst.bucket.name, inst.graph_index,
                            inst.query_index)) {
    return absl::FailedPreconditionError(absl::StrCat(where, "id mismatch"));
  }
  if (g.directed() != IsDirectedTask(inst.task)) {
    return absl::FailedPreconditionError(
        absl::StrCat(where, "graph direction does not match task"));
  }
  const TaskScope scope = ScopeOf(inst.task);
  const bool want_source = scope != TaskScope::kGraph;
  const bool want_target = scope == TaskScope::kNodePair;
  if (inst.query.source.has_value() != want_source ||
      inst.query.target.has_value() != want_target) {
    return absl::FailedPreconditionError(
        absl::StrCat(where, "query arguments do not match task"));
  }
  if ((inst.query.source && !g.Contains(*inst.query.source)) ||
      (inst.query.target && !g.Contains(*inst.query.target))) {
    return absl::FailedPreconditionError(
        absl::StrCat(where, "query node not in graph"));
  }
  if (scope == TaskScope::kNodePair) {
    if (*inst.query.source == *inst.query.target) {
      return absl::FailedPreconditionError(
          absl::StrCat(where, "shortest-path endpoints coincide"));
    }
    const std::vector<int> label = ComponentLabels(g);
    if (label[*inst.query.source] != label[*inst.query.target]) {
      return absl::FailedPreconditionError(
          absl::StrCat(where, "shortest-path endpoints in different components"));
    }
  }

  switch (inst.task) {
    case TaskKind::kMinimumSpanningTree: {
      if (ConnectedComponents(g) != 1) {
        return absl::FailedPreconditionError(
            absl::StrCat(where, "MST graph is not connected"));
      }
      const auto* gold = std::get_if<EdgeSetAnswer>(&inst.gold);
      if (gold == nullptr || !ValidateSpanningTree(g, gold->edges)) {
        return absl::FailedPreconditionError(
            absl::StrCat(where, "gold is not a spanning tree"));
      }
      return absl::OkStatus();
    }
    case TaskKind::kTopologicalSort: {
      const auto* gold = std::get_if<NodeSeqAnswer>(&inst.gold);
      if (gold == nullptr || !ValidateTopoOrder(g, gold->nodes)) {
        return absl::FailedPreconditionError(
            absl::StrCat(where, "gold is not a topological order"));
      }
      return absl::OkStatus();
    }
    default: {
      auto expected = ComputeGold(inst.task, g, inst.query);
      if (!expected.ok()) {
        return absl::FailedPreconditionError(
            absl::StrCat(where, expected.status().message()));
      }
      if (*expected != inst.gold) {
        return absl::FailedPreconditionError(
            absl::StrCat(where, "gold answer disagrees with oracle"));
      }
      return absl::OkStatus();
    }
  }
}

std::string SerializeInstance(const TaskInstance& inst) {
  Json j{{"id", inst.id},
         {"task", TaskSlug(inst.task)},
         {"bucket", BucketSlug(inst.bucket.name)},
         {"n_min", inst.bucket.n_min},
         {"n_max", inst.bucket.n_max},
         {"graph_index", inst.graph_index},
         {"query_index", inst.query_index},
         {"seed", internal::SeedToString(inst.seed)},
         {"construction", ConstructionSlug(inst.construction)},
         {"graph", internal::GraphToJson(inst.graph)},
         {"query", internal::QueryToJson(inst.query)},
         {"gold", internal::AnswerToJson(inst.gold)}};
  return j.dump();
}

absl::StatusOr<TaskInstance> ParseInstance(std::string_view line) {
  auto parsed = internal::ParseJson(line);
  if (!parsed.ok()) return parsed.status();
  const Json& j = *parsed;
  for (const char* key : {"id", "task", "bucket", "seed", "construction"}) {
    if (!j.contains(key) || !j[key].is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing string field '", key, "'"));
    }
  }
  for (const char* key : {"n_min", "n_max", "graph_index", "query_index"}) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing integer field '", key, "'"));
    }
  }
  for (const char* key : {"graph", "query", "gold"}) {
    if (!j.contains(key)) {
      return absl::InvalidArgumentError(absl::StrCat("missing field '", key, "'"));
    }
  }
  TaskInstance inst;
  inst.id = j["id"].get<std::string>();
  auto task = ParseTaskSlug(j["task"].get<std::string>());
  if (!task.ok()) return task.status();
  inst.task = *task;
  auto bucket = StandardBucket(j["bucket"].get<std::string>());
  if (!bucket.ok()) return bucket.status();
  auto bounds = SizeBucket::Create(bucket->name, j["n_min"].get<int>(),
                                   j["n_max"].get<int>());
  if (!bounds.ok()) return bounds.status();
  inst.bucket = *bounds;
  inst.graph_index = j["graph_index"].get<int>();
  inst.query_index = j["query_index"].get<int>();
  auto seed = internal::SeedFromString(j["seed"].get<std::string>());
  if (!seed.ok()) return seed.status();
  inst.seed = *seed;
  auto construction = ParseConstruction(j["construction"].get<std::string>());
  if (!construction.ok()) return construction.status();
  inst.construction = *construction;
  auto graph = internal::GraphFromJson(j["graph"]);
  if (!graph.ok()) return graph.status();
  inst.graph = *std::move(graph);
  auto query = internal::QueryFromJson(j["query"]);
  if (!query.ok()) return query.status();
  inst.query = *query;
  auto gold = internal::AnswerFromJson(j["gold"]);
  if (!gold.ok()) return gold.status();
  inst.gold = *std::move(gold);
  return inst;
}

std::string SerializeDataset(const std::vector<TaskInstance>& instances) {
  std::string out = DatasetHeader();
  out.push_back('\n');
  for (const TaskInstance& inst : instances) {
    out += SerializeInstance(inst);
    out.push_back('\n');
  }
  return out;
}

std::string SerializeManifest(const DatasetManifest& m) {
  Json counts = Json::object();
  for (const auto& [key, count] : m.counts) {
    counts[std::string(TaskSlug(key.first))][std::string(BucketSlug(key.second))] =
        count;
  }
  Json cycle = Json::object();
  for (const auto& [bucket, tally] : m.cycle_check_yes) {
    cycle[std::string(BucketSlug(bucket))] = {{"yes", tally.first},
                                              {"total", tally.second}};
  }
  Json j{{"schema", kManifestSchemaName},
         {"schema_version", m.schema_version},
         {"generator_version", m.generator_version},
         {"master_seed", internal::SeedToString(m.master_seed)},
         {"graphs_per_cell", m.graphs_per_cell},
         {"queries_per_graph", m.queries_per_graph},
         {"counts", counts},
         {"total", m.total},
         {"cycle_check_yes", cycle},
         {"digest_algorithm", m.digest_algorithm},
         {"content_digest", m.content_digest}};
  return j.dump(2) + "\n";
}

absl::StatusOr<DatasetManifest> ParseManifest(std::string_view text) {
  auto parsed = internal::ParseJson(text);
  if (!parsed.ok()) return parsed.status();
  const Json& j = *parsed;
  try {
    if (j.at("schema").get<std::string>() != kManifestSchemaName) {
      return absl::InvalidArgumentError("not a graphbench manifest");
    }
    DatasetManifest m;
    m.schema_version = j.at("schema_version").get<int>();
    if (m.schema_version != kDatasetSchemaVersion) {
      return absl::FailedPreconditionError(
          absl::StrCat("manifest schema version ", m.schema_version,
                       " unsupported (expected ", kDatasetSchemaVersion, ")"));
    }
    m.generator_version = j.at("generator_version").get<std::string>();
    auto seed = internal::SeedFromString(j.at("master_seed").get<std::string>());
    if (!seed.ok()) return seed.status();
    m.master_seed = *seed;
    m.graphs_per_cell = j.at("graphs_per_cell").get<int>();
    m.queries_per_graph = j.at("queries_per_graph").get<int>();
    for (const auto& [task_slug, per_bucket] : j.at("counts").items()) {
      auto task = ParseTaskSlug(task_slug);
      if (!task.ok()) return task.status();
      for (const auto& [bucket_slug, count] : per_bucket.items()) {
        auto bucket = StandardBucket(bucket_slug);
        if (!bucket.ok()) return bucket.status();
        m.counts[{*task, bucket->name}] = count.get<int>();
      }
    }
    m.total = j.at("total").get<int>();
    for (const auto& [bucket_slug, tally] : j.at("cycle_check_yes").items()) {
      auto bucket = StandardBucket(bucket_slug);
      if (!bucket.ok()) return bucket.status();
      m.cycle_check_yes[bucket->name] = {tally.at("yes").get<int>(),
                                         tally.at("total").get<int>()};
    }
    m.digest_algorithm = j.at("digest_algorithm").get<std::string>();
    m.content_digest = j.at("content_digest").get<std::string>();
    return m;
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("bad manifest: ", e.what()));
  }
}

absl::Status SaveDataset(const Dataset& dataset,
                         const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", dir.string(), ": ", ec.message()));
  }
  const std::string body = SerializeDataset(dataset.instances);
  DatasetManifest manifest = dataset.manifest;
  manifest.content_digest = Sha256Hex(body);
  if (auto s = WriteFile(dir / kDatasetFileName, body); !s.ok()) return s;
  return WriteFile(dir / kManifestFileName, SerializeManifest(manifest));
}

absl::StatusOr<LoadedDataset> LoadDatasetFile(const std::filesystem::path& path,
                                              const LoadOptions& options) {
  absl::Status status;
  const std::string text = ReadFile(path, &status);
  if (!status.ok()) return status;

  LoadedDataset loaded;
  std::istringstream lines(text);
  std::string line;
  int line_number = 0;
  if (!std::getline(lines, line)) {
    return absl::DataLossError(absl::StrCat(path.string(), ": empty file"));
  }
  ++line_number;
  auto header = internal::ParseJson(line);
  if (!header.ok() || !header->is_object() || !header->contains("schema") ||
      (*header)["schema"] != kDatasetSchemaName ||
      !header->contains("schema_version")) {
    return absl::DataLossError(
        absl::StrCat(path.string(), ": line 1: missing dataset header"));
  }
  if ((*header)["schema_version"] != kDatasetSchemaVersion) {
    return absl::FailedPreconditionError(absl::StrCat(
        path.string(), ": schema version ", (*header)["schema_version"].dump(),
        " unsupported (expected ", kDatasetSchemaVersion, ")"));
  }

  while (std::getline(lines, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto inst = ParseInstance(line);
    absl::Status problem = inst.status();
    if (problem.ok() && options.verify) problem = VerifyInstance(*inst);
    if (!problem.ok()) {
      std::string message =
          absl::StrCat("line ", line_number, ": ", problem.message());
      if (options.strict) {
        return absl::DataLossError(absl::StrCat(path.string(), ": ", message));
      }
      loaded.errors.push_back(std::move(message));
      continue;
    }
    loaded.instances.push_back(*std::move(inst));
  }
  return loaded;
}

absl::StatusOr<Dataset> LoadDataset(const std::filesystem::path& dir,
                                    const LoadOptions& options) {
  absl::Status status;
  const std::string manifest_text = ReadFile(dir / kManifestFileName, &status);
  if (!status.ok()) return status;
  auto manifest = ParseManifest(manifest_text);
  if (!manifest.ok()) return manifest.status();

  const std::string body = ReadFile(dir / kDatasetFileName, &status);
  if (!status.ok()) return status;
  if (manifest->digest_algorithm != kDigestAlgorithm) {
    return absl::FailedPreconditionError(
        absl::StrCat("unsupported digest ", manifest->digest_algorithm));
  }
  if (Sha256Hex(body) != manifest->content_digest && options.strict) {
    return absl::DataLossError(
        absl::StrCat((dir / kDatasetFileName).string(),
                     ": content digest does not match manifest"));
  }
  auto loaded = LoadDatasetFile(dir / kDatasetFileName, options);
  if (!loaded.ok()) return loaded.status();
  return Dataset{*std::move(manifest), std::move(loaded->instances)};
}

}  // namespace graphbench
