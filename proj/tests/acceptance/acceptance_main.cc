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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.h"
#include "commands.h"
#include "graphbench/dataset.h"
#include "graphbench/digest.h"
#include "graphbench/extract.h"
#include "graphbench/oracles.h"
#include "graphbench/prompt.h"
#include "graphbench/pseudocode.h"
#include "graphbench/report.h"
#include "graphbench/rng.h"
#include "json.hpp"
#include "test_graphs.h"

namespace graphbench {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

const fs::path kDataDir = GRAPHBENCH_TEST_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path Scratch(std::string_view name) {
  static const fs::path root = fs::temp_directory_path() /
      ("graphbench_acceptance_" + std::to_string(::getpid()));
  const fs::path p = root / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void CleanScratch() {
  fs::remove_all(Scratch("x").parent_path());
}

// 1. Dataset fidelity.
Outcome DatasetFidelity() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<Dataset> a = AssembleDataset({.master_seed = 7});
  absl::StatusOr<Dataset> b = AssembleDataset({.master_seed = 7});
  if (!a.ok() || !b.ok()) {
    o.Fail("generation failed");
    return o;
  }
  const fs::path da = Scratch("gen_a"), db = Scratch("gen_b");
  if (!SaveDataset(*a, da).ok() || !SaveDataset(*b, db).ok()) {
    o.Fail("save failed");
    return o;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count() / 2;
  int graph = 0, node = 0, pair = 0;
  for (const TaskInstance& inst : a->instances) {
    switch (ScopeOf(inst.task)) {
      case TaskScope::kGraph: ++graph; break;
      case TaskScope::kNode: ++node; break;
      case TaskScope::kNodePair: ++pair; break;
    }
    const int n = inst.graph.node_count();
    if (n < inst.bucket.n_min || n > inst.bucket.n_max) {
      o.Fail(inst.id + " has n outside its bucket");
    }
  }
  if (a->instances.size() != 6600 || graph != 2100 || node != 3000 ||
      pair != 1500) {
    o.Fail("counts " + std::to_string(a->instances.size()) + " = " +
           std::to_string(graph) + " + " + std::to_string(node) + " + " +
           std::to_string(pair));
  }
  const std::string body = Slurp(da / kDatasetFileName);
  if (body != Slurp(db / kDatasetFileName) ||
      Slurp(da / kManifestFileName) != Slurp(db / kManifestFileName)) {
    o.Fail("regeneration is not byte-identical");
  }
  if (secs >= 60) o.Fail("generation took " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "6600 = 2100 + 3000 + 1500, byte-identical, sha256 %.12s..., "
                  "%.2f s per generation",
                  Sha256Hex(body).c_str(), secs);
    o.detail = buf;
  }
  return o;
}

// 2. Oracle correctness against brute force.
bool UndirectedAgrees(const Graph& g, Rng& rng, std::string* why) {
  const int n = g.node_count();
  const auto ok = [&](bool cond, const char* what) {
    if (!cond && why->empty()) *why = what;
    return cond;
  };
  bool agree = true;
  agree &= ok(ComputeGold(TaskKind::kNodeCount, g, {}).value() ==
                  Answer(IntAnswer{n}),
              "node count");
  int pairs = 0;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) pairs += g.HasEdge(u, v);
  }
  agree &= ok(ComputeGold(TaskKind::kEdgeCount, g, {}).value() ==
                  Answer(IntAnswer{pairs}),
              "edge count");
  for (Node u = 0; u < n; ++u) {
    agree &= ok(Degree(g, u).value() == testing::BruteDegree(g, u), "degree");
    agree &= ok(Neighbors(g, u).value().nodes == testing::BruteNeighbors(g, u),
                "neighbors");
  }
  agree &= ok(ConnectedComponents(g) == testing::BruteComponentCount(g),
              "components");
  agree &= ok(HasCycle(g) == testing::BruteHasCycle(g), "cycle");
  agree &= ok(IsBipartite(g) == testing::BruteIsBipartite(g), "bipartite");
  const auto dist = testing::FloydWarshall(g);
  for (Node u = 0; u < n; ++u) {
    for (Node v = 0; v < n; ++v) {
      if (u == v) continue;
      absl::StatusOr<int> d = ShortestPathLength(g, u, v);
      if (dist[u][v] >= testing::kUnreachable) {
        agree &= ok(absl::IsNotFound(d.status()), "unreachable pair");
      } else {
        agree &= ok(d.ok() && *d == dist[u][v], "shortest path");
      }
    }
  }
  const int m = g.edge_count();
  auto check_subset = [&](uint32_t mask) {
    const std::vector<Edge> es = testing::EdgeSubset(g, mask);
    agree &= ok(ValidateSpanningTree(g, es) ==
                    testing::BruteIsSpanningForest(g, es),
                "spanning tree validator");
  };
  if (m <= 12) {
    for (uint32_t mask = 0; mask < (1u << m); ++mask) check_subset(mask);
  } else {
    for (int i = 0; i < 256; ++i) {
      check_subset(static_cast<uint32_t>(rng.Next()) &
                   ((m >= 32) ? ~0u : ((1u << m) - 1)));
    }
  }
  if (ConnectedComponents(g) == 1) {
    absl::StatusOr<Answer> mst =
        ComputeGold(TaskKind::kMinimumSpanningTree, g, {});
    agree &= ok(mst.ok() && testing::BruteIsSpanningForest(
                                g, std::get<EdgeSetAnswer>(*mst).edges),
                "spanning tree oracle");
  }
  return agree;
}

bool DirectedAgrees(const Graph& g, std::string* why) {
  const auto orders = testing::AllTopoOrders(g);
  absl::StatusOr<NodeSeqAnswer> topo = TopoOrder(g);
  bool agree = topo.ok() == !orders.empty();
  if (topo.ok()) {
    agree &= std::find(orders.begin(), orders.end(), topo->nodes) != orders.end();
  }
  std::vector<Node> perm(g.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    agree &= ValidateTopoOrder(g, perm) == testing::BruteIsTopoOrder(g, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!agree && why->empty()) *why = "topological order";
  return agree;
}

Outcome OracleCorrectness() {
  Outcome o;
  Rng rng(20261018);
  int undirected = 0, directed = 0, agreed = 0;
  for (int i = 0; i < 1000; ++i) {
    const double p = rng.UnitReal();
    std::string why;
    bool agree;
    if (i % 4 == 3) {
      const int n = static_cast<int>(rng.UniformInt(1, 6));
      const Graph g = rng.Coin() ? testing::RandomDag(n, p, rng)
                                 : testing::RandomDigraph(n, p, rng);
      agree = DirectedAgrees(g, &why);
      ++directed;
    } else {
      const int n = static_cast<int>(rng.UniformInt(1, 8));
      agree = UndirectedAgrees(testing::RandomGraph(n, p, rng), rng, &why);
      ++undirected;
    }
    if (agree) {
      ++agreed;
    } else {
      o.Fail("graph " + std::to_string(i) + ": " + why);
    }
  }
  if (o.pass) {
    o.detail = std::to_string(agreed) + "/1000 graphs agree (" +
               std::to_string(undirected) + " undirected n<=8, " +
               std::to_string(directed) + " directed n<=6)";
  }
  return o;
}

// 3. Structural laws.
Outcome StructuralLaws() {
  Outcome o;
  Rng rng(42);
  int cyclic = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = static_cast<int>(rng.UniformInt(1, 51));
    const Graph g = testing::RandomGraph(n, rng.UnitReal() * 0.3, rng);
    const int m = g.edge_count();
    const int c = ConnectedComponents(g);
    const bool cycle = HasCycle(g);
    cyclic += cycle;
    int degree_sum = 0;
    for (Node u = 0; u < n; ++u) degree_sum += Degree(g, u).value();
    if (cycle != (m > n - c)) o.Fail("cycle law broken at graph " + std::to_string(i));
    if (degree_sum != 2 * m) o.Fail("handshake law broken at graph " + std::to_string(i));
  }
  if (o.pass) {
    o.detail = "10000 graphs (" + std::to_string(cyclic) +
               " cyclic): has_cycle <=> m > n - c, sum deg = 2m";
  }
  return o;
}

// 4. Prompt fidelity.
std::string FileSafe(std::string s) {
  for (char& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') c = '_';
  }
  return s;
}

Outcome PromptFidelity() {
  Outcome o;
  absl::StatusOr<Dataset> d = AssembleDataset(
      {.master_seed = 7, .graphs_per_cell = 1, .buckets = {kSmall}});
  if (!d.ok()) {
    o.Fail("dataset");
    return o;
  }
  const std::vector<Strategy> strategies = {
      Strategy::ZeroShot(),   Strategy::KShot(2),
      Strategy::BuildAGraph(), Strategy::ZeroCot(),
      Strategy::Pseudo(),     Strategy::PseudoKShot(PseudoStyle::kPlain, 2)};
  int goldens = 0;
  for (TaskKind task : kAllTasks) {
    const auto inst = std::find_if(
        d->instances.begin(), d->instances.end(),
        [&](const TaskInstance& i) { return i.task == task; });
    for (const Strategy& s : strategies) {
      absl::StatusOr<PromptBundle> p =
          RenderPrompt(*inst, s, {.exemplar_master_seed = 7});
      const fs::path golden = kDataDir / "golden" /
          (std::string(TaskSlug(task)) + "." + FileSafe(s.Label()) + ".txt");
      if (!p.ok() || !fs::exists(golden) || p->text != Slurp(golden)) {
        o.Fail("golden mismatch " + golden.filename().string());
        continue;
      }
      ++goldens;
      const bool bag = p->text.find(
          "Let's construct a graph with the nodes and edges first") !=
          std::string::npos;
      const bool cot = p->text.find("Let's think step by step") !=
                       std::string::npos;
      if (bag != (s.kind == StrategyKind::kBuildAGraph) ||
          cot != (s.kind == StrategyKind::kZeroCot)) {
        o.Fail("sentinel sentence misplaced in " + s.Label());
      }
    }
  }
  std::map<std::string, std::string> pinned;
  std::ifstream in(kDataDir / "fixtures" / "pseudocode.sha256");
  for (std::string hash, name; in >> hash >> name;) pinned[name] = hash;
  int hashed = 0;
  for (const auto& [name, text] : AllPseudocodeAssets()) {
    if (pinned.contains(name) && pinned[name] == Sha256Hex(text)) ++hashed;
  }
  if (hashed != 30 || pinned.size() != 30) {
    o.Fail(std::to_string(hashed) + "/30 pseudo-code assets match");
  }
  if (o.pass) {
    o.detail = std::to_string(goldens) +
               " golden prompts, BaG/0-CoT sentences present, 30/30 "
               "pseudo-code hashes";
  }
  return o;
}

// 5. Harness integrity, and 7. ablation plumbing.
absl::StatusOr<EvalReport> ReportOf(const fs::path& dataset,
                                    const fs::path& records) {
  absl::StatusOr<Dataset> d = LoadDataset(dataset, {.verify = false});
  if (!d.ok()) return d.status();
  std::vector<EvalRecord> recs;
  std::ifstream in(records);
  for (std::string line; std::getline(in, line);) {
    absl::StatusOr<EvalRecord> r = ParseRecord(line);
    if (!r.ok()) return r.status();
    recs.push_back(*std::move(r));
  }
  return AggregateReport(recs, d->instances);
}

// Every cell equals `percent`; returns the number of cells.
int CheckCells(const EvalReport& report, int percent, Outcome& o,
               std::string_view what) {
  for (const auto& [key, stats] : report.cells) {
    if (RoundedPercent(stats.correct, stats.total) != percent ||
        (percent == 100) != (stats.correct == stats.total)) {
      o.Fail(std::string(what) + " cell " + std::string(TaskSlug(key.task)) +
             "/" + std::string(BucketSlug(key.bucket)) + "/" + key.strategy +
             " is off");
    }
  }
  return static_cast<int>(report.cells.size());
}

Outcome HarnessIntegrity(const fs::path& dataset) {
  Outcome o;
  std::ostringstream log;
  auto config = [&](std::string_view name, BackendKind backend) {
    cli::RunConfig c;
    c.dataset = dataset;
    c.strategies = *cli::ExpandStrategies({"all"}, {}, {});
    c.backend = backend;
    c.out = Scratch(name);
    return c;
  };
  const cli::RunConfig oracle = config("oracle", BackendKind::kMockOracle);
  const cli::RunConfig adversary = config("adversary", BackendKind::kMockAdversary);
  absl::StatusOr<cli::RunSummary> good = cli::CmdRun(oracle, log);
  absl::StatusOr<cli::RunSummary> bad = cli::CmdRun(adversary, log);
  if (!good.ok() || !bad.ok()) {
    o.Fail("mock run failed");
    return o;
  }
  absl::StatusOr<EvalReport> good_report =
      ReportOf(dataset, oracle.out / cli::kRecordsFile);
  absl::StatusOr<EvalReport> bad_report =
      ReportOf(dataset, adversary.out / cli::kRecordsFile);
  if (!good_report.ok() || !bad_report.ok()) {
    o.Fail("records unreadable");
    return o;
  }
  const int cells = CheckCells(*good_report, 100, o, "oracle");
  CheckCells(*bad_report, 0, o, "adversary");
  if (cells != 180) o.Fail(std::to_string(cells) + " cells instead of 180");

  std::vector<std::string> replays;
  for (std::string_view name : {"replay_a", "replay_b"}) {
    cli::RunConfig r = config(name, BackendKind::kReplay);
    r.cache = oracle.out / cli::kCacheFile;
    absl::StatusOr<cli::RunSummary> s = cli::CmdRun(r, log);
    if (!s.ok() || s->cache_hits != s->prompts) {
      o.Fail("replay missed the cache");
      return o;
    }
    const fs::path rescored = r.out / "rescored.jsonl";
    if (!cli::CmdScore(dataset, r.out / cli::kTranscriptsFile, rescored).ok()) {
      o.Fail("score failed");
      return o;
    }
    replays.push_back(Slurp(r.out / cli::kRecordsFile) + Slurp(rescored) +
                      Slurp(r.out / "report.md") + Slurp(r.out / "report.csv"));
  }
  if (replays[0] != replays[1]) o.Fail("replay scoring passes differ");
  if (o.pass) {
    o.detail = "MockOracle 100% and MockAdversary 0% in all " +
               std::to_string(cells) + " cells (" +
               std::to_string(good->prompts) +
               " prompts each); two replay scoring passes byte-identical (" +
               std::to_string(replays[0].size()) + " bytes)";
  }
  return o;
}

Outcome AblationPlumbing(const fs::path& dataset) {
  Outcome o;
  std::ostringstream log;
  absl::StatusOr<std::vector<Strategy>> grid = cli::ExpandStrategies(
      {"k-shot", "pseudo", "pseudo-k-shot"}, {"1", "2", "3"}, {1, 2, 3, 4, 5});
  if (!grid.ok() || grid->size() != 23) {
    o.Fail("strategy grid");
    return o;
  }
  int prompts = 0;
  for (BackendKind backend :
       {BackendKind::kMockOracle, BackendKind::kMockAdversary}) {
    cli::RunConfig c;
    c.dataset = dataset;
    c.strategies = *grid;
    c.backend = backend;
    c.out = Scratch("ablation");
    absl::StatusOr<cli::RunSummary> s = cli::CmdRun(c, log);
    if (!s.ok()) {
      o.Fail(std::string(s.status().message()));
      return o;
    }
    absl::StatusOr<EvalReport> r = ReportOf(dataset, c.out / cli::kRecordsFile);
    if (!r.ok()) {
      o.Fail("records unreadable");
      return o;
    }
    const bool oracle = backend == BackendKind::kMockOracle;
    const int cells = CheckCells(*r, oracle ? 100 : 0, o, BackendKindSlug(backend));
    if (cells != 23 * 30) o.Fail("missing ablation cells");
    const std::string md = Slurp(c.out / "report.md");
    for (const Strategy& s : *grid) {
      if (md.find("| " + s.Label() + " |") == std::string::npos) {
        o.Fail("report lacks row " + s.Label());
      }
    }
    prompts += s->prompts;
  }
  if (o.pass) {
    o.detail = "shots 1..5 x styles python/pseudo/multi: 23 strategies, " +
               std::to_string(prompts) + " prompts under both mocks";
  }
  return o;
}

// 6. Extraction.
std::vector<Node> Nodes(const Json& j) {
  std::vector<Node> out;
  for (const Json& v : j) out.push_back(v.get<Node>());
  return out;
}

std::optional<Answer> DecodeExpected(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "failure") return std::nullopt;
  if (kind == "int") return IntAnswer{j.at("value").get<int64_t>()};
  if (kind == "bool") return BoolAnswer{j.at("value").get<bool>()};
  if (kind == "node_set") return MakeNodeSet(Nodes(j.at("nodes")));
  if (kind == "node_seq") return NodeSeqAnswer{Nodes(j.at("nodes"))};
  EdgeSetAnswer edges;
  for (const Json& e : j.at("edges")) {
    edges.edges.push_back({e.at(0).get<Node>(), e.at(1).get<Node>()});
  }
  return edges;
}

Outcome Extraction() {
  Outcome o;
  std::ifstream in(kDataDir / "fixtures" / "extraction_corpus.jsonl");
  int entries = 0, agreed = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    ++entries;
    const Json j = Json::parse(line);
    const TaskKind task = *ParseTaskSlug(j.at("task").get<std::string>());
    ExtractionContext ctx{
        .node_count = j.at("node_count").get<int>(),
        .label_base = j.at("label_base").get<int>(),
        .mst_mode = *ParseMstMode(j.at("mst_mode").get<std::string>())};
    const std::optional<Answer> expected = DecodeExpected(j.at("expected"));
    absl::StatusOr<Answer> got =
        ExtractAnswer(task, j.at("response").get<std::string>(), ctx);
    const bool agree = expected.has_value()
                           ? (got.ok() && *got == *expected)
                           : absl::IsNotFound(got.status());
    if (agree) {
      ++agreed;
    } else {
      o.Fail("corpus entry " + std::to_string(entries) + " disagrees");
    }
  }
  if (entries < 50) o.Fail("corpus has only " + std::to_string(entries));

  static constexpr std::string_view kPieces[] = {
      "Answer:", "answer", "**", "[", "]", "(", ")", "{", "}", ",", " ", "\n",
      "->", "\xE2\x86\x92", "yes", "no", "not", "cycle", "bipartite", "0", "7",
      "99999999999999999999", "-", "?", ":", "\xFF"};
  Rng rng(7);
  int fuzzed = 0;
  for (int iter = 0; iter < 20000; ++iter) {
    std::string text;
    const int64_t len = rng.UniformInt(0, 80);
    for (int64_t i = 0; i < len; ++i) {
      if (rng.Coin()) {
        text += kPieces[rng.UniformInt(0, std::size(kPieces) - 1)];
      } else {
        text.push_back(static_cast<char>(rng.UniformInt(0, 255)));
      }
    }
    for (TaskKind task : kAllTasks) {
      try {
        absl::StatusOr<Answer> got = ExtractAnswer(
            task, text, {.node_count = static_cast<int>(rng.UniformInt(0, 9))});
        if (!got.ok() && !absl::IsNotFound(got.status())) {
          o.Fail("fuzz input gave an unexpected error");
        }
      } catch (...) {
        o.Fail("fuzz input threw");
      }
      ++fuzzed;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(agreed) + "/" + std::to_string(entries) +
               " corpus entries agree; " + std::to_string(fuzzed) +
               " fuzz extractions without a crash";
  }
  return o;
}

int Main() {
  const fs::path dataset = Scratch("dataset");
  std::ostringstream log;
  const bool have_dataset =
      cli::CmdGenerate({.seed = 7, .out = dataset}, log).ok();

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"dataset-fidelity", DatasetFidelity},
      {"oracle-correctness", OracleCorrectness},
      {"structural-laws", StructuralLaws},
      {"prompt-fidelity", PromptFidelity},
      {"harness-integrity", [&] { return HarnessIntegrity(dataset); }},
      {"extraction", Extraction},
      {"ablation-plumbing", [&] { return AblationPlumbing(dataset); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    if (!have_dataset && i >= 4) {
      o.Fail("could not generate the seed-7 dataset");
    } else {
      o = criteria[i].run();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " "
              << criteria[i].name << ": " << o.detail << std::endl;
  }
  CleanScratch();
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed;
}

}  // namespace
}  // namespace graphbench

int main() { return graphbench::Main(); }
