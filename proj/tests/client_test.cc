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


#include "graphbench/client.h"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include "graphbench/backends.h"
#include "graphbench/cache.h"
#include "graphbench/scoring.h"
#include "gtest/gtest.h"
#include "httplib.h"

namespace graphbench {
namespace {

PromptBundle Bundle(std::string text, std::string id = "edge_count-S-0-0") {
  PromptBundle b;
  b.text = std::move(text);
  b.task = TaskKind::kEdgeCount;
  b.instance_id = std::move(id);
  return b;
}

std::filesystem::path TempFile(std::string_view name) {
  std::filesystem::path p = std::filesystem::path(::testing::TempDir()) /
                            ("graphbench_client_" + std::string(name));
  std::filesystem::remove(p);
  return p;
}

std::string ChatBody(std::string_view content) {
  return "{\"choices\":[{\"message\":{\"role\":\"assistant\",\"content\":\"" +
         std::string(content) + "\"}}]}";
}

TEST(CacheKeyTest, StableAndSensitive) {
  const ModelConfig cfg;
  const PromptBundle b = Bundle("How many edges?");
  EXPECT_EQ(CacheKey(b, cfg), CacheKey(b, cfg));
  EXPECT_EQ(CacheKey(b, cfg).size(), 64u);
  ModelConfig warm = cfg;
  warm.temperature = 0.7;
  EXPECT_NE(CacheKey(b, cfg), CacheKey(b, warm));
  ModelConfig other = cfg;
  other.model = "gpt-4";
  EXPECT_NE(CacheKey(b, cfg), CacheKey(b, other));
  ModelConfig shorter = cfg;
  shorter.max_tokens = 100;
  EXPECT_NE(CacheKey(b, cfg), CacheKey(b, shorter));
  EXPECT_NE(CacheKey(b, cfg), CacheKey(Bundle("How many nodes?"), cfg));
  // Only the request matters, not bookkeeping such as the id.
  EXPECT_EQ(CacheKey(b, cfg), CacheKey(Bundle("How many edges?", "x"), cfg));
  ModelConfig timeouts = cfg;
  timeouts.timeout_seconds = 1;
  EXPECT_EQ(CacheKey(b, cfg), CacheKey(b, timeouts));
}

TEST(CacheTest, ReloadsAppendedEntries) {
  const auto path = TempFile("reload.jsonl");
  {
    auto cache = ResponseCache::Open(path);
    ASSERT_TRUE(cache.ok()) << cache.status();
    ASSERT_TRUE((*cache)->Append({"k1", "{}", "one", "{}"}).ok());
    ASSERT_TRUE((*cache)->Append({"k2", "{}", "two\nlines \xff", "{}"}).ok());
    EXPECT_EQ((*cache)->size(), 2u);
  }
  auto cache = ResponseCache::Open(path);
  ASSERT_TRUE(cache.ok());
  EXPECT_EQ((*cache)->size(), 2u);
  EXPECT_EQ((*cache)->Lookup("k1"), "one");
  EXPECT_TRUE((*cache)->Lookup("k2")->starts_with("two\nlines "));
  EXPECT_FALSE((*cache)->Lookup("k3").has_value());
}

TEST(CacheTest, TornFinalLineIsDropped) {
  const auto path = TempFile("torn.jsonl");
  {
    auto cache = ResponseCache::Open(path);
    ASSERT_TRUE(cache.ok());
    ASSERT_TRUE((*cache)->Append({"k1", "{}", "one", "{}"}).ok());
  }
  std::ofstream(path, std::ios::app) << "{\"key\":\"k2\",\"requ";
  {
    auto cache = ResponseCache::Open(path);
    ASSERT_TRUE(cache.ok()) << cache.status();
    EXPECT_EQ((*cache)->size(), 1u);
    ASSERT_TRUE((*cache)->Append({"k3", "{}", "three", "{}"}).ok());
  }
  auto cache = ResponseCache::Open(path);
  ASSERT_TRUE(cache.ok()) << cache.status();
  EXPECT_EQ((*cache)->size(), 2u);
  EXPECT_EQ((*cache)->Lookup("k3"), "three");
}

TEST(CacheTest, CorruptMiddleLineIsAnError) {
  const auto path = TempFile("corrupt.jsonl");
  std::ofstream(path) << "garbage\n{\"key\":\"a\",\"request\":\"\","
                         "\"response\":\"r\",\"metadata\":{}}\n";
  EXPECT_EQ(ResponseCache::Open(path).status().code(),
            absl::StatusCode::kDataLoss);
}

class FakeChatServer : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/ok", [this](const httplib::Request& req,
                               httplib::Response& res) {
      ++calls_;
      std::lock_guard<std::mutex> lock(mu_);
      last_auth_ = req.get_header_value("Authorization");
      last_body_ = req.body;
      res.set_content(ChatBody("Answer: 3"), "application/json");
    });
    server_.Post("/ratelimit", [this](const httplib::Request&,
                                      httplib::Response& res) {
      if (++calls_ <= 2) {
        res.status = 429;
        res.set_header("Retry-After", "3");
        return;
      }
      res.set_content(ChatBody("late"), "application/json");
    });
    server_.Post("/fail500", [this](const httplib::Request&,
                                    httplib::Response& res) {
      ++calls_;
      res.status = 503;
    });
    server_.Post("/malformed", [this](const httplib::Request&,
                                      httplib::Response& res) {
      ++calls_;
      res.set_content("{\"choices\": []}", "application/json");
    });
    server_.Post("/slow", [this](const httplib::Request&,
                                 httplib::Response& res) {
      ++calls_;
      std::this_thread::sleep_for(std::chrono::milliseconds(2500));
      res.set_content(ChatBody("too late"), "application/json");
    });
    server_.Post("/bad", [this](const httplib::Request&,
                                httplib::Response& res) {
      ++calls_;
      res.status = 400;
      res.set_content("bad request", "text/plain");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
    setenv("GRAPHBENCH_TEST_KEY", "sk-test", 1);
  }

  void TearDown() override {
    server_.stop();
    thread_.join();
  }

  ModelConfig Config(std::string_view path) {
    ModelConfig cfg;
    cfg.endpoint = "http://127.0.0.1:" + std::to_string(port_) +
                   std::string(path);
    cfg.api_key_env = "GRAPHBENCH_TEST_KEY";
    cfg.max_retries = 2;
    cfg.initial_backoff_ms = 100;
    cfg.timeout_seconds = 1;
    return cfg;
  }

  HttpChatBackend Backend() {
    return HttpChatBackend([this](std::chrono::milliseconds d) {
      std::lock_guard<std::mutex> lock(mu_);
      sleeps_.push_back(d.count());
    });
  }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> calls_{0};
  std::mutex mu_;
  std::string last_auth_;
  std::string last_body_;
  std::vector<int64_t> sleeps_;
};

TEST_F(FakeChatServer, Success) {
  HttpChatBackend backend = Backend();
  absl::StatusOr<std::string> r =
      backend.Generate(Bundle("How many edges?"), Config("/ok"));
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(*r, "Answer: 3");
  EXPECT_EQ(calls_, 1);
  EXPECT_EQ(last_auth_, "Bearer sk-test");
  EXPECT_NE(last_body_.find("\"How many edges?\""), std::string::npos);
  EXPECT_NE(last_body_.find("\"temperature\":0.0"), std::string::npos);
  EXPECT_TRUE(sleeps_.empty());
}

TEST_F(FakeChatServer, MissingKeyFailsWithoutCalling) {
  HttpChatBackend backend = Backend();
  ModelConfig cfg = Config("/ok");
  cfg.api_key_env = "GRAPHBENCH_TEST_KEY_UNSET";
  unsetenv("GRAPHBENCH_TEST_KEY_UNSET");
  EXPECT_EQ(backend.Generate(Bundle("q"), cfg).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(calls_, 0);
}

TEST_F(FakeChatServer, RateLimitHonoursRetryAfter) {
  HttpChatBackend backend = Backend();
  absl::StatusOr<std::string> r =
      backend.Generate(Bundle("q"), Config("/ratelimit"));
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(*r, "late");
  EXPECT_EQ(calls_, 3);
  EXPECT_EQ(sleeps_, (std::vector<int64_t>{3000, 3000}));
}

TEST_F(FakeChatServer, RateLimitExhaustsRetries) {
  HttpChatBackend backend = Backend();
  ModelConfig cfg = Config("/ratelimit");
  cfg.max_retries = 1;
  absl::Status s = backend.Generate(Bundle("q"), cfg).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kResourceExhausted);
  EXPECT_EQ(ClientErrorName(s), "RateLimited");
  EXPECT_EQ(calls_, 2);
}

TEST_F(FakeChatServer, ServerErrorsBackOffExponentially) {
  HttpChatBackend backend = Backend();
  ModelConfig cfg = Config("/fail500");
  cfg.max_retries = 4;
  cfg.max_backoff_ms = 500;
  absl::Status s = backend.Generate(Bundle("q"), cfg).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kUnavailable);
  EXPECT_EQ(calls_, 5);
  EXPECT_EQ(sleeps_, (std::vector<int64_t>{100, 200, 400, 500}));
}

TEST_F(FakeChatServer, MalformedBody) {
  HttpChatBackend backend = Backend();
  absl::Status s = backend.Generate(Bundle("q"), Config("/malformed")).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kDataLoss);
  EXPECT_EQ(ClientErrorName(s), "MalformedResponse");
  EXPECT_EQ(calls_, 1);
}

TEST_F(FakeChatServer, Timeout) {
  HttpChatBackend backend = Backend();
  ModelConfig cfg = Config("/slow");
  cfg.max_retries = 0;
  absl::Status s = backend.Generate(Bundle("q"), cfg).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kDeadlineExceeded) << s;
  EXPECT_EQ(ClientErrorName(s), "Timeout");
}

TEST_F(FakeChatServer, ClientErrorsAreNotRetried) {
  HttpChatBackend backend = Backend();
  absl::Status s = backend.Generate(Bundle("q"), Config("/bad")).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(calls_, 1);
}

TEST_F(FakeChatServer, UnreachableHost) {
  HttpChatBackend backend = Backend();
  ModelConfig cfg = Config("/ok");
  cfg.endpoint = "http://127.0.0.1:1/v1";
  cfg.max_retries = 1;
  absl::Status s = backend.Generate(Bundle("q"), cfg).status();
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(sleeps_.size(), 1u);
}

TEST(ChatCodecTest, ParsesContent) {
  EXPECT_EQ(*ParseChatResponse(ChatBody("hi")), "hi");
  EXPECT_FALSE(ParseChatResponse("nope").ok());
  EXPECT_FALSE(ParseChatResponse("{\"choices\":[{\"message\":{}}]}").ok());
}

class CountingBackend : public Backend {
 public:
  BackendKind kind() const override { return BackendKind::kMockOracle; }
  absl::StatusOr<std::string> Generate(const PromptBundle& b,
                                       const ModelConfig&) override {
    const int now = ++active_;
    int seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {}
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    --active_;
    ++calls_;
    return "echo " + b.text;
  }
  std::atomic<int> active_{0}, peak_{0}, calls_{0};
};

TEST(ClientTest, ParallelismIsBoundedAndOrderKept) {
  CountingBackend backend;
  Client client(&backend, nullptr, {});
  std::vector<PromptBundle> bundles;
  for (int i = 0; i < 64; ++i) bundles.push_back(Bundle(std::to_string(i)));
  auto results = client.CompleteAll(bundles, 4);
  ASSERT_EQ(results.size(), 64u);
  for (int i = 0; i < 64; ++i) {
    ASSERT_TRUE(results[i].ok());
    EXPECT_EQ(results[i]->response, "echo " + std::to_string(i));
  }
  EXPECT_LE(backend.peak_, 4);
  EXPECT_GE(backend.peak_, 2);
  EXPECT_EQ(backend.calls_, 64);
}

TEST(ClientTest, CacheServesRepeatsAndReplay) {
  const auto path = TempFile("client_cache.jsonl");
  auto cache = ResponseCache::Open(path);
  ASSERT_TRUE(cache.ok());
  CountingBackend backend;
  Client client(&backend, cache->get(), {});
  const PromptBundle b = Bundle("same");
  absl::StatusOr<Transcript> first = client.Complete(b);
  absl::StatusOr<Transcript> second = client.Complete(b);
  ASSERT_TRUE(first.ok());
  ASSERT_TRUE(second.ok());
  EXPECT_FALSE(first->from_cache);
  EXPECT_TRUE(second->from_cache);
  EXPECT_EQ(second->response, "echo same");
  EXPECT_EQ(backend.calls_, 1);

  ReplayBackend replay;
  Client replayer(&replay, cache->get(), {});
  EXPECT_EQ(replayer.Complete(b)->response, "echo same");
  absl::Status miss = replayer.Complete(Bundle("other")).status();
  EXPECT_EQ(miss.code(), absl::StatusCode::kNotFound);
  EXPECT_EQ(ClientErrorName(miss), "CacheMiss");
  ModelConfig warm;
  warm.temperature = 0.7;
  Client warm_replayer(&replay, cache->get(), warm);
  EXPECT_FALSE(warm_replayer.Complete(b).ok());
}

TEST(ClientTest, TranscriptRoundTrip) {
  Transcript t{.instance_id = "mst-L-3-0",
               .strategy = "Pseudo+2-shot",
               .prompt_hash = std::string(64, 'a'),
               .model = "m",
               .temperature = 0.5,
               .max_tokens = 10,
               .response = "Answer: \"quoted\"\n",
               .latency_ms = 12,
               .timestamp = "2026-01-01T00:00:00Z",
               .backend = BackendKind::kHttpChat,
               .from_cache = true,
               .convention = {.label_base = 1, .mst_mode = MstMode::kCount},
               .error = "Timeout: x"};
  absl::StatusOr<Transcript> back = ParseTranscript(SerializeTranscript(t));
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, t);
  EXPECT_FALSE(ParseTranscript("{\"id\":1}").ok());
}

TEST(MockBackendTest, OracleRightAdversaryWrong) {
  absl::StatusOr<Dataset> d =
      AssembleDataset({.master_seed = 2, .graphs_per_cell = 5});
  ASSERT_TRUE(d.ok());
  MockOracleBackend oracle(d->instances);
  MockAdversaryBackend adversary(d->instances);
  for (const TaskInstance& inst : d->instances) {
    for (MstMode mode : {MstMode::kEdgeSet, MstMode::kCount}) {
      absl::StatusOr<PromptBundle> p =
          RenderPrompt(inst, Strategy::ZeroShot(), {.mst_mode = mode});
      ASSERT_TRUE(p.ok());
      const std::string good = *oracle.Generate(*p, {});
      const std::string bad = *adversary.Generate(*p, {});
      EXPECT_TRUE(EvaluateResponse(inst, "0-shot", p->convention, good).correct)
          << inst.id << ": " << good;
      const EvalRecord r = EvaluateResponse(inst, "0-shot", p->convention, bad);
      EXPECT_FALSE(r.correct) << inst.id << ": " << bad;
      EXPECT_EQ(r.failure, FailureKind::kWrongAnswer) << inst.id;
    }
  }
  PromptBundle unknown = Bundle("q", "nope");
  EXPECT_FALSE(oracle.Generate(unknown, {}).ok());
}

TEST(BackendKindTest, SlugsRoundTrip) {
  for (BackendKind k : {BackendKind::kHttpChat, BackendKind::kMockOracle,
                        BackendKind::kMockAdversary, BackendKind::kReplay}) {
    EXPECT_EQ(*ParseBackendKind(BackendKindSlug(k)), k);
  }
  EXPECT_FALSE(ParseBackendKind("mock").ok());
}

}  // namespace
}  // namespace graphbench
