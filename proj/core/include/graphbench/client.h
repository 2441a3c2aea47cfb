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


// Model execution: configuration, transcripts and the caching client.

#ifndef GRAPHBENCH_CLIENT_H_
#define GRAPHBENCH_CLIENT_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "graphbench/cache.h"
#include "graphbench/prompt.h"

namespace graphbench {

struct ModelConfig {
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string model = "gpt-3.5-turbo";
  double temperature = 0.0;
  int max_tokens = 4096;
  int timeout_seconds = 60;
  int max_retries = 5;
  // Name of the environment variable holding the bearer token. Empty sends
  // no Authorization header.
  std::string api_key_env = "OPENAI_API_KEY";
  int initial_backoff_ms = 500;
  int max_backoff_ms = 30000;
};

enum class BackendKind : uint8_t {
  kHttpChat,
  kMockOracle,
  kMockAdversary,
  kReplay,
};

std::string_view BackendKindSlug(BackendKind kind);  // "http", "mock:oracle", ...
absl::StatusOr<BackendKind> ParseBackendKind(std::string_view text);

// Error vocabulary shared by every backend:
//   kDeadlineExceeded   Timeout
//   kResourceExhausted  RateLimited (retries used up)
//   kDataLoss           MalformedResponse
//   kNotFound           CacheMiss (replay)
std::string_view ClientErrorName(const absl::Status& status);

class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendKind kind() const = 0;
  // Raw response text for one prompt. Must be safe to call concurrently.
  virtual absl::StatusOr<std::string> Generate(const PromptBundle& bundle,
                                               const ModelConfig& config) = 0;
};

struct Transcript {
  std::string instance_id;
  std::string strategy;
  std::string prompt_hash;  // == CacheKey()
  std::string model;
  double temperature = 0.0;
  int max_tokens = 0;
  std::string response;
  int64_t latency_ms = 0;
  std::string timestamp;  // UTC, RFC 3339
  BackendKind backend = BackendKind::kMockOracle;
  bool from_cache = false;
  AnswerConvention convention;
  std::string error;  // set when the backend failed; response is then empty

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// Canonical request JSON: prompt text, model id and decoding parameters.
std::string CanonicalRequest(const PromptBundle& bundle,
                             const ModelConfig& config);
// SHA-256 hex of CanonicalRequest().
std::string CacheKey(const PromptBundle& bundle, const ModelConfig& config);

std::string SerializeTranscript(const Transcript& transcript);
absl::StatusOr<Transcript> ParseTranscript(std::string_view line);

class Client {
 public:
  // `cache` may be null. Neither pointer is owned.
  Client(Backend* backend, ResponseCache* cache, ModelConfig config);

  // Served from the cache when possible; successful backend calls are
  // appended to it.
  absl::StatusOr<Transcript> Complete(const PromptBundle& bundle);

  // Runs at most `parallelism` calls at once. Results follow input order.
  std::vector<absl::StatusOr<Transcript>> CompleteAll(
      std::span<const PromptBundle> bundles, int parallelism);

  const ModelConfig& config() const { return config_; }

 private:
  Backend* backend_;
  ResponseCache* cache_;
  ModelConfig config_;
};

}  // namespace graphbench

#endif  // GRAPHBENCH_CLIENT_H_
