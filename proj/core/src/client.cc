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

#include <algorithm>
#include <atomic>
#include <ctime>
#include <thread>

#include "absl/strings/str_cat.h"
#include "graphbench/digest.h"
#include "json_codec.h"

namespace graphbench {
namespace {

using internal::Json;

std::string UtcTimestamp(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string DumpJson(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace

std::string_view BackendKindSlug(BackendKind kind) {
  switch (kind) {
    case BackendKind::kHttpChat: return "http";
    case BackendKind::kMockOracle: return "mock:oracle";
    case BackendKind::kMockAdversary: return "mock:adversary";
    case BackendKind::kReplay: return "replay";
  }
  return "unknown";
}

absl::StatusOr<BackendKind> ParseBackendKind(std::string_view text) {
  for (BackendKind kind : {BackendKind::kHttpChat, BackendKind::kMockOracle,
                           BackendKind::kMockAdversary, BackendKind::kReplay}) {
    if (BackendKindSlug(kind) == text) return kind;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown backend '", std::string(text),
      "' (expected http, mock:oracle, mock:adversary or replay)"));
}

std::string_view ClientErrorName(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk: return "ok";
    case absl::StatusCode::kDeadlineExceeded: return "Timeout";
    case absl::StatusCode::kResourceExhausted: return "RateLimited";
    case absl::StatusCode::kDataLoss: return "MalformedResponse";
    case absl::StatusCode::kNotFound: return "CacheMiss";
    case absl::StatusCode::kUnavailable: return "Unavailable";
    default: return "BackendError";
  }
}

std::string CanonicalRequest(const PromptBundle& bundle,
                             const ModelConfig& config) {
  Json j;
  j["prompt"] = bundle.text;
  j["model"] = config.model;
  j["temperature"] = config.temperature;
  j["max_tokens"] = config.max_tokens;
  return DumpJson(j);
}

std::string CacheKey(const PromptBundle& bundle, const ModelConfig& config) {
  return Sha256Hex(CanonicalRequest(bundle, config));
}

std::string SerializeTranscript(const Transcript& t) {
  Json j;
  j["id"] = t.instance_id;
  j["strategy"] = t.strategy;
  j["prompt_hash"] = t.prompt_hash;
  j["model"] = t.model;
  j["temperature"] = t.temperature;
  j["max_tokens"] = t.max_tokens;
  j["backend"] = std::string(BackendKindSlug(t.backend));
  j["from_cache"] = t.from_cache;
  j["label_base"] = t.convention.label_base;
  j["mst_mode"] = std::string(MstModeSlug(t.convention.mst_mode));
  j["latency_ms"] = t.latency_ms;
  j["timestamp"] = t.timestamp;
  j["response"] = t.response;
  if (!t.error.empty()) j["error"] = t.error;
  return DumpJson(j);
}

absl::StatusOr<Transcript> ParseTranscript(std::string_view line) {
  absl::StatusOr<Json> parsed = internal::ParseJson(line);
  if (!parsed.ok()) return parsed.status();
  const Json& j = *parsed;
  if (!j.is_object()) return absl::DataLossError("transcript is not an object");
  auto str = [&](const char* key, std::string* out) {
    if (!j.contains(key) || !j[key].is_string()) return false;
    *out = j[key].get<std::string>();
    return true;
  };
  Transcript t;
  std::string backend;
  std::string mst_mode;
  if (!str("id", &t.instance_id) || !str("strategy", &t.strategy) ||
      !str("prompt_hash", &t.prompt_hash) || !str("model", &t.model) ||
      !str("backend", &backend) || !str("mst_mode", &mst_mode) ||
      !str("timestamp", &t.timestamp) || !str("response", &t.response)) {
    return absl::DataLossError("transcript lacks a required string field");
  }
  if (!j.contains("temperature") || !j["temperature"].is_number() ||
      !j.contains("max_tokens") || !j["max_tokens"].is_number_integer() ||
      !j.contains("label_base") || !j["label_base"].is_number_integer() ||
      !j.contains("latency_ms") || !j["latency_ms"].is_number_integer() ||
      !j.contains("from_cache") || !j["from_cache"].is_boolean()) {
    return absl::DataLossError("transcript lacks a required numeric field");
  }
  t.temperature = j["temperature"].get<double>();
  t.max_tokens = j["max_tokens"].get<int>();
  t.convention.label_base = j["label_base"].get<int>();
  t.latency_ms = j["latency_ms"].get<int64_t>();
  t.from_cache = j["from_cache"].get<bool>();
  absl::StatusOr<BackendKind> kind = ParseBackendKind(backend);
  if (!kind.ok()) return kind.status();
  t.backend = *kind;
  absl::StatusOr<MstMode> mode = ParseMstMode(mst_mode);
  if (!mode.ok()) return mode.status();
  t.convention.mst_mode = *mode;
  str("error", &t.error);
  return t;
}

Client::Client(Backend* backend, ResponseCache* cache, ModelConfig config)
    : backend_(backend), cache_(cache), config_(std::move(config)) {}

absl::StatusOr<Transcript> Client::Complete(const PromptBundle& bundle) {
  Transcript t{.instance_id = bundle.instance_id,
               .strategy = bundle.strategy.Label(),
               .prompt_hash = CacheKey(bundle, config_),
               .model = config_.model,
               .temperature = config_.temperature,
               .max_tokens = config_.max_tokens,
               .backend = backend_->kind(),
               .convention = bundle.convention};
  const auto start = std::chrono::system_clock::now();
  t.timestamp = UtcTimestamp(start);
  if (cache_ != nullptr) {
    if (std::optional<std::string> hit = cache_->Lookup(t.prompt_hash)) {
      t.response = *std::move(hit);
      t.from_cache = true;
      return t;
    }
  }
  absl::StatusOr<std::string> response = backend_->Generate(bundle, config_);
  t.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::system_clock::now() - start)
                     .count();
  if (!response.ok()) return response.status();
  t.response = *std::move(response);
  if (cache_ != nullptr) {
    Json meta;
    meta["id"] = t.instance_id;
    meta["strategy"] = t.strategy;
    meta["backend"] = std::string(BackendKindSlug(t.backend));
    meta["latency_ms"] = t.latency_ms;
    meta["timestamp"] = t.timestamp;
    absl::Status appended =
        cache_->Append({.key = t.prompt_hash,
                        .request = CanonicalRequest(bundle, config_),
                        .response = t.response,
                        .metadata = DumpJson(meta)});
    if (!appended.ok()) return appended;
  }
  return t;
}

std::vector<absl::StatusOr<Transcript>> Client::CompleteAll(
    std::span<const PromptBundle> bundles, int parallelism) {
  std::vector<absl::StatusOr<Transcript>> results(
      bundles.size(), absl::UnknownError("not run"));
  const size_t workers = std::clamp<size_t>(
      static_cast<size_t>(std::max(parallelism, 1)), 1,
      std::max<size_t>(bundles.size(), 1));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < bundles.size(); i = next++) {
      results[i] = Complete(bundles[i]);
    }
  };
  if (workers == 1) {
    work();
    return results;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();
  return results;
}

}  // namespace graphbench
