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


// Concrete backends.

#ifndef GRAPHBENCH_BACKENDS_H_
#define GRAPHBENCH_BACKENDS_H_

#include <chrono>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>

#include "absl/status/statusor.h"
#include "graphbench/client.h"
#include "graphbench/dataset.h"

namespace graphbench {

// Chat-completions over HTTP(S). Retries connection failures, 429 and 5xx
// with exponential backoff, honouring Retry-After.
class HttpChatBackend : public Backend {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  HttpChatBackend();
  explicit HttpChatBackend(Sleeper sleeper);

  BackendKind kind() const override { return BackendKind::kHttpChat; }
  absl::StatusOr<std::string> Generate(const PromptBundle& bundle,
                                       const ModelConfig& config) override;

 private:
  Sleeper sleeper_;
};

// Request body sent for `bundle`; exposed for tests.
std::string ChatRequestBody(const PromptBundle& bundle,
                            const ModelConfig& config);
// Pulls choices[0].message.content out of a response body.
absl::StatusOr<std::string> ParseChatResponse(std::string_view body);

// Answers every prompt with its correctly formatted gold answer.
class MockOracleBackend : public Backend {
 public:
  explicit MockOracleBackend(std::span<const TaskInstance> instances);
  BackendKind kind() const override { return BackendKind::kMockOracle; }
  absl::StatusOr<std::string> Generate(const PromptBundle& bundle,
                                       const ModelConfig& config) override;

 private:
  std::unordered_map<std::string, const TaskInstance*> instances_;
};

// Answers every prompt with a well-formed but wrong answer.
class MockAdversaryBackend : public Backend {
 public:
  explicit MockAdversaryBackend(std::span<const TaskInstance> instances);
  BackendKind kind() const override { return BackendKind::kMockAdversary; }
  absl::StatusOr<std::string> Generate(const PromptBundle& bundle,
                                       const ModelConfig& config) override;

 private:
  std::unordered_map<std::string, const TaskInstance*> instances_;
};

// The wrong answer MockAdversaryBackend gives, 0-based.
Answer AdversarialAnswer(const TaskInstance& inst,
                         const AnswerConvention& convention);

// Only the cache can answer; every call is a cache miss.
class ReplayBackend : public Backend {
 public:
  BackendKind kind() const override { return BackendKind::kReplay; }
  absl::StatusOr<std::string> Generate(const PromptBundle& bundle,
                                       const ModelConfig& config) override;
};

absl::StatusOr<std::unique_ptr<Backend>> MakeBackend(
    BackendKind kind, std::span<const TaskInstance> instances);

}  // namespace graphbench

#endif  // GRAPHBENCH_BACKENDS_H_
