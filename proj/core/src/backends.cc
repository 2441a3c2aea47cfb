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


#include "graphbench/backends.h"

#include <algorithm>
#include <thread>
#include <utility>
#include <variant>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "json_codec.h"

namespace graphbench {
namespace {

using internal::Json;

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

absl::StatusOr<Endpoint> SplitEndpoint(std::string_view url) {
  const size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    return absl::InvalidArgumentError(
        absl::StrCat("endpoint '", std::string(url), "' has no scheme"));
  }
  const std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported endpoint scheme '", std::string(scheme), "'"));
  }
  const size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string_view::npos) {
    return Endpoint{std::string(url), "/"};
  }
  return Endpoint{std::string(url.substr(0, path_start)),
                  std::string(url.substr(path_start))};
}

bool Transient(int status) { return status == 429 || status >= 500; }

std::string OracleText(const Answer& answer, int label_base) {
  return absl::StrCat("Answer: ", FormatAnswer(answer, label_base));
}

std::unordered_map<std::string, const TaskInstance*> Index(
    std::span<const TaskInstance> instances) {
  std::unordered_map<std::string, const TaskInstance*> out;
  for (const TaskInstance& inst : instances) out.emplace(inst.id, &inst);
  return out;
}

absl::StatusOr<const TaskInstance*> Find(
    const std::unordered_map<std::string, const TaskInstance*>& index,
    std::string_view id) {
  auto it = index.find(std::string(id));
  if (it == index.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("mock backend knows no instance '", std::string(id), "'"));
  }
  return it->second;
}

}  // namespace

std::string ChatRequestBody(const PromptBundle& bundle,
                            const ModelConfig& config) {
  Json message;
  message["role"] = "user";
  message["content"] = bundle.text;
  Json j;
  j["model"] = config.model;
  j["messages"] = Json::array({message});
  j["temperature"] = config.temperature;
  j["max_tokens"] = config.max_tokens;
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

absl::StatusOr<std::string> ParseChatResponse(std::string_view body) {
  absl::StatusOr<Json> j = internal::ParseJson(body);
  if (!j.ok()) return absl::DataLossError("response body is not JSON");
  if (!j->is_object() || !j->contains("choices") ||
      !(*j)["choices"].is_array() || (*j)["choices"].empty()) {
    return absl::DataLossError("response has no choices");
  }
  const Json& choice = (*j)["choices"][0];
  if (!choice.is_object() || !choice.contains("message") ||
      !choice["message"].is_object() ||
      !choice["message"].contains("content") ||
      !choice["message"]["content"].is_string()) {
    return absl::DataLossError("response choice has no message content");
  }
  return choice["message"]["content"].get<std::string>();
}

HttpChatBackend::HttpChatBackend()
    : HttpChatBackend([](std::chrono::milliseconds d) {
        std::this_thread::sleep_for(d);
      }) {}

HttpChatBackend::HttpChatBackend(Sleeper sleeper)
    : sleeper_(std::move(sleeper)) {}

absl::StatusOr<std::string> HttpChatBackend::Generate(
    const PromptBundle& bundle, const ModelConfig& config) {
  absl::StatusOr<Endpoint> endpoint = SplitEndpoint(config.endpoint);
  if (!endpoint.ok()) return endpoint.status();

  httplib::Headers headers;
  if (!config.api_key_env.empty()) {
    const char* key = std::getenv(config.api_key_env.c_str());
    if (key == nullptr || *key == '\0') {
      return absl::FailedPreconditionError(absl::StrCat(
          "environment variable ", config.api_key_env, " is not set"));
    }
    headers.emplace("Authorization", absl::StrCat("Bearer ", key));
  }

  httplib::Client client(endpoint->origin);
  client.set_connection_timeout(config.timeout_seconds, 0);
  client.set_read_timeout(config.timeout_seconds, 0);
  client.set_write_timeout(config.timeout_seconds, 0);
  const std::string body = ChatRequestBody(bundle, config);

  absl::Status last = absl::UnavailableError("no attempt made");
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    std::chrono::milliseconds wait(std::min<int64_t>(
        static_cast<int64_t>(config.initial_backoff_ms) << std::min(attempt, 20),
        config.max_backoff_ms));

    httplib::Result res =
        client.Post(endpoint->path, headers, body, "application/json");
    if (!res) {
      const httplib::Error err = res.error();
      const std::string what = httplib::to_string(err);
      last = (err == httplib::Error::ConnectionTimeout ||
              err == httplib::Error::Read)
                 ? absl::DeadlineExceededError(what)
                 : absl::UnavailableError(what);
    } else if (res->status == 200) {
      return ParseChatResponse(res->body);
    } else if (Transient(res->status)) {
      const std::string what = absl::StrCat("HTTP ", res->status);
      last = res->status == 429 ? absl::ResourceExhaustedError(what)
                                : absl::UnavailableError(what);
      int retry_after = 0;
      if (res->has_header("Retry-After") &&
          absl::SimpleAtoi(res->get_header_value("Retry-After"), &retry_after) &&
          retry_after >= 0) {
        wait = std::min(std::chrono::milliseconds(retry_after * 1000LL),
                        std::chrono::milliseconds(config.max_backoff_ms));
      }
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("HTTP ", res->status, ": ", res->body.substr(0, 200)));
    }
    if (attempt < config.max_retries) sleeper_(wait);
  }
  return last;
}

MockOracleBackend::MockOracleBackend(std::span<const TaskInstance> instances)
    : instances_(Index(instances)) {}

absl::StatusOr<std::string> MockOracleBackend::Generate(
    const PromptBundle& bundle, const ModelConfig&) {
  absl::StatusOr<const TaskInstance*> inst = Find(instances_, bundle.instance_id);
  if (!inst.ok()) return inst.status();
  return OracleText(PosedGold(**inst, bundle.convention),
                    bundle.convention.label_base);
}

Answer AdversarialAnswer(const TaskInstance& inst,
                         const AnswerConvention& convention) {
  Answer gold = PosedGold(inst, convention);
  if (auto* a = std::get_if<IntAnswer>(&gold)) {
    ++a->value;
  } else if (auto* b = std::get_if<BoolAnswer>(&gold)) {
    b->value = !b->value;
  } else if (auto* set = std::get_if<NodeSetAnswer>(&gold)) {
    // A node is never its own neighbour.
    std::vector<Node> nodes = set->nodes;
    nodes.push_back(inst.query.source.value_or(0));
    gold = MakeNodeSet(std::move(nodes));
  } else if (auto* seq = std::get_if<NodeSeqAnswer>(&gold)) {
    if (!seq->nodes.empty()) seq->nodes.push_back(seq->nodes.front());
  } else if (auto* edges = std::get_if<EdgeSetAnswer>(&gold)) {
    if (!edges->edges.empty()) edges->edges.pop_back();
  }
  return gold;
}

MockAdversaryBackend::MockAdversaryBackend(
    std::span<const TaskInstance> instances)
    : instances_(Index(instances)) {}

absl::StatusOr<std::string> MockAdversaryBackend::Generate(
    const PromptBundle& bundle, const ModelConfig&) {
  absl::StatusOr<const TaskInstance*> inst = Find(instances_, bundle.instance_id);
  if (!inst.ok()) return inst.status();
  return OracleText(AdversarialAnswer(**inst, bundle.convention),
                    bundle.convention.label_base);
}

absl::StatusOr<std::string> ReplayBackend::Generate(const PromptBundle& bundle,
                                                    const ModelConfig&) {
  return absl::NotFoundError(
      absl::StrCat("cache miss for ", bundle.instance_id, " (",
                   bundle.strategy.Label(), ")"));
}

absl::StatusOr<std::unique_ptr<Backend>> MakeBackend(
    BackendKind kind, std::span<const TaskInstance> instances) {
  switch (kind) {
    case BackendKind::kHttpChat: return std::make_unique<HttpChatBackend>();
    case BackendKind::kMockOracle:
      return std::make_unique<MockOracleBackend>(instances);
    case BackendKind::kMockAdversary:
      return std::make_unique<MockAdversaryBackend>(instances);
    case BackendKind::kReplay: return std::make_unique<ReplayBackend>();
  }
  return absl::InvalidArgumentError("unknown backend kind");
}

}  // namespace graphbench
