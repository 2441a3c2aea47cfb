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


// Append-only JSONL response cache.

#ifndef GRAPHBENCH_CACHE_H_
#define GRAPHBENCH_CACHE_H_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace graphbench {

struct CacheEntry {
  std::string key;
  std::string request;   // canonical request JSON
  std::string response;  // raw model text
  std::string metadata;  // JSON object
};

// One JSON object per line: {"key", "request", "response", "metadata"}.
// Each append is a single write(2) on an O_APPEND descriptor. A torn final
// line left by a crash is dropped when the cache is opened.
class ResponseCache {
 public:
  static absl::StatusOr<std::unique_ptr<ResponseCache>> Open(
      const std::filesystem::path& path);
  ~ResponseCache();

  ResponseCache(const ResponseCache&) = delete;
  ResponseCache& operator=(const ResponseCache&) = delete;

  std::optional<std::string> Lookup(std::string_view key) const;
  absl::Status Append(const CacheEntry& entry);
  size_t size() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  ResponseCache(std::filesystem::path path, int fd);

  std::filesystem::path path_;
  int fd_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::string> responses_;
};

}  // namespace graphbench

#endif  // GRAPHBENCH_CACHE_H_
