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


#include "graphbench/cache.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "json_codec.h"

namespace graphbench {
namespace {

absl::Status ErrnoError(std::string_view what, const std::filesystem::path& p) {
  return absl::InternalError(
      absl::StrCat(std::string(what), " ", p.string(), ": ", std::strerror(errno)));
}

}  // namespace

absl::StatusOr<std::unique_ptr<ResponseCache>> ResponseCache::Open(
    const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::string contents;
  if (std::filesystem::exists(path, ec)) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return ErrnoError("cannot read", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    contents = buf.str();
    // Drop a torn final line so later appends start on a fresh line.
    const size_t keep = contents.rfind('\n') == std::string::npos
                            ? 0
                            : contents.rfind('\n') + 1;
    if (keep != contents.size()) {
      contents.resize(keep);
      std::filesystem::resize_file(path, keep, ec);
      if (ec) {
        return absl::InternalError(
            absl::StrCat("cannot truncate ", path.string(), ": ", ec.message()));
      }
    }
  }
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC,
                        0644);
  if (fd < 0) return ErrnoError("cannot open", path);
  std::unique_ptr<ResponseCache> cache(new ResponseCache(path, fd));

  size_t start = 0;
  int line_no = 0;
  while (start < contents.size()) {
    const size_t end = contents.find('\n', start);
    const std::string_view line(contents.data() + start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    absl::StatusOr<internal::Json> j = internal::ParseJson(line);
    if (!j.ok() || !j->is_object() || !j->contains("key") ||
        !(*j)["key"].is_string() || !j->contains("response") ||
        !(*j)["response"].is_string()) {
      return absl::DataLossError(absl::StrCat(path.string(), ": line ",
                                              line_no, ": bad cache entry"));
    }
    cache->responses_.insert_or_assign((*j)["key"].get<std::string>(),
                                       (*j)["response"].get<std::string>());
  }
  return cache;
}

ResponseCache::ResponseCache(std::filesystem::path path, int fd)
    : path_(std::move(path)), fd_(fd) {}

ResponseCache::~ResponseCache() {
  if (fd_ >= 0) ::close(fd_);
}

std::optional<std::string> ResponseCache::Lookup(std::string_view key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = responses_.find(std::string(key));
  if (it == responses_.end()) return std::nullopt;
  return it->second;
}

absl::Status ResponseCache::Append(const CacheEntry& entry) {
  internal::Json j;
  j["key"] = entry.key;
  j["request"] = entry.request.empty()
                     ? internal::Json()
                     : internal::Json::parse(entry.request, nullptr, false);
  j["response"] = entry.response;
  j["metadata"] = entry.metadata.empty()
                      ? internal::Json::object()
                      : internal::Json::parse(entry.metadata, nullptr, false);
  const std::string line = j.dump(-1, ' ', false,
                                  internal::Json::error_handler_t::replace) +
                           "\n";

  std::lock_guard<std::mutex> lock(mu_);
  size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(fd_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      return ErrnoError("cannot append to", path_);
    }
    written += static_cast<size_t>(n);
  }
  responses_.insert_or_assign(entry.key, entry.response);
  return absl::OkStatus();
}

size_t ResponseCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return responses_.size();
}

}  // namespace graphbench
