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

#include "graphbench/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace graphbench {

absl::StatusOr<Graph> Graph::Create(int node_count, std::vector<Edge> edges,
                                    bool directed) {
  if (node_count < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("negative node count ", node_count));
  }
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edge (", e.u, ", ", e.v, ") out of range for n=", node_count));
    }
    if (e.u == e.v) {
      return absl::InvalidArgumentError(absl::StrCat("self-loop at ", e.u));
    }
    if (!directed && e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("duplicate edge (", dup->u, ", ", dup->v, ")"));
  }
  return Graph(node_count, std::move(edges), directed);
}

std::vector<std::vector<Node>> Graph::AdjacencyList() const {
  std::vector<std::vector<Node>> adj(node_count_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    if (!directed_) adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool Graph::HasEdge(Node u, Node v) const {
  if (!directed_ && u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

absl::StatusOr<SizeBucket> SizeBucket::Create(BucketName name, int n_min,
                                              int n_max) {
  if (n_min < 5 || n_min > n_max) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid bucket bounds [", n_min, ", ", n_max, "]"));
  }
  return SizeBucket{name, n_min, n_max};
}

std::string_view BucketSlug(BucketName name) {
  switch (name) {
    case BucketName::kS: return "S";
    case BucketName::kM: return "M";
    case BucketName::kL: return "L";
  }
  return "?";
}

absl::StatusOr<SizeBucket> StandardBucket(std::string_view slug) {
  for (const SizeBucket& bucket : kAllBuckets) {
    if (BucketSlug(bucket.name) == slug) return bucket;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown size bucket '", std::string(slug), "'"));
}

}  // namespace graphbench
