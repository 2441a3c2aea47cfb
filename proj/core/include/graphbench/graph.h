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

#ifndef GRAPHBENCH_GRAPH_H_
#define GRAPHBENCH_GRAPH_H_

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace graphbench {

// Nodes are labelled 0..n-1 internally. Prompts may shift labels by a
// configurable base when rendering.
using Node = int32_t;

struct Edge {
  Node u = 0;
  Node v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An immutable simple graph.
//
// Undirected edges are stored as (u, v) with u < v. Directed edges keep
// their orientation. In both cases the edge list is sorted and free of
// duplicates and self-loops.
class Graph {
 public:
  // Validates and canonicalizes `edges`. Fails on out-of-range endpoints,
  // self-loops and duplicate edges (including (u,v)/(v,u) on undirected
  // graphs).
  static absl::StatusOr<Graph> Create(int node_count, std::vector<Edge> edges,
                                      bool directed);

  Graph() = default;

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Out-neighbours for directed graphs, neighbours for undirected ones.
  // Each list is sorted.
  std::vector<std::vector<Node>> AdjacencyList() const;

  bool HasEdge(Node u, Node v) const;
  bool Contains(Node u) const { return u >= 0 && u < node_count_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int node_count, std::vector<Edge> edges, bool directed)
      : node_count_(node_count), edges_(std::move(edges)), directed_(directed) {}

  int node_count_ = 0;
  std::vector<Edge> edges_;
  bool directed_ = false;
};

enum class BucketName : uint8_t { kS, kM, kL };

// Inclusive node-count range for one dataset size class. The standard
// buckets overlap at 11 and 21.
struct SizeBucket {
  BucketName name = BucketName::kS;
  int n_min = 5;
  int n_max = 11;

  // Requires 5 <= n_min <= n_max.
  static absl::StatusOr<SizeBucket> Create(BucketName name, int n_min,
                                           int n_max);

  friend bool operator==(const SizeBucket&, const SizeBucket&) = default;
};

inline constexpr SizeBucket kSmall{BucketName::kS, 5, 11};
inline constexpr SizeBucket kMedium{BucketName::kM, 11, 21};
inline constexpr SizeBucket kLarge{BucketName::kL, 21, 51};
inline constexpr SizeBucket kAllBuckets[] = {kSmall, kMedium, kLarge};

std::string_view BucketSlug(BucketName name);  // "S", "M", "L"
absl::StatusOr<SizeBucket> StandardBucket(std::string_view slug);

}  // namespace graphbench

#endif  // GRAPHBENCH_GRAPH_H_
