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

#include "graphbench/oracles.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace graphbench {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  int sets() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

absl::Status CheckNode(const Graph& g, Node u) {
  if (!g.Contains(u)) {
    return absl::OutOfRangeError(
        absl::StrCat("node ", u, " not in graph with ", g.node_count(),
                     " nodes"));
  }
  return absl::OkStatus();
}

absl::Status CheckUndirected(const Graph& g) {
  if (g.directed()) {
    return absl::FailedPreconditionError("task requires an undirected graph");
  }
  return absl::OkStatus();
}

absl::StatusOr<Node> Required(const std::optional<Node>& node,
                              std::string_view what) {
  if (!node.has_value()) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing query argument '", std::string(what), "'"));
  }
  return *node;
}

}  // namespace

int NodeCount(const Graph& g) { return g.node_count(); }

int EdgeCount(const Graph& g) { return g.edge_count(); }

absl::StatusOr<int> Degree(const Graph& g, Node u) {
  if (auto s = CheckUndirected(g); !s.ok()) return s;
  if (auto s = CheckNode(g, u); !s.ok()) return s;
  int degree = 0;
  for (const Edge& e : g.edges()) degree += (e.u == u) + (e.v == u);
  return degree;
}

absl::StatusOr<NodeSetAnswer> Neighbors(const Graph& g, Node u) {
  if (auto s = CheckUndirected(g); !s.ok()) return s;
  if (auto s = CheckNode(g, u); !s.ok()) return s;
  std::vector<Node> out;
  for (const Edge& e : g.edges()) {
    if (e.u == u) out.push_back(e.v);
    if (e.v == u) out.push_back(e.u);
  }
  return MakeNodeSet(std::move(out));
}

int ConnectedComponents(const Graph& g) {
  DisjointSets sets(g.node_count());
  for (const Edge& e : g.edges()) sets.Union(e.u, e.v);
  return sets.sets();
}

int ConnectedComponentsBfs(const Graph& g) {
  const std::vector<int> labels = ComponentLabels(g);
  return labels.empty() ? 0
                        : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<int> ComponentLabels(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<Node>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (Node start = 0; start < n; ++start) {
    if (label[start] != -1) continue;
    std::deque<Node> queue{start};
    label[start] = next;
    while (!queue.empty()) {
      Node u = queue.front();
      queue.pop_front();
      for (Node w : adj[u]) {
        if (label[w] == -1) {
          label[w] = next;
          queue.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool HasCycle(const Graph& g) {
  if (g.directed()) {
    return !TopoOrder(g).ok();
  }
  DisjointSets sets(g.node_count());
  for (const Edge& e : g.edges()) {
    if (!sets.Union(e.u, e.v)) return true;
  }
  return false;
}

EdgeSetAnswer SpanningForest(const Graph& g) {
  DisjointSets sets(g.node_count());
  EdgeSetAnswer forest;
  for (const Edge& e : g.edges()) {
    if (sets.Union(e.u, e.v)) forest.edges.push_back(e);
  }
  return forest;
}

bool ValidateSpanningTree(const Graph& g, std::span<const Edge> edges) {
  if (g.directed()) return false;
  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (const Edge& e : edges) {
    Edge c{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!g.Contains(c.u) || !g.Contains(c.v) || !g.HasEdge(c.u, c.v)) {
      return false;
    }
    canonical.push_back(c);
  }
  std::sort(canonical.begin(), canonical.end());
  if (std::adjacent_find(canonical.begin(), canonical.end()) !=
      canonical.end()) {
    return false;
  }
  const int components = ConnectedComponents(g);
  if (static_cast<int>(canonical.size()) != g.node_count() - components) {
    return false;
  }
  DisjointSets sets(g.node_count());
  for (const Edge& e : canonical) {
    if (!sets.Union(e.u, e.v)) return false;  // cycle
  }
  return sets.sets() == components;
}

absl::StatusOr<int> ShortestPathLength(const Graph& g, Node u, Node v) {
  if (auto s = CheckNode(g, u); !s.ok()) return s;
  if (auto s = CheckNode(g, v); !s.ok()) return s;
  const auto adj = g.AdjacencyList();
  std::vector<int> dist(g.node_count(), -1);
  std::deque<Node> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    Node x = queue.front();
    queue.pop_front();
    if (x == v) return dist[x];
    for (Node w : adj[x]) {
      if (dist[w] == -1) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
    }
  }
  return absl::NotFoundError(
      absl::StrCat("node ", v, " unreachable from node ", u));
}

bool IsBipartite(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<Node>> undirected(n);
  for (const Edge& e : g.edges()) {
    undirected[e.u].push_back(e.v);
    undirected[e.v].push_back(e.u);
  }
  std::vector<int> color(n, -1);
  for (Node start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<Node> queue{start};
    while (!queue.empty()) {
      Node x = queue.front();
      queue.pop_front();
      for (Node w : undirected[x]) {
        if (color[w] == -1) {
          color[w] = 1 - color[x];
          queue.push_back(w);
        } else if (color[w] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

absl::StatusOr<NodeSeqAnswer> TopoOrder(const Graph& g) {
  if (!g.directed()) {
    return absl::FailedPreconditionError(
        "topological order requires a directed graph");
  }
  const int n = g.node_count();
  const auto adj = g.AdjacencyList();
  std::vector<int> indegree(n, 0);
  for (const Edge& e : g.edges()) ++indegree[e.v];
  std::priority_queue<Node, std::vector<Node>, std::greater<>> ready;
  for (Node u = 0; u < n; ++u) {
    if (indegree[u] == 0) ready.push(u);
  }
  NodeSeqAnswer order;
  while (!ready.empty()) {
    Node u = ready.top();
    ready.pop();
    order.nodes.push_back(u);
    for (Node w : adj[u]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.nodes.size()) != n) {
    return absl::FailedPreconditionError("graph contains a directed cycle");
  }
  return order;
}

bool ValidateTopoOrder(const Graph& g, std::span<const Node> order) {
  const int n = g.node_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    const Node u = order[i];
    if (!g.Contains(u) || position[u] != -1) return false;
    position[u] = i;
  }
  for (const Edge& e : g.edges()) {
    if (position[e.u] >= position[e.v]) return false;
  }
  return true;
}

absl::StatusOr<Answer> ComputeGold(TaskKind task, const Graph& g,
                                   const QueryArgs& query) {
  switch (task) {
    case TaskKind::kNodeCount:
      return IntAnswer{NodeCount(g)};
    case TaskKind::kEdgeCount:
      return IntAnswer{EdgeCount(g)};
    case TaskKind::kNodeDegree: {
      auto u = Required(query.source, "source");
      if (!u.ok()) return u.status();
      auto degree = Degree(g, *u);
      if (!degree.ok()) return degree.status();
      return IntAnswer{*degree};
    }
    case TaskKind::kNeighbors: {
      auto u = Required(query.source, "source");
      if (!u.ok()) return u.status();
      auto neighbors = Neighbors(g, *u);
      if (!neighbors.ok()) return neighbors.status();
      return *std::move(neighbors);
    }
    case TaskKind::kConnectedComponents:
      if (auto s = CheckUndirected(g); !s.ok()) return s;
      return IntAnswer{ConnectedComponents(g)};
    case TaskKind::kCycleCheck:
      if (auto s = CheckUndirected(g); !s.ok()) return s;
      return BoolAnswer{HasCycle(g)};
    case TaskKind::kMinimumSpanningTree:
      if (auto s = CheckUndirected(g); !s.ok()) return s;
      return SpanningForest(g);
    case TaskKind::kShortestPath: {
      if (auto s = CheckUndirected(g); !s.ok()) return s;
      auto u = Required(query.source, "source");
      if (!u.ok()) return u.status();
      auto v = Required(query.target, "target");
      if (!v.ok()) return v.status();
      auto length = ShortestPathLength(g, *u, *v);
      if (!length.ok()) return length.status();
      return IntAnswer{*length};
    }
    case TaskKind::kBipartiteCheck:
      if (auto s = CheckUndirected(g); !s.ok()) return s;
      return BoolAnswer{IsBipartite(g)};
    case TaskKind::kTopologicalSort: {
      auto order = TopoOrder(g);
      if (!order.ok()) return order.status();
      return *std::move(order);
    }
  }
  return absl::InternalError("unhandled task");
}

}  // namespace graphbench
