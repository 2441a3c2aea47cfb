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

#include "json_codec.h"

#include <charconv>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace graphbench::internal {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json EdgesToJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v}));
  return out;
}

absl::StatusOr<std::vector<Edge>> EdgesFromJson(const Json& j) {
  if (!j.is_array()) return absl::InvalidArgumentError("edges must be an array");
  std::vector<Edge> edges;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      return absl::InvalidArgumentError("edge must be a [u, v] integer pair");
    }
    edges.push_back({pair[0].get<Node>(), pair[1].get<Node>()});
  }
  return edges;
}

absl::StatusOr<std::vector<Node>> NodesFromJson(const Json& j) {
  if (!j.is_array()) return absl::InvalidArgumentError("nodes must be an array");
  std::vector<Node> nodes;
  for (const Json& n : j) {
    if (!n.is_number_integer()) {
      return absl::InvalidArgumentError("node must be an integer");
    }
    nodes.push_back(n.get<Node>());
  }
  return nodes;
}

}  // namespace

Json AnswerToJson(const Answer& answer) {
  return std::visit(
      Overloaded{
          [](const IntAnswer& a) {
            return Json{{"kind", "int"}, {"value", a.value}};
          },
          [](const BoolAnswer& a) {
            return Json{{"kind", "bool"}, {"value", a.value}};
          },
          [](const NodeSetAnswer& a) {
            return Json{{"kind", "node_set"}, {"nodes", a.nodes}};
          },
          [](const NodeSeqAnswer& a) {
            return Json{{"kind", "node_seq"}, {"nodes", a.nodes}};
          },
          [](const EdgeSetAnswer& a) {
            return Json{{"kind", "edge_set"}, {"edges", EdgesToJson(a.edges)}};
          },
      },
      answer);
}

absl::StatusOr<Answer> AnswerFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    return absl::InvalidArgumentError("answer needs a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "int") {
    if (!j.contains("value") || !j["value"].is_number_integer()) {
      return absl::InvalidArgumentError("int answer needs an integer value");
    }
    return IntAnswer{j["value"].get<int64_t>()};
  }
  if (kind == "bool") {
    if (!j.contains("value") || !j["value"].is_boolean()) {
      return absl::InvalidArgumentError("bool answer needs a boolean value");
    }
    return BoolAnswer{j["value"].get<bool>()};
  }
  if (kind == "node_set" || kind == "node_seq") {
    if (!j.contains("nodes")) return absl::InvalidArgumentError("missing nodes");
    auto nodes = NodesFromJson(j["nodes"]);
    if (!nodes.ok()) return nodes.status();
    if (kind == "node_set") return MakeNodeSet(*std::move(nodes));
    return NodeSeqAnswer{*std::move(nodes)};
  }
  if (kind == "edge_set") {
    if (!j.contains("edges")) return absl::InvalidArgumentError("missing edges");
    auto edges = EdgesFromJson(j["edges"]);
    if (!edges.ok()) return edges.status();
    return EdgeSetAnswer{*std::move(edges)};
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown answer kind ", kind));
}

Json GraphToJson(const Graph& g) {
  return Json{{"n", g.node_count()},
              {"directed", g.directed()},
              {"edges", EdgesToJson(g.edges())}};
}

absl::StatusOr<Graph> GraphFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("directed") || !j["directed"].is_boolean() ||
      !j.contains("edges")) {
    return absl::InvalidArgumentError("graph needs n, directed and edges");
  }
  auto edges = EdgesFromJson(j["edges"]);
  if (!edges.ok()) return edges.status();
  return Graph::Create(j["n"].get<int>(), *std::move(edges),
                       j["directed"].get<bool>());
}

Json QueryToJson(const QueryArgs& query) {
  Json out = Json::object();
  if (query.source) out["source"] = *query.source;
  if (query.target) out["target"] = *query.target;
  return out;
}

absl::StatusOr<QueryArgs> QueryFromJson(const Json& j) {
  if (!j.is_object()) return absl::InvalidArgumentError("query must be an object");
  QueryArgs query;
  for (const char* key : {"source", "target"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_number_integer()) {
      return absl::InvalidArgumentError(
          absl::StrCat("query ", key, " must be an integer"));
    }
    (std::string_view(key) == "source" ? query.source : query.target) =
        j[key].get<Node>();
  }
  return query;
}

std::string SeedToString(uint64_t seed) { return absl::StrCat(seed); }

absl::StatusOr<uint64_t> SeedFromString(const std::string& text) {
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return absl::InvalidArgumentError(absl::StrCat("bad seed '", text, "'"));
  }
  return value;
}

absl::StatusOr<Json> ParseJson(std::string_view text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::DataLossError("malformed JSON");
  return j;
}

}  // namespace graphbench::internal
