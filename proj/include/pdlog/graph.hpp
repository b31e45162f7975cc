// Copyright 2026 The pdlog Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdlog {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

enum class GraphKind { kDirected, kUndirected, kEulerian };

std::string_view kind_name(GraphKind kind) noexcept;
GraphKind parse_kind(std::string_view name);  // DomainError if unknown

struct Edge {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct AdjEntry {
  Vertex neighbor;
  EdgeId edge;
  friend bool operator==(const AdjEntry&, const AdjEntry&) = default;
};

// Immutable multigraph with indexed adjacency. Edge ids are positions in the
// edge list. Adjacency lists are sorted by (neighbor, edge id); that order is
// the canonical "lexicographic" neighbor order used by the solvers.
//
// Undirected graphs store one logical edge per id; both endpoints list it, so
// out_adj(v) == in_adj(v) is the incidence list of v and a self-loop appears
// twice in it.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints and, for kEulerian, indegree == outdegree everywhere.
  static Graph build(GraphKind kind, std::size_t vertex_count,
                     std::vector<Edge> edges);

  GraphKind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  bool directed() const noexcept { return kind_ != GraphKind::kUndirected; }

  std::span<const AdjEntry> out_adj(Vertex v) const noexcept {
    return {out_entries_.data() + out_offsets_[v],
            out_entries_.data() + out_offsets_[v + 1]};
  }
  std::span<const AdjEntry> in_adj(Vertex v) const noexcept {
    const auto& off = directed() ? in_offsets_ : out_offsets_;
    const auto& ent = directed() ? in_entries_ : out_entries_;
    return {ent.data() + off[v], ent.data() + off[v + 1]};
  }
  std::size_t out_degree(Vertex v) const noexcept {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(Vertex v) const noexcept { return in_adj(v).size(); }

  // i-th entry of v's out-adjacency, absent when i >= outdegree(v).
  // DomainError if v is out of range.
  std::optional<AdjEntry> out_neighbor(Vertex v, std::size_t i) const;
  std::optional<AdjEntry> in_neighbor(Vertex v, std::size_t i) const;

  // Smallest edge id joining u to v (either direction when undirected).
  std::optional<EdgeId> is_edge(Vertex u, Vertex v) const;

  // Rank of e among the in-edges of its head, in canonical order.
  std::size_t in_rank(EdgeId e) const noexcept { return in_rank_[e]; }

  void check_vertex(Vertex v) const;

 private:
  GraphKind kind_ = GraphKind::kDirected;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<AdjEntry> out_entries_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<AdjEntry> in_entries_;
  std::vector<std::uint32_t> in_rank_;
};

// Vertex/edge-id walk. A single vertex with no edges is the s = t path.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edge_ids;

  std::size_t length() const noexcept { return edge_ids.size(); }
  bool empty() const noexcept { return vertices.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

// "v0 v1 ... vk\n"; with edges, "v0 v1 ...\nedges e0 e1 ...\n".
std::string format_path(const Path& path, bool with_edges = false);

// Text file format:
//   # optional comments
//   graph <directed|undirected|eulerian> <n> <m>
//   <u> <v>        (exactly m lines, 0-indexed)
Graph load_graph(std::istream& in);
Graph load_graph_text(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string serialize(const Graph& g);

// SHA-256 of the canonical serialization, lowercase hex.
std::string graph_digest(const Graph& g);

// |x| of a path-finding instance: serialized graph bytes, the text "s t ",
// and k written in unary.
std::uint64_t instance_size(const Graph& g, Vertex s, Vertex t,
                            std::uint64_t k);

}  // namespace pdlog
