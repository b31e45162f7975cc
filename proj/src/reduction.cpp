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

#include "pdlog/reduction.hpp"

#include <string>

#include "pdlog/errors.hpp"
#include "pdlog/rational.hpp"

namespace pdlog {
namespace {

// ceil(c log2 x) for x >= 1: bit length of x^c - 1.
std::uint64_t ceil_c_log2(std::uint64_t c, std::uint64_t x) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), x, c);
  p -= 1;
  if (p == 0) return 0;
  return mpz_sizeinbase(p.get_mpz_t(), 2);
}

}  // namespace

std::uint64_t layer_count(std::uint64_t k) {
  if (k < 2) throw DomainError("mixing parameter k must be at least 2");
  return ceil_c_log2(2 * k, k);
}

std::uint64_t layered_walk_length(std::uint64_t m, std::uint64_t k,
                                  std::uint64_t x) {
  if (x < 2) throw DomainError("amplification x must be at least 2");
  return m + ceil_c_log2(2 * (m + 1) * k, x);
}

LayeredInstance build_layered(const Graph& g, Vertex s, Vertex t,
                              std::uint64_t k, std::uint64_t x,
                              const OracleBudget& budget) {
  return build_layered_with_layers(g, s, t, layer_count(k), k, x, budget);
}

LayeredInstance build_layered_with_layers(const Graph& g, Vertex s, Vertex t,
                                          std::uint64_t layers,
                                          std::uint64_t k, std::uint64_t x,
                                          const OracleBudget& budget) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (layers == 0) throw DomainError("layer count must be positive");
  LayeredInstance li;
  li.n = g.vertex_count();
  li.layers = layers;
  li.k = k;
  li.x = x ? x : instance_size(g, s, t, k);
  li.walk_length = layered_walk_length(li.layers, k, li.x);
  li.s = s;
  li.t = t;
  const std::uint64_t vertices = (li.layers + 1) * li.n;
  const bool both = g.kind() == GraphKind::kUndirected;
  li.doubled = both;
  li.per_layer = g.edge_count() * (both ? 2 : 1);
  const std::uint64_t edges = li.layers * li.per_layer + li.n;
  if (vertices > budget.max_vertices || edges > budget.max_edges)
    throw BudgetExceeded("layered graph needs " + std::to_string(vertices) +
                         " vertices and " + std::to_string(edges) + " edges");
  std::vector<Edge> out;
  out.reserve(edges);
  for (std::uint64_t i = 0; i < li.layers; ++i)
    for (const Edge& e : g.edges()) {
      out.push_back({li.encode(i, e.tail), li.encode(i + 1, e.head)});
      if (both) out.push_back({li.encode(i, e.head), li.encode(i + 1, e.tail)});
    }
  li.source = li.encode(0, s);
  li.sink = li.encode(li.layers, t);
  for (Vertex v = 0; v < li.n; ++v)
    if (v != t) out.push_back({li.encode(li.layers, v), li.source});
  out.push_back({li.sink, li.sink});
  li.gprime = Graph::build(GraphKind::kDirected, vertices, std::move(out));
  return li;
}

std::vector<Path> project_path(const LayeredInstance& li, const Path& p) {
  if (p.vertices.empty() || p.vertices.front() != li.source)
    throw DomainError("path does not start at the layered source");
  const bool with_ids = p.edge_ids.size() + 1 == p.vertices.size();
  std::vector<Path> pieces(1);
  pieces.back().vertices.push_back(li.s);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const Vertex a = p.vertices[i], b = p.vertices[i + 1];
    std::optional<EdgeId> e;
    if (with_ids) {
      const EdgeId id = p.edge_ids[i];
      if (id < li.gprime.edge_count() && li.gprime.edge(id).tail == a &&
          li.gprime.edge(id).head == b)
        e = id;
    } else if (a < li.gprime.vertex_count() && b < li.gprime.vertex_count()) {
      e = li.gprime.is_edge(a, b);
    }
    if (!e)
      throw DomainError("step " + std::to_string(a) + " -> " +
                        std::to_string(b) + " is not an edge of the layered "
                        "graph");
    if (li.is_wrap_edge(*e)) {
      pieces.emplace_back();
      pieces.back().vertices.push_back(li.s);
      continue;
    }
    if (*e + 1 == li.gprime.edge_count()) continue;  // sink self-loop
    pieces.back().vertices.push_back(li.vertex_of(b));
    pieces.back().edge_ids.push_back(
        static_cast<EdgeId>((*e % li.per_layer) / (li.doubled ? 2 : 1)));
  }
  return pieces;
}

}  // namespace pdlog
