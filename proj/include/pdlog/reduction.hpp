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

#include <cstdint>
#include <vector>

#include "pdlog/budget.hpp"
#include "pdlog/graph.hpp"

namespace pdlog {

// m = ceil(2k log2 k); DomainError for k < 2.
std::uint64_t layer_count(std::uint64_t k);
// m + ceil(2(m+1) k log2 x).
std::uint64_t layered_walk_length(std::uint64_t m, std::uint64_t k,
                                  std::uint64_t x);

// G' has layers 0..m, vertex (i, v) stored as i * n + v. Edge ids: layer i
// holds ids [i * per_layer, (i + 1) * per_layer) in the order of G's edges
// (an undirected edge contributes its forward then its reverse copy), then
// the wrap edges (m, v) -> (0, s) for v != t in vertex order, then the
// self-loop at (m, t).
struct LayeredInstance {
  Graph gprime;
  std::uint64_t n = 0;  // |V(G)|
  std::uint64_t layers = 0;  // m
  std::uint64_t k = 0;
  std::uint64_t x = 0;
  std::uint64_t walk_length = 0;  // l
  std::uint64_t per_layer = 0;
  bool doubled = false;  // G undirected
  Vertex s = 0, t = 0;            // in G
  Vertex source = 0, sink = 0;    // in G'

  Vertex encode(std::uint64_t layer, Vertex v) const {
    return static_cast<Vertex>(layer * n + v);
  }
  std::uint64_t layer_of(Vertex id) const { return id / n; }
  Vertex vertex_of(Vertex id) const { return static_cast<Vertex>(id % n); }
  EdgeId first_wrap_edge() const {
    return static_cast<EdgeId>(layers * per_layer);
  }
  bool is_wrap_edge(EdgeId e) const {
    return e >= first_wrap_edge() && e + 1 < gprime.edge_count();
  }
};

// x = 0 picks the serialized size of (G, s, t, 1^k).
LayeredInstance build_layered(const Graph& g, Vertex s, Vertex t,
                              std::uint64_t k, std::uint64_t x = 0,
                              const OracleBudget& budget = {});

// Same with a caller-chosen layer count m >= 1.
LayeredInstance build_layered_with_layers(const Graph& g, Vertex s, Vertex t,
                                          std::uint64_t layers,
                                          std::uint64_t k, std::uint64_t x = 0,
                                          const OracleBudget& budget = {});

// Splits a G' path at its wrap edges and maps each piece back to G. A piece
// stops at its first arrival at the sink. DomainError when the path does
// not start at the source or uses a pair that is not an edge of G'.
std::vector<Path> project_path(const LayeredInstance& li, const Path& p);

}  // namespace pdlog
