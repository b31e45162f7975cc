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
#include <string_view>

#include "pdlog/graph.hpp"
#include "pdlog/random.hpp"

namespace pdlog {

enum class GenModel {
  kErdosDirected,
  kErdosUndirected,
  kEulerianCycleUnion,
  kLayeredFunnel,
  // Directed graph with outdegree >= 1 everywhere whose m-step walk from s
  // ends at t with probability >= 1/(2k), m = ceil(2k log2 k).
  kPolyMixing,
};

std::string_view model_name(GenModel model) noexcept;
GenModel parse_model(std::string_view name);

struct GenParams {
  std::uint64_t n = 8;
  double density = 0.3;
  // Exact edge count for the erdos models; 0 means use density.
  std::uint64_t edges = 0;
  // erdos_undirected: lay a random spanning tree first.
  bool connected = false;
  // eulerian_cycle_union: number of cycles and their length range. With
  // connected set, the first cycle visits every vertex.
  std::uint64_t cycles = 3;
  std::uint64_t min_cycle = 2;
  std::uint64_t max_cycle = 0;  // 0 means n
  // layered_funnel / poly_mixing: walk length k; back edges per vertex are
  // added with probability back_density.
  std::uint64_t k = 4;
  double back_density = 0.0;
  std::uint64_t attempts = 64;
};

// Funnel and poly-mixing instances put s = 0 and t = n - 1.
struct GeneratedInstance {
  Graph graph;
  Vertex s = 0;
  Vertex t = 0;
};

GeneratedInstance generate_graph(GenModel model, const GenParams& params,
                                 Stream& stream);

}  // namespace pdlog
