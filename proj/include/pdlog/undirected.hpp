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

#include "pdlog/graph.hpp"
#include "pdlog/meter.hpp"

namespace pdlog {

enum class SeqOrder { kLess, kEqual, kGreater };

// Order on destination sequences (t, c1, c2, ...): a is greater when b
// extends it, or when a has the larger entry at the first difference.
// DomainError when the heads differ or a sequence is empty.
SeqOrder compare_dest_seq(const std::vector<Vertex>& a,
                          const std::vector<Vertex>& b);

struct MoveRecord {
  std::uint64_t move = 0;
  Vertex from = 0;
  Vertex to = 0;
  // For the undirected solver, t followed by the vertices v_dest took;
  // for the eulerian solver, t followed by the cycle indices that fired.
  std::vector<Vertex> sequence;
};

struct RunTrace {
  std::vector<MoveRecord> moves;
  std::uint64_t passes = 0;
  Counters counters;
};

struct SolveResult {
  Path path;
  RunTrace trace;
};

struct UndirectedOptions {
  WorkspaceMeter* meter = nullptr;
};

// Pseudo-deterministic s-t path in an undirected graph. Connectivity call i
// draws its walks from the family (seed, "conn").child(i).
SolveResult find_path_undirected(const Graph& g, Vertex s, Vertex t,
                                 std::uint64_t seed,
                                 const UndirectedOptions& opts = {});

}  // namespace pdlog
