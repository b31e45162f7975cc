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

#include "pdlog/cycles.hpp"
#include "pdlog/graph.hpp"
#include "pdlog/meter.hpp"
#include "pdlog/undirected.hpp"

namespace pdlog {

struct EulerianOptions {
  WorkspaceMeter* meter = nullptr;
  MembershipMode membership = MembershipMode::kOrbitMin;
};

// Pseudo-deterministic s-t path in an eulerian digraph by deleting the
// cycles C_1, C_2, ... of the edge permutation in turn. Walks follow edge
// directions; the path is a directed walk.
SolveResult find_path_eulerian(const Graph& g, Vertex s, Vertex t,
                               std::uint64_t seed,
                               const EulerianOptions& opts = {});

}  // namespace pdlog
