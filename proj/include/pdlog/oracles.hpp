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
#include "pdlog/rational.hpp"

namespace pdlog {

// Plain-data view of a walk restriction. Deleted edges are recomputed here
// from the edge list, not taken from the walk engine.
struct OracleRestriction {
  Vertex min_kept = 0;
  Vertex keep_a = kNoVertex;
  Vertex keep_b = kNoVertex;
  EdgeId deleted_prefix = 0;  // eulerian only: drop the orbits of e_0..e_{p-1}
};

// Exact restricted connectivity. Edges are followed in both directions
// unless `directed` is set, in which case reachability from a to b is
// decided along edge directions.
bool bfs_connected(const Graph& g, Vertex a, Vertex b,
                   const OracleRestriction& restriction = {},
                   bool directed = false, const OracleBudget& budget = {});

// One forward pass over the path. With edge ids, each id must join the two
// vertices (in path direction unless undirected); without them, some edge
// must.
bool validate_path(const Graph& g, const Path& p, Vertex s, Vertex t);

// Distinct vertex sequences of walks from s that reach t (stopping there)
// within max_len steps, in lexicographic order.
std::vector<std::vector<Vertex>> enumerate_st_paths(
    const Graph& g, Vertex s, Vertex t, std::uint64_t max_len,
    const OracleBudget& budget = {});

// Edge ids of the orbits of e_0..e_{prefix-1} under the in/out rank pairing,
// as a membership mask.
std::vector<bool> oracle_deleted_edges(const Graph& g, EdgeId prefix);

// Probability that a k-step walk from s visits t, by summing over every walk
// (t absorbing, no out-edges means staying put). Exponential; tiny inputs
// only.
Rational brute_force_pk(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
                        const OracleBudget& budget = {});

// Probability that a k-step walk from s sits at t after exactly k steps, no
// absorption.
Rational oracle_end_probability(const Graph& g, Vertex s, Vertex t,
                                std::uint64_t k,
                                const OracleBudget& budget = {});

}  // namespace pdlog
