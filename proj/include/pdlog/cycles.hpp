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
#include <vector>

#include "pdlog/graph.hpp"
#include "pdlog/meter.hpp"

namespace pdlog {

// The in/out pairing permutation of an Eulerian graph: for e entering v with
// rank i among v's in-edges, next_edge(e) is v's i-th out-edge (both in
// canonical (neighbor, edge id) order). Orbits are closed directed walks and
// partition the edge set. KindViolation unless g is eulerian.
EdgeId next_edge(const Graph& g, EdgeId e);

// The cycle C_k named by edge e_k: e_k, f(e_k), f^2(e_k), ... until e_k.
std::vector<EdgeId> orbit(const Graph& g, EdgeId start);

// True iff e lies on some C_j with j < k (edge ids are 0-based, so "prefix
// length k" covers e_0 .. e_{k-1}). Scans each orbit in turn with O(1)
// mutable state: O(k * m) permutation evaluations worst case.
bool edge_in_deleted(const Graph& g, EdgeId e, EdgeId k);

// How deleted-cycle membership is decided inside walks.
enum class MembershipMode {
  // Iterate C_0 .. C_{k-1} looking for e (the direct construction).
  kCycleScan,
  // e is on some C_j, j < k, iff the orbit of e contains an edge id < k; one
  // orbit traversal, still O(1) mutable state.
  kOrbitMin,
  // Precomputed orbit minimum per edge; O(m) words, charged to the meter.
  kTable,
};

std::string_view membership_name(MembershipMode mode) noexcept;
MembershipMode parse_membership(std::string_view name);

class DeletedCycles {
 public:
  DeletedCycles(const Graph& g, MembershipMode mode,
                WorkspaceMeter* meter = nullptr);
  ~DeletedCycles();
  DeletedCycles(const DeletedCycles&) = delete;
  DeletedCycles& operator=(const DeletedCycles&) = delete;

  bool contains(EdgeId e, EdgeId prefix, Counters* counters = nullptr) const;
  // Whether vertex v is the tail of some edge of C_k.
  bool on_cycle(Vertex v, EdgeId k, Counters* counters = nullptr) const;

  const Graph& graph() const noexcept { return *g_; }
  MembershipMode mode() const noexcept { return mode_; }

 private:
  const Graph* g_;
  MembershipMode mode_;
  WorkspaceMeter* meter_;
  std::vector<EdgeId> orbit_min_;
};

// Orbit decomposition in order of each orbit's smallest edge id.
std::vector<std::vector<EdgeId>> orbit_decomposition(const Graph& g);

}  // namespace pdlog
