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

#include "pdlog/cycles.hpp"

#include <string>

#include "pdlog/errors.hpp"

namespace pdlog {
namespace {

void require_eulerian(const Graph& g) {
  if (g.kind() != GraphKind::kEulerian)
    throw KindViolation("edge permutation needs an eulerian graph, got " +
                        std::string(kind_name(g.kind())));
}

inline EdgeId next_unchecked(const Graph& g, EdgeId e) {
  const Vertex v = g.edges()[e].head;
  return g.out_adj(v)[g.in_rank(e)].edge;
}

}  // namespace

EdgeId next_edge(const Graph& g, EdgeId e) {
  require_eulerian(g);
  if (e >= g.edge_count())
    throw DomainError("edge id " + std::to_string(e) + " out of range");
  return next_unchecked(g, e);
}

std::vector<EdgeId> orbit(const Graph& g, EdgeId start) {
  require_eulerian(g);
  if (start >= g.edge_count())
    throw DomainError("edge id " + std::to_string(start) + " out of range");
  std::vector<EdgeId> out;
  EdgeId e = start;
  do {
    out.push_back(e);
    e = next_unchecked(g, e);
  } while (e != start);
  return out;
}

bool edge_in_deleted(const Graph& g, EdgeId e, EdgeId k) {
  require_eulerian(g);
  if (e >= g.edge_count())
    throw DomainError("edge id " + std::to_string(e) + " out of range");
  for (EdgeId j = 0; j < k && j < g.edge_count(); ++j) {
    EdgeId x = j;
    do {
      if (x == e) return true;
      x = next_unchecked(g, x);
    } while (x != j);
  }
  return false;
}

std::string_view membership_name(MembershipMode mode) noexcept {
  switch (mode) {
    case MembershipMode::kCycleScan: return "scan";
    case MembershipMode::kOrbitMin: return "orbit-min";
    case MembershipMode::kTable: return "table";
  }
  return "?";
}

MembershipMode parse_membership(std::string_view name) {
  if (name == "scan") return MembershipMode::kCycleScan;
  if (name == "orbit-min") return MembershipMode::kOrbitMin;
  if (name == "table") return MembershipMode::kTable;
  throw DomainError("unknown membership mode '" + std::string(name) + "'");
}

DeletedCycles::DeletedCycles(const Graph& g, MembershipMode mode,
                             WorkspaceMeter* meter)
    : g_(&g), mode_(mode), meter_(nullptr) {
  require_eulerian(g);
  if (mode_ != MembershipMode::kTable) return;
  orbit_min_.assign(g.edge_count(), 0);
  std::vector<bool> done(g.edge_count(), false);
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    if (done[start]) continue;
    // Edges are visited in id order, so start is the orbit minimum.
    EdgeId e = start;
    do {
      done[e] = true;
      orbit_min_[e] = start;
      e = next_unchecked(g, e);
    } while (e != start);
  }
  meter_ = meter;
  if (meter_) meter_->acquire(orbit_min_.size());
}

DeletedCycles::~DeletedCycles() {
  if (meter_) meter_->release(orbit_min_.size());
}

bool DeletedCycles::contains(EdgeId e, EdgeId prefix,
                             Counters* counters) const {
  if (prefix == 0) return false;
  const Graph& g = *g_;
  switch (mode_) {
    case MembershipMode::kTable:
      return orbit_min_[e] < prefix;
    case MembershipMode::kOrbitMin: {
      EdgeId x = e;
      std::uint64_t steps = 0;
      bool found = false;
      do {
        if (x < prefix) {
          found = true;
          break;
        }
        x = next_unchecked(g, x);
        ++steps;
      } while (x != e);
      if (counters) counters->orbit_steps += steps;
      return found;
    }
    case MembershipMode::kCycleScan: {
      std::uint64_t steps = 0;
      bool found = false;
      for (EdgeId j = 0; j < prefix && j < g.edge_count() && !found; ++j) {
        EdgeId x = j;
        do {
          if (x == e) {
            found = true;
            break;
          }
          x = next_unchecked(g, x);
          ++steps;
        } while (x != j);
      }
      if (counters) counters->orbit_steps += steps;
      return found;
    }
  }
  return false;
}

bool DeletedCycles::on_cycle(Vertex v, EdgeId k, Counters* counters) const {
  const Graph& g = *g_;
  EdgeId x = k;
  std::uint64_t steps = 0;
  bool found = false;
  do {
    if (g.edges()[x].tail == v) {
      found = true;
      break;
    }
    x = next_unchecked(g, x);
    ++steps;
  } while (x != k);
  if (counters) counters->orbit_steps += steps;
  return found;
}

std::vector<std::vector<EdgeId>> orbit_decomposition(const Graph& g) {
  require_eulerian(g);
  std::vector<std::vector<EdgeId>> out;
  std::vector<bool> done(g.edge_count(), false);
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    if (done[start]) continue;
    out.push_back(orbit(g, start));
    for (EdgeId e : out.back()) done[e] = true;
  }
  return out;
}

}  // namespace pdlog
