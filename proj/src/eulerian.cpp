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

#include "pdlog/eulerian.hpp"

#include <string>

#include "pdlog/errors.hpp"
#include "pdlog/random.hpp"
#include "pdlog/walk.hpp"

namespace pdlog {
namespace {

// Whether the tail of `e` already appeared on the orbit from `start` before
// reaching e.
bool tail_seen_before(const Graph& g, EdgeId start, EdgeId e,
                      Counters& counters) {
  const Vertex x = g.edges()[e].tail;
  for (EdgeId y = start; y != e; y = next_edge(g, y)) {
    ++counters.orbit_steps;
    if (g.edges()[y].tail == x) return true;
  }
  return false;
}

}  // namespace

SolveResult find_path_eulerian(const Graph& g, Vertex s, Vertex t,
                               std::uint64_t seed,
                               const EulerianOptions& opts) {
  if (g.kind() != GraphKind::kEulerian)
    throw KindViolation("eulerian solver needs an eulerian graph, got " +
                        std::string(kind_name(g.kind())));
  g.check_vertex(s);
  g.check_vertex(t);
  SolveResult res;
  RunTrace& trace = res.trace;
  Counters& counters = trace.counters;
  const WalkContext ctx{opts.meter, &counters};
  const DeletedCycles cycles(g, opts.membership, opts.meter);
  const StreamFamily conn(Seed{seed}, "conn");
  std::uint64_t call = 0;
  auto connected = [&](Vertex a, Vertex b, const Restriction& r) {
    return test_connectivity(g, a, b, r, conn.child(call++), ctx);
  };
  // v_cur, v_dest, k, pass count, call index, orbit cursor, candidate,
  // prefix cursor
  MeterScope scope(opts.meter, 8);

  if (!connected(s, t, Restriction::none()))
    throw NotConnected("no path from " + std::to_string(s) + " to " +
                       std::to_string(t));
  const std::uint64_t n = g.vertex_count();
  const EdgeId m = static_cast<EdgeId>(g.edge_count());
  std::vector<bool> visited(n, false);
  visited[s] = true;
  std::vector<Vertex> previous;
  Vertex v_cur = s;
  res.path.vertices.push_back(s);

  while (v_cur != t) {
    if (++trace.passes > n + 1)
      throw NonProgress("more than " + std::to_string(n + 1) + " passes");
    Vertex v_dest = t;
    std::vector<Vertex> seq{t};
    bool moved = false;
    for (EdgeId k = 1; k <= m && !moved; ++k) {
      const Restriction residual = Restriction::cycle_prefix(cycles, k);
      if (connected(v_cur, v_dest, residual)) continue;
      const EdgeId ek = k - 1;
      seq.push_back(ek);
      if (cycles.on_cycle(v_cur, ek, &counters)) {
        // first vertex of C_k in orbit order still joined to v_dest
        Vertex v = kNoVertex;
        EdgeId e = ek;
        do {
          ++counters.orbit_steps;
          const Vertex x = g.edges()[e].tail;
          if (!tail_seen_before(g, ek, e, counters) &&
              connected(x, v_dest, residual)) {
            v = x;
            break;
          }
          e = next_edge(g, e);
        } while (e != ek);
        if (v == kNoVertex)
          throw NonProgress("no vertex of cycle " + std::to_string(ek) +
                            " reaches " + std::to_string(v_dest));
        if (v == v_cur)
          throw NonProgress("cycle " + std::to_string(ek) +
                            " offered the current vertex " +
                            std::to_string(v_cur));
        if (!previous.empty() &&
            compare_dest_seq(seq, previous) != SeqOrder::kGreater)
          throw NonProgress("cycle-index sequence did not increase at " +
                            std::to_string(v_cur));
        if (visited[v])
          throw NonProgress("vertex " + std::to_string(v) + " reached twice");
        visited[v] = true;
        // walk C_k from v_cur's first occurrence until arriving at v
        EdgeId w = ek;
        while (g.edges()[w].tail != v_cur) {
          w = next_edge(g, w);
          ++counters.orbit_steps;
        }
        for (;;) {
          res.path.vertices.push_back(g.edges()[w].head);
          res.path.edge_ids.push_back(w);
          ++counters.orbit_steps;
          if (g.edges()[w].head == v) break;
          w = next_edge(g, w);
        }
        trace.moves.push_back({trace.moves.size(), v_cur, v, seq});
        v_cur = v;
        previous = std::move(seq);
        moved = true;
      } else {
        // first vertex of C_k in orbit order joined to v_cur
        Vertex v = kNoVertex;
        EdgeId e = ek;
        do {
          ++counters.orbit_steps;
          const Vertex x = g.edges()[e].tail;
          if (!tail_seen_before(g, ek, e, counters) &&
              connected(v_cur, x, residual)) {
            v = x;
            break;
          }
          e = next_edge(g, e);
        } while (e != ek);
        if (v == kNoVertex)
          throw NonProgress("no vertex of cycle " + std::to_string(ek) +
                            " is reachable from " + std::to_string(v_cur));
        v_dest = v;
      }
    }
    if (!moved)
      throw NonProgress("pass " + std::to_string(trace.passes) +
                        " made no move from " + std::to_string(v_cur));
  }
  return res;
}

}  // namespace pdlog
