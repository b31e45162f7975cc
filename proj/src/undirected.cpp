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

#include "pdlog/undirected.hpp"

#include <algorithm>
#include <string>

#include "pdlog/errors.hpp"
#include "pdlog/random.hpp"
#include "pdlog/walk.hpp"

namespace pdlog {

SeqOrder compare_dest_seq(const std::vector<Vertex>& a,
                          const std::vector<Vertex>& b) {
  if (a.empty() || b.empty())
    throw DomainError("destination sequences must start with t");
  if (a.front() != b.front())
    throw DomainError("destination sequences have different heads " +
                      std::to_string(a.front()) + " and " +
                      std::to_string(b.front()));
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 1; i < common; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? SeqOrder::kGreater : SeqOrder::kLess;
  if (a.size() == b.size()) return SeqOrder::kEqual;
  return a.size() < b.size() ? SeqOrder::kGreater : SeqOrder::kLess;
}

namespace {

std::string format_seq(const std::vector<Vertex>& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i)
    out += (i ? "," : "") + std::to_string(seq[i]);
  return out + ")";
}

}  // namespace

SolveResult find_path_undirected(const Graph& g, Vertex s, Vertex t,
                                 std::uint64_t seed,
                                 const UndirectedOptions& opts) {
  if (g.kind() != GraphKind::kUndirected)
    throw KindViolation("undirected solver needs an undirected graph, got " +
                        std::string(kind_name(g.kind())));
  g.check_vertex(s);
  g.check_vertex(t);
  SolveResult res;
  RunTrace& trace = res.trace;
  const WalkContext ctx{opts.meter, &trace.counters};
  const StreamFamily conn(Seed{seed}, "conn");
  std::uint64_t call = 0;
  auto connected = [&](Vertex a, Vertex b, const Restriction& r) {
    return test_connectivity(g, a, b, r, conn.child(call++), ctx);
  };
  // v_cur, v_dest, k, pass count, call index
  MeterScope scope(opts.meter, 5);

  if (!connected(s, t, Restriction::none()))
    throw NotConnected("no path from " + std::to_string(s) + " to " +
                       std::to_string(t));
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  std::vector<bool> visited(n, false);
  visited[s] = true;
  std::vector<Vertex> previous;
  Vertex v_cur = s;
  res.path.vertices.push_back(s);

  while (v_cur != t) {
    if (++trace.passes > n)
      throw NonProgress("more than " + std::to_string(n) + " passes");
    Vertex v_dest = t;
    std::vector<Vertex> seq{t};
    bool moved = false;
    for (Vertex k = 1; k <= n && !moved; ++k) {
      auto edge = g.is_edge(v_cur, v_dest);
      if (!edge && !connected(v_cur, v_dest,
                              Restriction::vertices_from(k, v_cur, v_dest))) {
        v_dest = k - 1;
        seq.push_back(v_dest);
        edge = g.is_edge(v_cur, v_dest);
      }
      if (!edge) continue;
      if (!previous.empty() &&
          compare_dest_seq(seq, previous) != SeqOrder::kGreater)
        throw NonProgress("destination sequence " + format_seq(seq) +
                          " does not exceed " + format_seq(previous) +
                          " at vertex " + std::to_string(v_cur));
      if (visited[v_dest])
        throw NonProgress("vertex " + std::to_string(v_dest) +
                          " reached twice");
      visited[v_dest] = true;
      trace.moves.push_back({trace.moves.size(), v_cur, v_dest, seq});
      res.path.vertices.push_back(v_dest);
      res.path.edge_ids.push_back(*edge);
      v_cur = v_dest;
      previous = std::move(seq);
      moved = true;
    }
    if (!moved)
      throw NonProgress("pass " + std::to_string(trace.passes) +
                        " made no move from " + std::to_string(v_cur));
  }
  return res;
}

}  // namespace pdlog
