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

#include "pdlog/oracles.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "pdlog/errors.hpp"

namespace pdlog {
namespace {

using Adj = std::vector<std::vector<std::pair<Vertex, EdgeId>>>;

void check_size(const Graph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices ||
      g.edge_count() > budget.max_edges)
    throw BudgetExceeded("graph exceeds oracle budget");
}

void check_range(const Graph& g, Vertex v) {
  if (v >= g.vertex_count())
    throw DomainError("vertex " + std::to_string(v) + " out of range");
}

// Own adjacency, rebuilt from the edge list and sorted by (neighbor, id).
Adj out_lists(const Graph& g, bool both_ways) {
  Adj adj(g.vertex_count());
  const auto& edges = g.edges();
  for (EdgeId id = 0; id < edges.size(); ++id) {
    adj[edges[id].tail].push_back({edges[id].head, id});
    if (both_ways) adj[edges[id].head].push_back({edges[id].tail, id});
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

}  // namespace

std::vector<bool> oracle_deleted_edges(const Graph& g, EdgeId prefix) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  const auto& edges = g.edges();
  Adj outs(n), ins(n);
  for (EdgeId id = 0; id < m; ++id) {
    outs[edges[id].tail].push_back({edges[id].head, id});
    ins[edges[id].head].push_back({edges[id].tail, id});
  }
  std::vector<EdgeId> f(m);
  for (Vertex v = 0; v < n; ++v) {
    if (ins[v].size() != outs[v].size())
      throw KindViolation(v, "vertex " + std::to_string(v) +
                                 " has unequal in- and outdegree");
    std::sort(outs[v].begin(), outs[v].end());
    std::sort(ins[v].begin(), ins[v].end());
    for (std::size_t i = 0; i < ins[v].size(); ++i)
      f[ins[v][i].second] = outs[v][i].second;
  }
  std::vector<bool> deleted(m, false);
  for (EdgeId j = 0; j < prefix && j < m; ++j) {
    if (deleted[j]) continue;
    EdgeId e = j;
    do {
      deleted[e] = true;
      e = f[e];
    } while (e != j);
  }
  return deleted;
}

bool bfs_connected(const Graph& g, Vertex a, Vertex b,
                   const OracleRestriction& r, bool directed,
                   const OracleBudget& budget) {
  check_size(g, budget);
  check_range(g, a);
  check_range(g, b);
  if (a == b) return true;
  auto kept = [&](Vertex v) {
    return v >= r.min_kept || v == r.keep_a || v == r.keep_b;
  };
  std::vector<bool> deleted(g.edge_count(), false);
  if (r.deleted_prefix) deleted = oracle_deleted_edges(g, r.deleted_prefix);
  const Adj adj = out_lists(g, !directed);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (auto [w, id] : adj[v]) {
      if (seen[w] || deleted[id] || !kept(w)) continue;
      if (w == b) return true;
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return false;
}

bool validate_path(const Graph& g, const Path& p, Vertex s, Vertex t) {
  if (p.vertices.empty() || p.vertices.front() != s ||
      p.vertices.back() != t)
    return false;
  const bool with_ids = !p.edge_ids.empty() || p.vertices.size() == 1;
  if (with_ids && p.edge_ids.size() + 1 != p.vertices.size()) return false;
  const bool undirected = g.kind() == GraphKind::kUndirected;
  const auto& edges = g.edges();
  for (Vertex v : p.vertices)
    if (v >= g.vertex_count()) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const Vertex u = p.vertices[i], v = p.vertices[i + 1];
    auto joins = [&](const Edge& e) {
      return (e.tail == u && e.head == v) ||
             (undirected && e.tail == v && e.head == u);
    };
    if (with_ids) {
      if (p.edge_ids[i] >= edges.size() || !joins(edges[p.edge_ids[i]]))
        return false;
    } else if (std::none_of(edges.begin(), edges.end(), joins)) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> enumerate_st_paths(
    const Graph& g, Vertex s, Vertex t, std::uint64_t max_len,
    const OracleBudget& budget) {
  check_size(g, budget);
  check_range(g, s);
  check_range(g, t);
  Adj adj = out_lists(g, g.kind() == GraphKind::kUndirected);
  for (auto& l : adj) {
    // distinct neighbors only; parallel edges give the same vertex sequence
    auto last = std::unique(l.begin(), l.end(), [](auto x, auto y) {
      return x.first == y.first;
    });
    l.erase(last, l.end());
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> walk{s};
  auto visit = [&](auto&& self) -> void {
    if (walk.back() == t) {
      if (out.size() >= budget.max_paths)
        throw BudgetExceeded("more than " + std::to_string(budget.max_paths) +
                             " paths");
      out.push_back(walk);
      return;
    }
    if (walk.size() > max_len) return;
    for (auto [w, id] : adj[walk.back()]) {
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  visit(visit);
  return out;
}

Rational brute_force_pk(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
                        const OracleBudget& budget) {
  check_size(g, budget);
  check_range(g, s);
  check_range(g, t);
  const Adj adj = out_lists(g, false);
  std::uint64_t leaves = 0;
  auto go = [&](auto&& self, Vertex v, std::uint64_t left) -> Rational {
    if (v == t) return 1;
    if (left == 0 || adj[v].empty()) {
      if (++leaves > budget.max_paths)
        throw BudgetExceeded("walk enumeration over budget");
      return 0;
    }
    Rational sum = 0;
    for (auto [w, id] : adj[v]) sum += self(self, w, left - 1);
    return sum / static_cast<unsigned long>(adj[v].size());
  };
  return go(go, s, k);
}

Rational oracle_end_probability(const Graph& g, Vertex s, Vertex t,
                                std::uint64_t k, const OracleBudget& budget) {
  check_size(g, budget);
  check_range(g, s);
  check_range(g, t);
  if (k > budget.max_walk_length)
    throw BudgetExceeded("walk length over budget");
  const Adj adj = out_lists(g, false);
  std::vector<Rational> dist(g.vertex_count());
  dist[s] = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::vector<Rational> next(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] == 0) continue;
      if (adj[v].empty()) {
        next[v] += dist[v];
        continue;
      }
      const Rational share = dist[v] / static_cast<unsigned long>(adj[v].size());
      for (auto [w, id] : adj[v]) next[w] += share;
    }
    dist = std::move(next);
  }
  return dist[t];
}

}  // namespace pdlog
