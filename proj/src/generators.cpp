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

#include "pdlog/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pdlog/errors.hpp"
#include "pdlog/oracles.hpp"
#include "pdlog/rational.hpp"
#include "pdlog/reduction.hpp"
#include "pdlog/walk.hpp"

namespace pdlog {

std::string_view model_name(GenModel model) noexcept {
  switch (model) {
    case GenModel::kErdosDirected: return "erdos_directed";
    case GenModel::kErdosUndirected: return "erdos_undirected";
    case GenModel::kEulerianCycleUnion: return "eulerian_cycle_union";
    case GenModel::kLayeredFunnel: return "layered_funnel";
    case GenModel::kPolyMixing: return "poly_mixing";
  }
  return "?";
}

GenModel parse_model(std::string_view name) {
  for (GenModel m : {GenModel::kErdosDirected, GenModel::kErdosUndirected,
                     GenModel::kEulerianCycleUnion, GenModel::kLayeredFunnel,
                     GenModel::kPolyMixing})
    if (model_name(m) == name) return m;
  throw DomainError("unknown generator model '" + std::string(name) + "'");
}

namespace {

void shuffle(std::vector<Vertex>& xs, Stream& stream) {
  for (std::size_t i = xs.size(); i > 1; --i)
    std::swap(xs[i - 1], xs[uniform_index(stream, i)]);
}

std::vector<Vertex> permutation(std::uint64_t n, Stream& stream) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  shuffle(p, stream);
  return p;
}

// Random simple graph: pairs u != v (u < v when undirected).
std::vector<Edge> erdos(const GenParams& p, bool directed, Stream& stream) {
  const std::uint64_t n = p.n;
  const std::uint64_t pairs = directed ? n * (n - 1) : n * (n - 1) / 2;
  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<Edge> edges;
  auto add = [&](Vertex u, Vertex v) {
    if (!directed && u > v) std::swap(u, v);
    if (!present.insert({u, v}).second) return false;
    edges.push_back({u, v});
    return true;
  };
  if (p.connected && directed)
    throw GenerationError("connected option applies to undirected graphs");
  if (p.connected && n > 1) {
    const auto order = permutation(n, stream);
    for (std::uint64_t i = 1; i < n; ++i)
      add(order[uniform_index(stream, i)], order[i]);
  }
  if (p.edges) {
    if (p.edges > pairs)
      throw GenerationError("requested " + std::to_string(p.edges) +
                            " edges, only " + std::to_string(pairs) +
                            " vertex pairs");
    while (edges.size() < p.edges) {
      Vertex u = static_cast<Vertex>(uniform_index(stream, n));
      Vertex v = static_cast<Vertex>(uniform_index(stream, n));
      if (u != v) add(u, v);
    }
  } else {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = directed ? 0 : u + 1; v < n; ++v)
        if (u != v && bernoulli(stream, p.density)) add(u, v);
  }
  return edges;
}

std::vector<Edge> cycle_union(const GenParams& p, Stream& stream) {
  const std::uint64_t n = p.n;
  const std::uint64_t hi = p.max_cycle ? p.max_cycle : n;
  if (p.min_cycle < 1 || p.min_cycle > hi || hi > n)
    throw GenerationError("cycle lengths [" + std::to_string(p.min_cycle) +
                          ", " + std::to_string(hi) +
                          "] do not fit in " + std::to_string(n) +
                          " vertices");
  std::vector<Edge> edges;
  auto add_cycle = [&](const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      edges.push_back({vs[i], vs[(i + 1) % vs.size()]});
  };
  std::uint64_t made = 0;
  if (p.connected && p.cycles) {
    add_cycle(permutation(n, stream));
    ++made;
  }
  for (; made < p.cycles; ++made) {
    const std::uint64_t len =
        p.min_cycle + uniform_index(stream, hi - p.min_cycle + 1);
    auto vs = permutation(n, stream);
    vs.resize(len);
    add_cycle(vs);
  }
  return edges;
}

// Levels 0..L with s alone on level 0 and t alone on level L; every vertex
// has an edge to the next level, so without back edges every walk reaches t
// within L <= k steps.
std::vector<Edge> funnel(const GenParams& p, Stream& stream) {
  const std::uint64_t n = p.n;
  const Vertex t = static_cast<Vertex>(n - 1);
  std::vector<Edge> edges;
  if (n == 1) {
    edges.push_back({0, 0});
    return edges;
  }
  const std::uint64_t inner = n - 2;
  const std::uint64_t levels = std::min<std::uint64_t>(p.k, inner + 1);
  if (levels == 0) throw GenerationError("funnel needs k >= 1");
  if (levels == 1 && inner > 0)
    throw GenerationError("k = 1 funnel cannot hold inner vertices");
  // level[v] for v in 1..n-2; each inner level 1..levels-1 nonempty
  std::vector<std::uint64_t> level(n, 0);
  level[t] = levels;
  std::vector<std::vector<Vertex>> by_level(levels + 1);
  by_level[0].push_back(0);
  by_level[levels].push_back(t);
  for (Vertex v = 1; v <= inner; ++v) {
    const std::uint64_t lv = v <= levels - 1
                                 ? v
                                 : 1 + uniform_index(stream, levels - 1);
    level[v] = lv;
    by_level[lv].push_back(v);
  }
  for (Vertex v = 0; v < t; ++v) {
    const auto& next = by_level[level[v] + 1];
    const Vertex w = next[uniform_index(stream, next.size())];
    edges.push_back({v, w});
    for (Vertex u = 1; u < n; ++u)
      if (u != w && level[u] > level[v] && bernoulli(stream, p.density))
        edges.push_back({v, u});
    if (level[v] > 0 && bernoulli(stream, p.back_density)) {
      const Vertex u = static_cast<Vertex>(uniform_index(stream, v + 1));
      if (level[u] <= level[v]) edges.push_back({v, u});
    }
  }
  edges.push_back({t, t});
  return edges;
}

std::vector<Edge> poly_mixing(const GenParams& p, Stream& stream) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < p.n; ++u) {
    bool any = false;
    for (Vertex v = 0; v < p.n; ++v)
      if (bernoulli(stream, p.density)) {
        edges.push_back({u, v});
        any = true;
      }
    if (!any)
      edges.push_back({u, static_cast<Vertex>(uniform_index(stream, p.n))});
  }
  return edges;
}

}  // namespace

GeneratedInstance generate_graph(GenModel model, const GenParams& p,
                                 Stream& stream) {
  if (p.n == 0) throw GenerationError("n must be at least 1");
  if (!(p.density >= 0 && p.density <= 1) ||
      !(p.back_density >= 0 && p.back_density <= 1))
    throw GenerationError("densities must lie in [0, 1]");
  GeneratedInstance out;
  switch (model) {
    case GenModel::kErdosDirected:
      out.graph = Graph::build(GraphKind::kDirected, p.n, erdos(p, true, stream));
      return out;
    case GenModel::kErdosUndirected:
      out.graph =
          Graph::build(GraphKind::kUndirected, p.n, erdos(p, false, stream));
      return out;
    case GenModel::kEulerianCycleUnion:
      out.graph =
          Graph::build(GraphKind::kEulerian, p.n, cycle_union(p, stream));
      return out;
    case GenModel::kLayeredFunnel: {
      out.t = static_cast<Vertex>(p.n - 1);
      for (std::uint64_t a = 0; a < std::max<std::uint64_t>(p.attempts, 1);
           ++a) {
        Graph g = Graph::build(GraphKind::kDirected, p.n, funnel(p, stream));
        const Rational need =
            1 - Rational(1, instance_size(g, out.s, out.t, p.k));
        if (exact_pk(g, out.s, out.t, p.k) >= need) {
          out.graph = std::move(g);
          return out;
        }
      }
      throw GenerationError("no funnel with hit probability >= 1 - 1/|x| in " +
                            std::to_string(p.attempts) + " attempts");
    }
    case GenModel::kPolyMixing: {
      if (p.k < 2) throw GenerationError("poly_mixing needs k >= 2");
      out.t = static_cast<Vertex>(p.n - 1);
      const std::uint64_t m = layer_count(p.k);
      for (std::uint64_t a = 0; a < std::max<std::uint64_t>(p.attempts, 1);
           ++a) {
        Graph g =
            Graph::build(GraphKind::kDirected, p.n, poly_mixing(p, stream));
        if (oracle_end_probability(g, out.s, out.t, m) * (2 * p.k) >= 1) {
          out.graph = std::move(g);
          return out;
        }
      }
      throw GenerationError("no poly-mixing instance in " +
                            std::to_string(p.attempts) + " attempts");
    }
  }
  throw GenerationError("unknown model");
}

}  // namespace pdlog
