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
#include <random>
#include <vector>

#include "doctest.h"
#include "pdlog/errors.hpp"
#include "pdlog/eulerian.hpp"
#include "reference.hpp"

using namespace pdlog;

namespace {

bool greater_seq(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

// Cycle deletion driven by exact reachability; returns the vertex sequence.
std::vector<Vertex> reference_path(const Graph& g, Vertex s, Vertex t) {
  const auto f = ref::pairing(g);
  const auto label = ref::orbit_min(g);
  const std::uint32_t m = static_cast<std::uint32_t>(g.edge_count());
  auto reach = [&](Vertex a, Vertex b, std::uint32_t k) {
    return ref::connected(
        g, a, b, [](Vertex) { return true; },
        [&](std::size_t e) { return label[e] >= k; }, true);
  };
  // distinct tails of the orbit of e, in orbit order
  auto tails = [&](std::uint32_t e) {
    std::vector<Vertex> out;
    std::uint32_t x = e;
    do {
      const Vertex v = g.edges()[x].tail;
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      x = f[x];
    } while (x != e);
    return out;
  };
  std::vector<Vertex> path{s};
  Vertex cur = s;
  for (std::size_t pass = 0; cur != t && pass <= g.vertex_count(); ++pass) {
    Vertex dest = t;
    bool moved = false;
    for (std::uint32_t k = 1; k <= m && !moved; ++k) {
      if (reach(cur, dest, k)) continue;
      const auto cyc = tails(k - 1);
      const bool on = std::find(cyc.begin(), cyc.end(), cur) != cyc.end();
      Vertex pick = kNoVertex;
      for (Vertex x : cyc)
        if (on ? reach(x, dest, k) : reach(cur, x, k)) {
          pick = x;
          break;
        }
      if (pick == kNoVertex) return {};
      if (!on) {
        dest = pick;
        continue;
      }
      // follow the cycle from cur's first occurrence
      std::uint32_t w = k - 1;
      while (g.edges()[w].tail != cur) w = f[w];
      for (;;) {
        path.push_back(g.edges()[w].head);
        if (g.edges()[w].head == pick) break;
        w = f[w];
      }
      cur = pick;
      moved = true;
    }
    if (!moved) return {};
  }
  return cur == t ? path : std::vector<Vertex>{};
}

}  // namespace

TEST_CASE("small eulerian instances") {
  const Graph two = Graph::build(GraphKind::kEulerian, 2, {{0, 1}, {1, 0}});
  CHECK(find_path_eulerian(two, 0, 1, 4).path.vertices ==
        std::vector<Vertex>{0, 1});

  const Graph tri =
      Graph::build(GraphKind::kEulerian, 3, {{0, 1}, {1, 2}, {2, 0}});
  const SolveResult r = find_path_eulerian(tri, 0, 2, 4);
  CHECK(r.path.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(r.path.edge_ids == std::vector<EdgeId>{0, 1});

  CHECK(find_path_eulerian(tri, 1, 1, 4).path.vertices ==
        std::vector<Vertex>{1});

  const Graph split = Graph::build(GraphKind::kEulerian, 4,
                                   {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK_THROWS_AS(find_path_eulerian(split, 0, 2, 1), NotConnected);

  const Graph u = Graph::build(GraphKind::kUndirected, 2, {{0, 1}});
  CHECK_THROWS_AS(find_path_eulerian(u, 0, 1, 1), KindViolation);
  const Graph d = Graph::build(GraphKind::kDirected, 2, {{0, 1}, {1, 0}});
  CHECK_THROWS_AS(find_path_eulerian(d, 0, 1, 1), KindViolation);
}

TEST_CASE("figure eight is seed independent") {
  const Graph eight = Graph::build(
      GraphKind::kEulerian, 5,
      {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const SolveResult first = find_path_eulerian(eight, 1, 4, 0);
  CHECK(ref::path_ok(eight, first.path, 1, 4));
  for (std::uint64_t seed = 1; seed < 50; ++seed)
    CHECK(find_path_eulerian(eight, 1, 4, seed).path == first.path);
}

TEST_CASE("agrees with the reachability-driven walk") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = ref::random_eulerian(rng, n, 1 + rng() % 4, true, 4);
    const Vertex s = static_cast<Vertex>(rng() % n);
    const Vertex t = static_cast<Vertex>(rng() % n);
    CAPTURE(trial);
    const SolveResult r = find_path_eulerian(g, s, t, rng());
    CHECK(ref::path_ok(g, r.path, s, t));
    CHECK(r.path.vertices == reference_path(g, s, t));
    for (std::size_t i = 0; i < r.trace.moves.size(); ++i) {
      CHECK(r.trace.moves[i].sequence.front() == t);
      if (i > 0)
        CHECK(greater_seq(r.trace.moves[i].sequence,
                          r.trace.moves[i - 1].sequence));
    }
    std::vector<bool> seen(n);
    for (const MoveRecord& m : r.trace.moves) {
      CHECK_FALSE(seen[m.to]);
      seen[m.to] = true;
    }
  }
}

TEST_CASE("membership modes give the same path") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const Graph g = ref::random_eulerian(rng, n, 3, true, 4);
    const Vertex t = static_cast<Vertex>(n - 1);
    EulerianOptions opts;
    opts.membership = MembershipMode::kCycleScan;
    const Path a = find_path_eulerian(g, 0, t, 5, opts).path;
    opts.membership = MembershipMode::kOrbitMin;
    CHECK(find_path_eulerian(g, 0, t, 5, opts).path == a);
    opts.membership = MembershipMode::kTable;
    CHECK(find_path_eulerian(g, 0, t, 5, opts).path == a);
  }
}

TEST_CASE("workspace") {
  std::mt19937_64 rng(21);
  std::size_t first = 0;
  for (std::size_t n : {5, 10, 20}) {
    const Graph g = ref::random_eulerian(rng, n, 3, true, 5);
    WorkspaceMeter meter;
    EulerianOptions opts;
    opts.meter = &meter;
    find_path_eulerian(g, 0, static_cast<Vertex>(n - 1), 2, opts);
    CHECK(meter.live_words() == 0);
    if (!first) first = meter.peak_words();
    CHECK(meter.peak_words() == first);

    WorkspaceMeter table;
    opts.meter = &table;
    opts.membership = MembershipMode::kTable;
    find_path_eulerian(g, 0, static_cast<Vertex>(n - 1), 2, opts);
    CHECK(table.peak_words() >= g.edge_count());
  }
}
