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
#include "pdlog/undirected.hpp"
#include "reference.hpp"

using namespace pdlog;

namespace {

// Lexicographic order with "proper prefix is greater".
bool greater_seq(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

bool adjacent(const Graph& g, Vertex u, Vertex v) {
  for (const Edge& e : g.edges())
    if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u))
      return true;
  return false;
}

// Same walk with exact BFS in place of the randomized test.
std::vector<Vertex> reference_path(const Graph& g, Vertex s, Vertex t) {
  const Vertex n = static_cast<Vertex>(g.vertex_count());
  std::vector<Vertex> path{s};
  Vertex cur = s;
  for (Vertex pass = 0; cur != t && pass <= n; ++pass) {
    Vertex dest = t;
    bool moved = false;
    for (Vertex k = 1; k <= n && !moved; ++k) {
      if (adjacent(g, cur, dest)) {
        moved = true;
        break;
      }
      auto keep = [&](Vertex v) { return v >= k || v == cur || v == dest; };
      if (ref::connected(g, cur, dest, keep, [](std::size_t) { return true; }))
        continue;
      dest = k - 1;
      moved = adjacent(g, cur, dest);
    }
    if (!moved) return {};
    cur = dest;
    path.push_back(cur);
  }
  return cur == t ? path : std::vector<Vertex>{};
}

}  // namespace

TEST_CASE("compare_dest_seq examples") {
  CHECK(compare_dest_seq({9, 3, 5}, {9, 3, 5, 7}) == SeqOrder::kGreater);
  CHECK(compare_dest_seq({9, 3, 5, 7}, {9, 3, 5}) == SeqOrder::kLess);
  CHECK(compare_dest_seq({9, 4}, {9, 3, 9}) == SeqOrder::kGreater);
  CHECK(compare_dest_seq({9, 3, 9}, {9, 4}) == SeqOrder::kLess);
  CHECK(compare_dest_seq({9, 1, 2}, {9, 1, 2}) == SeqOrder::kEqual);
  CHECK_THROWS_AS(compare_dest_seq({9, 1}, {8, 1}), DomainError);
  CHECK_THROWS_AS(compare_dest_seq({}, {8}), DomainError);
}

TEST_CASE("small undirected instances") {
  const Graph path =
      Graph::build(GraphKind::kUndirected, 3, {{0, 1}, {1, 2}});
  CHECK(find_path_undirected(path, 0, 2, 1).path.vertices ==
        std::vector<Vertex>{0, 1, 2});

  const Graph c4 = Graph::build(GraphKind::kUndirected, 4,
                                {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (std::uint64_t seed : {1, 7, 99}) {
    const SolveResult r = find_path_undirected(c4, 0, 2, seed);
    CHECK(r.path.vertices == std::vector<Vertex>{0, 3, 2});
    CHECK(ref::path_ok(c4, r.path, 0, 2));
  }

  const SolveResult same = find_path_undirected(c4, 2, 2, 3);
  CHECK(same.path.vertices == std::vector<Vertex>{2});
  CHECK(same.path.edge_ids.empty());

  const Graph split =
      Graph::build(GraphKind::kUndirected, 4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(find_path_undirected(split, 0, 3, 1), NotConnected);

  const Graph d = Graph::build(GraphKind::kDirected, 2, {{0, 1}});
  CHECK_THROWS_AS(find_path_undirected(d, 0, 1, 1), KindViolation);
  CHECK_THROWS_AS(find_path_undirected(path, 0, 5, 1), DomainError);
}

TEST_CASE("agrees with the BFS-driven walk on random connected graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = ref::random_undirected(rng, n, n - 1 + rng() % n, true);
    const Vertex s = static_cast<Vertex>(rng() % n);
    const Vertex t = static_cast<Vertex>(rng() % n);
    const std::uint64_t seed = rng();
    const SolveResult r = find_path_undirected(g, s, t, seed);
    CAPTURE(trial);
    CHECK(ref::path_ok(g, r.path, s, t));
    CHECK(r.path.vertices == reference_path(g, s, t));

    std::vector<bool> seen(n);
    for (Vertex v : r.path.vertices) {
      CHECK_FALSE(seen[v]);
      seen[v] = true;
    }
    for (std::size_t i = 0; i < r.trace.moves.size(); ++i) {
      const MoveRecord& m = r.trace.moves[i];
      CHECK(m.sequence.front() == t);
      CHECK(m.sequence.back() == m.to);
      if (i > 0) CHECK(greater_seq(m.sequence, r.trace.moves[i - 1].sequence));
    }
  }
}

TEST_CASE("paths are seed independent") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 4 + rng() % 5;
    const Graph g = ref::random_undirected(rng, n, 2 * n, true);
    const SolveResult a = find_path_undirected(g, 0, 1, 1);
    for (std::uint64_t seed = 2; seed < 12; ++seed)
      CHECK(find_path_undirected(g, 0, 1, seed).path == a.path);
  }
}

TEST_CASE("workspace stays constant") {
  std::mt19937_64 rng(8);
  std::size_t first = 0;
  for (std::size_t n : {6, 12, 24}) {
    const Graph g = ref::random_undirected(rng, n, 2 * n, true);
    WorkspaceMeter meter;
    UndirectedOptions opts;
    opts.meter = &meter;
    find_path_undirected(g, 0, static_cast<Vertex>(n - 1), 3, opts);
    CHECK(meter.live_words() == 0);
    if (!first) first = meter.peak_words();
    CHECK(meter.peak_words() == first);
  }
}
