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

#include "doctest.h"
#include "pdlog/errors.hpp"
#include "pdlog/oracles.hpp"
#include "pdlog/walk.hpp"
#include "reference.hpp"

using namespace pdlog;

namespace {

Graph c4() {
  return load_graph_text("graph undirected 4 4\n0 1\n1 2\n2 3\n3 0\n");
}

Graph diamond() {
  // s = 0, a = 1, b = 2, t = 3
  return Graph::build(GraphKind::kDirected, 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("bfs_connected examples") {
  OracleRestriction drop1{2, 0, 2, 0};
  CHECK(bfs_connected(c4(), 0, 2, drop1));
  const Graph pair = Graph::build(GraphKind::kUndirected, 2, {});
  CHECK_FALSE(bfs_connected(pair, 0, 1));
  CHECK(bfs_connected(pair, 1, 1));
  const Graph d = Graph::build(GraphKind::kDirected, 2, {{0, 1}});
  CHECK(bfs_connected(d, 1, 0));
  CHECK_FALSE(bfs_connected(d, 1, 0, {}, true));
  CHECK(bfs_connected(d, 0, 1, {}, true));
}

TEST_CASE("bfs_connected agrees with the reference") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 15;
    const Graph g = trial % 2 ? ref::random_directed(rng, n, 0.15)
                              : ref::random_undirected(rng, n, n, false);
    const Vertex a = rng() % n, b = rng() % n, min_kept = rng() % (n + 1);
    const bool directed = trial % 4 == 1;
    auto keep = [&](Vertex v) { return v >= min_kept || v == a || v == b; };
    CHECK(bfs_connected(g, a, b, {min_kept, a, b, 0}, directed) ==
          ref::connected(g, a, b, keep, [](std::size_t) { return true; },
                         directed && g.directed()));
  }
}

TEST_CASE("validate_path examples") {
  const Graph line = Graph::build(GraphKind::kUndirected, 3, {{0, 1}, {1, 2}});
  CHECK(validate_path(line, Path{{0, 1, 2}, {}}, 0, 2));
  CHECK_FALSE(validate_path(line, Path{{0, 2}, {}}, 0, 2));
  CHECK(validate_path(line, Path{{2, 1, 0}, {1, 0}}, 2, 0));
  CHECK_FALSE(validate_path(line, Path{{0, 1, 2}, {1, 0}}, 0, 2));
  CHECK(validate_path(c4(), Path{{0, 3, 2}, {}}, 0, 2));
  CHECK(validate_path(line, Path{{1}, {}}, 1, 1));
  CHECK_FALSE(validate_path(line, Path{{}, {}}, 1, 1));
  const Graph d = Graph::build(GraphKind::kDirected, 2, {{0, 1}});
  CHECK_FALSE(validate_path(d, Path{{1, 0}, {}}, 1, 0));
}

TEST_CASE("enumerate_st_paths examples") {
  const auto both = enumerate_st_paths(diamond(), 0, 3, 2);
  CHECK(both == std::vector<std::vector<Vertex>>{{0, 1, 3}, {0, 2, 3}});
  const auto self = enumerate_st_paths(diamond(), 2, 2, 0);
  CHECK(self == std::vector<std::vector<Vertex>>{{2}});
  CHECK(enumerate_st_paths(diamond(), 3, 0, 5).empty());
  OracleBudget tiny;
  tiny.max_paths = 1;
  CHECK_THROWS_AS(enumerate_st_paths(diamond(), 0, 3, 2, tiny), BudgetExceeded);
}

TEST_CASE("probability oracles agree with the reference") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const Graph g = ref::random_directed(rng, n, 0.4);
    const Vertex s = rng() % n, t = rng() % n;
    const std::uint64_t k = rng() % 5;
    CHECK(brute_force_pk(g, s, t, k) == ref::pk(g, s, t, k));
    CHECK(oracle_end_probability(g, s, t, k) == ref::end_probability(g, s, t, k));
  }
}

TEST_CASE("enumerated walks validate") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const Graph g = ref::random_directed(rng, n, 0.4);
    const Vertex s = rng() % n, t = rng() % n;
    for (const auto& p : enumerate_st_paths(g, s, t, 4)) {
      CHECK(ref::path_ok(g, p, s, t));
      CHECK(validate_path(g, Path{p, {}}, s, t));
    }
  }
}
