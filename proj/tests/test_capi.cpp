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
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "pdlog/pdlog.h"

namespace {

std::string take(pdlog_text* t) {
  std::string s(pdlog_text_data(t), pdlog_text_size(t));
  pdlog_text_free(t);
  return s;
}

pdlog_graph* parse(const std::string& text) {
  pdlog_graph* g = nullptr;
  REQUIRE(pdlog_graph_parse(text.data(), text.size(), &g) == PDLOG_OK);
  return g;
}

const char* kC4 = "graph undirected 4 4\n0 1\n1 2\n2 3\n3 0\n";

}  // namespace

TEST_CASE("graph handles") {
  pdlog_graph* g = parse(kC4);
  CHECK(pdlog_graph_vertex_count(g) == 4);
  CHECK(pdlog_graph_edge_count(g) == 4);
  CHECK(std::string(pdlog_graph_kind(g)) == "undirected");
  pdlog_text* t = nullptr;
  REQUIRE(pdlog_graph_serialize(g, &t) == PDLOG_OK);
  const std::string text = take(t);
  pdlog_graph* again = parse(text);
  REQUIRE(pdlog_graph_digest(g, &t) == PDLOG_OK);
  const std::string d1 = take(t);
  REQUIRE(pdlog_graph_digest(again, &t) == PDLOG_OK);
  CHECK(take(t) == d1);
  CHECK(d1.size() == 64);
  pdlog_graph_free(again);
  pdlog_graph_free(g);
  pdlog_graph_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
  pdlog_graph* g = nullptr;
  const std::string bad = "graph directed 2 1\n0 7\n";
  CHECK(pdlog_graph_parse(bad.data(), bad.size(), &g) != PDLOG_OK);
  CHECK(g == nullptr);
  CHECK(std::strlen(pdlog_last_error()) > 0);
  CHECK(pdlog_graph_load_file("/nonexistent/graph.txt", &g) != PDLOG_OK);
  CHECK(std::string(pdlog_status_name(PDLOG_E_NOT_CONNECTED)).size() > 0);

  pdlog_graph* split = parse("graph undirected 4 2\n0 1\n2 3\n");
  pdlog_options o;
  pdlog_options_init(&o);
  o.s = 0;
  o.t = 3;
  pdlog_result* r = nullptr;
  CHECK(pdlog_solve(split, "undirected", &o, &r) == PDLOG_E_NOT_CONNECTED);
  CHECK(pdlog_solve(split, "eulerian", &o, &r) == PDLOG_E_KIND);
  CHECK(pdlog_solve(split, "nope", &o, &r) == PDLOG_E_DOMAIN);
  CHECK(r == nullptr);
  pdlog_graph_free(split);
}

TEST_CASE("oracle and solver calls") {
  pdlog_graph* g = parse("graph directed 3 2\n0 1\n0 2\n");
  pdlog_text* t = nullptr;
  REQUIRE(pdlog_oracle_pk(g, 0, 1, 1, &t) == PDLOG_OK);
  CHECK(take(t) == "1/2");
  pdlog_graph_free(g);

  pdlog_graph* c4 = parse(kC4);
  pdlog_options o;
  pdlog_options_init(&o);
  o.s = 0;
  o.t = 2;
  o.seed = 7;
  pdlog_result* r = nullptr;
  REQUIRE(pdlog_solve(c4, "undirected", &o, &r) == PDLOG_OK);
  CHECK(pdlog_result_success(r));
  const std::vector<std::uint32_t> path(
      pdlog_result_vertices(r),
      pdlog_result_vertices(r) + pdlog_result_vertex_count(r));
  CHECK(path == std::vector<std::uint32_t>{0, 3, 2});
  CHECK(pdlog_result_edge_count(r) == 2);
  CHECK(pdlog_result_workspace_peak(r) > 0);
  CHECK(std::string(pdlog_result_diagnostics(r)).front() == '{');
  int ok = 0;
  REQUIRE(pdlog_oracle_validate(c4, pdlog_result_vertices(r),
                                pdlog_result_vertex_count(r),
                                pdlog_result_edges(r),
                                pdlog_result_edge_count(r), 0, 2,
                                &ok) == PDLOG_OK);
  CHECK(ok == 1);
  pdlog_result_free(r);

  int conn = 0;
  REQUIRE(pdlog_oracle_connected(c4, 0, 2, 2, 0, 0, &conn) == PDLOG_OK);
  CHECK(conn == 1);  // 0-3-2 survives
  REQUIRE(pdlog_oracle_connected(c4, 0, 1, 4, 0, 0, &conn) == PDLOG_OK);
  CHECK(conn == 1);
  pdlog_graph_free(c4);
}

TEST_CASE("token round trip and sha256") {
  pdlog_graph* g = parse("graph directed 4 4\n0 1\n0 2\n1 3\n2 3\n");
  pdlog_options o;
  pdlog_options_init(&o);
  o.s = 0;
  o.t = 3;
  o.k = 2;
  o.seed = 3;
  o.eps = "1/10";
  o.delta = "1/100";
  pdlog_text* hex = nullptr;
  std::uint64_t bits = 0;
  REQUIRE(pdlog_token_make(g, "swfp", &o, &hex, &bits) == PDLOG_OK);
  CHECK(bits == 6);
  const std::string token = take(hex);
  pdlog_text* out = nullptr;
  REQUIRE(pdlog_token_use(g, "swfp", &o, token.c_str(), &out) == PDLOG_OK);
  CHECK(take(out) == "0 1 3\n");
  CHECK(pdlog_token_use(g, "swfp", &o, "zz", &out) == PDLOG_E_DOMAIN);
  pdlog_graph_free(g);

  REQUIRE(pdlog_sha256("abc", 3, &out) == PDLOG_OK);
  CHECK(take(out) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
