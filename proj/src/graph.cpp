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

#include "pdlog/graph.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pdlog/digest.hpp"
#include "pdlog/errors.hpp"

namespace pdlog {

std::string_view kind_name(GraphKind kind) noexcept {
  switch (kind) {
    case GraphKind::kDirected: return "directed";
    case GraphKind::kUndirected: return "undirected";
    case GraphKind::kEulerian: return "eulerian";
  }
  return "?";
}

GraphKind parse_kind(std::string_view name) {
  if (name == "directed") return GraphKind::kDirected;
  if (name == "undirected") return GraphKind::kUndirected;
  if (name == "eulerian") return GraphKind::kEulerian;
  throw DomainError("unknown graph kind '" + std::string(name) + "'");
}

namespace {

bool by_neighbor(const AdjEntry& a, const AdjEntry& b) {
  return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
}

void build_csr(std::size_t n, std::vector<std::pair<Vertex, AdjEntry>> items,
               std::vector<std::size_t>& offsets,
               std::vector<AdjEntry>& entries) {
  offsets.assign(n + 1, 0);
  for (const auto& [v, _] : items) ++offsets[v + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  entries.resize(items.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [v, entry] : items) entries[fill[v]++] = entry;
  for (std::size_t v = 0; v < n; ++v)
    std::sort(entries.begin() + offsets[v], entries.begin() + offsets[v + 1],
              by_neighbor);
}

}  // namespace

Graph Graph::build(GraphKind kind, std::size_t vertex_count,
                   std::vector<Edge> edges) {
  if (vertex_count >= kNoVertex)
    throw DomainError("vertex count too large");
  if (edges.size() >= std::numeric_limits<EdgeId>::max())
    throw DomainError("edge count too large");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.tail >= vertex_count || e.head >= vertex_count)
      throw DomainError("edge " + std::to_string(i) + " (" +
                        std::to_string(e.tail) + ", " + std::to_string(e.head) +
                        ") has an endpoint outside [0, " +
                        std::to_string(vertex_count) + ")");
  }

  Graph g;
  g.kind_ = kind;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);

  std::vector<std::pair<Vertex, AdjEntry>> out, in;
  out.reserve(g.edges_.size() * (kind == GraphKind::kUndirected ? 2 : 1));
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    out.push_back({e.tail, {e.head, id}});
    if (kind == GraphKind::kUndirected)
      out.push_back({e.head, {e.tail, id}});
    else
      in.push_back({e.head, {e.tail, id}});
  }
  build_csr(g.n_, std::move(out), g.out_offsets_, g.out_entries_);
  if (kind != GraphKind::kUndirected)
    build_csr(g.n_, std::move(in), g.in_offsets_, g.in_entries_);

  if (kind == GraphKind::kEulerian) {
    for (Vertex v = 0; v < g.n_; ++v) {
      if (g.in_degree(v) != g.out_degree(v))
        throw KindViolation(v, "eulerian graph needs indegree " +
                                   std::to_string(g.in_degree(v)) +
                                   " == outdegree " +
                                   std::to_string(g.out_degree(v)));
    }
  }

  g.in_rank_.assign(g.edges_.size(), 0);
  if (kind != GraphKind::kUndirected) {
    for (Vertex v = 0; v < g.n_; ++v) {
      auto adj = g.in_adj(v);
      for (std::size_t r = 0; r < adj.size(); ++r) g.in_rank_[adj[r].edge] = r;
    }
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " outside [0, " +
                      std::to_string(n_) + ")");
}

std::optional<AdjEntry> Graph::out_neighbor(Vertex v, std::size_t i) const {
  check_vertex(v);
  auto adj = out_adj(v);
  if (i >= adj.size()) return std::nullopt;
  return adj[i];
}

std::optional<AdjEntry> Graph::in_neighbor(Vertex v, std::size_t i) const {
  check_vertex(v);
  auto adj = in_adj(v);
  if (i >= adj.size()) return std::nullopt;
  return adj[i];
}

std::optional<EdgeId> Graph::is_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto adj = out_adj(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), AdjEntry{v, 0},
                             by_neighbor);
  if (it == adj.end() || it->neighbor != v) return std::nullopt;
  return it->edge;
}

std::string format_path(const Path& path, bool with_edges) {
  std::string out;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(path.vertices[i]);
  }
  out += '\n';
  if (with_edges) {
    out += "edges";
    for (EdgeId e : path.edge_ids) out += ' ' + std::to_string(e);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line_no,
                          const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, std::string("bad ") + what + " '" +
                                  std::string(tok) + "'");
  return value;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  GraphKind kind = GraphKind::kDirected;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 4 || tokens[0] != "graph")
        throw ParseError(line_no, "expected 'graph <kind> <n> <m>'");
      try {
        kind = parse_kind(tokens[1]);
      } catch (const DomainError&) {
        throw ParseError(line_no,
                         "unknown graph kind '" + std::string(tokens[1]) + "'");
      }
      n = parse_count(tokens[2], line_no, "vertex count");
      m = parse_count(tokens[3], line_no, "edge count");
      if (n >= kNoVertex) throw ParseError(line_no, "vertex count too large");
      if (m >= std::numeric_limits<EdgeId>::max())
        throw ParseError(line_no, "edge count too large");
      edges.reserve(m);
      have_header = true;
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected an edge line 'u v'");
    if (edges.size() == m)
      throw ParseError(line_no, "more than " + std::to_string(m) + " edges");
    std::uint64_t u = parse_count(tokens[0], line_no, "vertex id");
    std::uint64_t v = parse_count(tokens[1], line_no, "vertex id");
    if (u >= n || v >= n)
      throw ParseError(line_no, "vertex id out of range [0, " +
                                    std::to_string(n) + ")");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw ParseError(line_no, "missing graph header");
  if (edges.size() != m)
    throw ParseError(line_no, "expected " + std::to_string(m) +
                                  " edges, found " +
                                  std::to_string(edges.size()));
  return Graph::build(kind, n, std::move(edges));
}

Graph load_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  return load_graph(in);
}

std::string serialize(const Graph& g) {
  std::string out = "graph ";
  out += kind_name(g.kind());
  out += ' ' + std::to_string(g.vertex_count()) + ' ' +
         std::to_string(g.edge_count()) + '\n';
  for (const Edge& e : g.edges())
    out += std::to_string(e.tail) + ' ' + std::to_string(e.head) + '\n';
  return out;
}

std::string graph_digest(const Graph& g) { return sha256_hex(serialize(g)); }

std::uint64_t instance_size(const Graph& g, Vertex s, Vertex t,
                            std::uint64_t k) {
  const std::string st = std::to_string(s) + ' ' + std::to_string(t) + ' ';
  return serialize(g).size() + st.size() + k;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  return to_hex(std::string_view(reinterpret_cast<const char*>(md), len));
}

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
  return out;
}

std::string from_hex(std::string_view hex) {
  if (hex.size() % 2) throw DomainError("odd-length hex string");
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw DomainError("bad hex digit in '" + std::string(hex) + "'");
  };
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out += static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1]));
  return out;
}

}  // namespace pdlog
