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

#include "pdlog/runners.hpp"

#include <charconv>
#include <string>

#include "pdlog/errors.hpp"
#include "pdlog/oracles.hpp"

namespace pdlog {
namespace {

std::uint64_t ceil_log2(const BigInt& m) {
  if (m <= 1) return 0;
  const BigInt top = m - 1;
  return mpz_sizeinbase(top.get_mpz_t(), 2);
}

bool valid_text(const Graph& g, Vertex s, Vertex t, const std::string& out) {
  auto vs = parse_path_text(out);
  if (!vs) return false;
  Path p;
  p.vertices = std::move(*vs);
  return validate_path(g, p, s, t);
}

std::uint64_t digits(std::uint64_t n) { return std::to_string(n).size(); }

void require_empty(const ReproToken& token, std::string_view who) {
  if (!token.bytes.empty() || token.bits)
    throw DomainError(std::string(who) + " runner takes an empty token");
}

}  // namespace

ReproToken encode_threshold_token(const BigInt& index, const BigInt& grid) {
  if (index < 1 || index > grid)
    throw DomainError("threshold index " + index.get_str() +
                      " outside [1, " + grid.get_str() + "]");
  BigInt z = index - 1;
  std::string bytes;
  while (z > 0) {
    bytes.insert(bytes.begin(), static_cast<char>(mpz_get_ui(z.get_mpz_t()) & 0xff));
    z >>= 8;
  }
  return {bytes, ceil_log2(grid)};
}

BigInt decode_threshold_token(const ReproToken& token, const BigInt& grid) {
  if (!token.bytes.empty() && token.bytes.front() == '\0')
    throw DomainError("threshold token has a leading zero byte");
  if (token.bits != ceil_log2(grid))
    throw DomainError("threshold token declares " + std::to_string(token.bits) +
                      " bits, grid needs " + std::to_string(ceil_log2(grid)));
  BigInt z = 0;
  for (unsigned char c : token.bytes) z = z * 256 + c;
  if (z >= grid)
    throw DomainError("threshold token " + z.get_str() + " outside [0, " +
                      grid.get_str() + ")");
  return z + 1;
}

std::optional<std::vector<Vertex>> parse_path_text(const std::string& text) {
  const std::size_t nl = text.find('\n');
  const std::string_view line = std::string_view(text).substr(0, nl);
  std::vector<Vertex> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc{}) return std::nullopt;
    out.push_back(v);
    i = ptr - line.data();
    if (i < line.size() && line[i] != ' ') return std::nullopt;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

SwfpRunner::SwfpRunner(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
                       SwfpOptions opts)
    : g_(&g), s_(s), t_(t), k_(k), opts_(std::move(opts)),
      grid_(grid_size(k, g.vertex_count())) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (k == 0) throw DomainError("walk length k must be at least 1");
}

std::uint64_t SwfpRunner::token_bits() const { return ceil_log2(grid_); }

ReproToken SwfpRunner::sample_token(Stream& influential) const {
  const Threshold th = sample_threshold(k_, g_->vertex_count(), influential);
  return encode_threshold_token(th.index, grid_);
}

void SwfpRunner::check_token(const ReproToken& token) const {
  decode_threshold_token(token, grid_);
}

std::string SwfpRunner::run(const ReproToken& token,
                            std::uint64_t seed2) const {
  const BigInt index = decode_threshold_token(token, grid_);
  return format_path(replay_swfp(instance(), opts_, index, seed2).path);
}

std::string SwfpRunner::solve(std::uint64_t seed) const {
  return format_path(solve_swfp(instance(), opts_, seed).path);
}

std::uint64_t SwfpRunner::output_bound() const {
  return (k_ + 1) * (digits(g_->vertex_count()) + 1);
}

bool SwfpRunner::valid_output(const std::string& output) const {
  auto vs = parse_path_text(output);
  return vs && vs->size() <= k_ + 1 && valid_text(*g_, s_, t_, output);
}

UndirectedRunner::UndirectedRunner(const Graph& g, Vertex s, Vertex t,
                                   UndirectedOptions opts)
    : g_(&g), s_(s), t_(t), opts_(opts) {
  g.check_vertex(s);
  g.check_vertex(t);
}

void UndirectedRunner::check_token(const ReproToken& token) const {
  require_empty(token, "undirected");
}

std::string UndirectedRunner::run(const ReproToken& token,
                                  std::uint64_t seed2) const {
  check_token(token);
  return format_path(find_path_undirected(*g_, s_, t_, seed2, opts_).path);
}

std::uint64_t UndirectedRunner::output_bound() const {
  return g_->vertex_count() * (digits(g_->vertex_count()) + 1);
}

bool UndirectedRunner::valid_output(const std::string& output) const {
  return valid_text(*g_, s_, t_, output);
}

EulerianRunner::EulerianRunner(const Graph& g, Vertex s, Vertex t,
                               EulerianOptions opts)
    : g_(&g), s_(s), t_(t), opts_(opts) {
  g.check_vertex(s);
  g.check_vertex(t);
}

void EulerianRunner::check_token(const ReproToken& token) const {
  require_empty(token, "eulerian");
}

std::string EulerianRunner::run(const ReproToken& token,
                                std::uint64_t seed2) const {
  check_token(token);
  return format_path(find_path_eulerian(*g_, s_, t_, seed2, opts_).path);
}

std::uint64_t EulerianRunner::output_bound() const {
  return (g_->edge_count() + 1) * (digits(g_->vertex_count()) + 1);
}

bool EulerianRunner::valid_output(const std::string& output) const {
  return valid_text(*g_, s_, t_, output);
}

}  // namespace pdlog
