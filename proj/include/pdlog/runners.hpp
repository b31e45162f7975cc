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

#pragma once

#include <cstdint>
#include <string>

#include "pdlog/eulerian.hpp"
#include "pdlog/graph.hpp"
#include "pdlog/repro.hpp"
#include "pdlog/swfp.hpp"
#include "pdlog/undirected.hpp"

namespace pdlog {

// Token of a threshold index: index - 1 as a minimal big-endian integer
// (no leading zero byte; index 1 is the empty string), ceil(log2 M) bits.
ReproToken encode_threshold_token(const BigInt& index, const BigInt& grid);
// Inverse; DomainError on a non-minimal encoding or an index above M.
BigInt decode_threshold_token(const ReproToken& token, const BigInt& grid);

// Parses "v0 v1 ... vk\n" back into a vertex list; nullopt on bad text.
std::optional<std::vector<Vertex>> parse_path_text(const std::string& text);

class SwfpRunner : public Runner {
 public:
  SwfpRunner(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
             SwfpOptions opts);

  std::string name() const override { return "swfp"; }
  std::uint64_t token_bits() const override;
  ReproToken sample_token(Stream& influential) const override;
  void check_token(const ReproToken& token) const override;
  std::string run(const ReproToken& token, std::uint64_t seed2) const override;
  std::uint64_t output_bound() const override;
  bool valid_output(const std::string& output) const override;
  std::string solve(std::uint64_t seed) const override;

  SwfpInstance instance() const { return {*g_, s_, t_, k_}; }
  const BigInt& grid() const noexcept { return grid_; }

 private:
  const Graph* g_;
  Vertex s_, t_;
  std::uint64_t k_;
  SwfpOptions opts_;
  BigInt grid_;
};

class UndirectedRunner : public Runner {
 public:
  UndirectedRunner(const Graph& g, Vertex s, Vertex t,
                   UndirectedOptions opts = {});

  std::string name() const override { return "undirected"; }
  std::uint64_t token_bits() const override { return 0; }
  ReproToken sample_token(Stream&) const override { return {}; }
  void check_token(const ReproToken& token) const override;
  std::string run(const ReproToken& token, std::uint64_t seed2) const override;
  std::uint64_t output_bound() const override;
  bool valid_output(const std::string& output) const override;

 private:
  const Graph* g_;
  Vertex s_, t_;
  UndirectedOptions opts_;
};

class EulerianRunner : public Runner {
 public:
  EulerianRunner(const Graph& g, Vertex s, Vertex t, EulerianOptions opts = {});

  std::string name() const override { return "eulerian"; }
  std::uint64_t token_bits() const override { return 0; }
  ReproToken sample_token(Stream&) const override { return {}; }
  void check_token(const ReproToken& token) const override;
  std::string run(const ReproToken& token, std::uint64_t seed2) const override;
  std::uint64_t output_bound() const override;
  bool valid_output(const std::string& output) const override;

 private:
  const Graph* g_;
  Vertex s_, t_;
  EulerianOptions opts_;
};

}  // namespace pdlog
