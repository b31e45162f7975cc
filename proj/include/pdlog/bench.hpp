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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdlog/cycles.hpp"
#include "pdlog/generators.hpp"

namespace pdlog {

enum class BenchSuite { kUndirected, kEulerian, kSwfp };

std::string_view suite_name(BenchSuite suite) noexcept;
BenchSuite parse_suite(std::string_view name);

struct BenchConfig {
  BenchSuite suite = BenchSuite::kUndirected;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> seeds{1};
  // m = edge_factor * n for the undirected and eulerian suites.
  std::uint64_t edge_factor = 3;
  // Walk length for the swfp suite.
  std::uint64_t swfp_k = 6;
  MembershipMode membership = MembershipMode::kTable;
  // Replaces the suite's own generator (rows then fail as the solver
  // dictates, e.g. KindViolation).
  std::optional<GenModel> model;
};

struct BenchRow {
  std::string suite;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::uint64_t walk_steps = 0;
  std::uint64_t connectivity_calls = 0;
  std::uint64_t orbit_steps = 0;
  double wall_ms = 0;
  std::string status = "ok";  // or the error name
};

std::vector<BenchRow> run_bench(const BenchConfig& cfg);
std::string bench_csv(const std::vector<BenchRow>& rows, bool with_wall = true);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

// Slope of median walk steps per size over the ok rows; nullopt with fewer
// than two sizes.
std::optional<double> walk_step_slope(const std::vector<BenchRow>& rows);

}  // namespace pdlog
