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
#include <string_view>

namespace pdlog {

// Size caps for exact and brute-force computations. Exceeding any cap is a
// refusal (BudgetExceeded), never an approximation.
struct OracleBudget {
  std::uint64_t max_vertices = 4096;
  std::uint64_t max_edges = 1u << 16;
  std::uint64_t max_walk_length = 4096;
  // Cap on simulated walks per estimate (paper-constant mode).
  std::uint64_t max_samples = 50'000'000;
  // Cap on paths produced by exhaustive enumeration.
  std::uint64_t max_paths = 1'000'000;

  // Defaults overridden by PDLOG_BUDGET, e.g.
  // "vertices=64,edges=512,walk=32,samples=1000000,paths=1000".
  static OracleBudget from_env();
  static OracleBudget parse(std::string_view spec);
};

}  // namespace pdlog
