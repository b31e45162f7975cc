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
#include <vector>

#include "pdlog/budget.hpp"
#include "pdlog/graph.hpp"
#include "pdlog/meter.hpp"
#include "pdlog/random.hpp"
#include "pdlog/rational.hpp"
#include "pdlog/walk.hpp"

namespace pdlog {

struct SwfpInstance {
  const Graph& g;
  Vertex s;
  Vertex t;
  std::uint64_t k;
};

// p_k(s, t) >= 1 - 1/|x|, decided exactly.
bool instance_valid(const SwfpInstance& inst, const OracleBudget& budget = {});

// c = index / D with index in [1, M], M = k^2 n^2, D = k^4 n^4.
struct Threshold {
  BigInt index;
  BigInt grid;         // M
  BigInt denominator;  // D

  Rational value() const { return Rational(index, denominator); }
};

BigInt grid_size(std::uint64_t k, std::uint64_t n);
BigInt grid_denominator(std::uint64_t k, std::uint64_t n);

// Uniform index on [1, M] by rejection sampling.
Threshold sample_threshold(std::uint64_t k, std::uint64_t n, Stream& stream);
// DomainError unless 1 <= index <= M.
Threshold make_threshold(std::uint64_t k, std::uint64_t n, const BigInt& index);

struct SwfpOptions {
  EstimatorConfig estimator;
  WorkspaceMeter* meter = nullptr;
  // Substitute exact probabilities for the sampled estimates.
  bool exact = false;
  // Check the instance against the threshold grid with exact probabilities
  // (always done in exact mode).
  bool certify = false;
  OracleBudget budget;
};

struct SolveReport {
  Path path;
  Threshold threshold;
  std::uint64_t stalls = 0;
  bool success = false;
  // Set by the grid check: some 1/2 - p_i(v, t) is exactly a grid point.
  bool grid_collision = false;
  Counters counters;
  std::vector<std::string> warnings;
};

// Greedy walk from s: at each depth d = k..1 accept the first distinct
// out-neighbor v (canonical order) whose estimate of 1/2 - p_{d-1}(v, t) is
// at most c. Stops early at t; a depth with no accepted neighbor is a stall.
// The threshold comes from substream(seed, "threshold") and every walk from
// the family (seed, "walks").
SolveReport solve_swfp(const SwfpInstance& inst, const SwfpOptions& opts,
                       std::uint64_t seed);

// Same with the threshold pinned and the walks drawn from seed2.
SolveReport replay_swfp(const SwfpInstance& inst, const SwfpOptions& opts,
                        const BigInt& index, std::uint64_t seed2);

// p_i(v, t) for every 0 <= i < k and every v, against the threshold grid.
struct GridCertificate {
  // No 1/2 - p_i(v, t) lies within epsilon of [1/D, M/D].
  bool certified = false;
  // Some 1/2 - p_i(v, t) equals a grid point exactly.
  bool collision = false;
  // Grid indices within 1/(k^5 n^5) of some 1/2 - p_i(v, t).
  std::uint64_t bad_indices = 0;
  // (i, v) pairs that break certification.
  std::vector<std::pair<std::uint64_t, Vertex>> offenders;
};

GridCertificate certify_grid(const Graph& g, Vertex t, std::uint64_t k,
                             const Rational& epsilon,
                             const OracleBudget& budget = {});

// table[i][v] = p_i(v, t) for 0 <= i <= k.
std::vector<std::vector<Rational>> hit_table(const Graph& g, Vertex t,
                                             std::uint64_t k,
                                             const OracleBudget& budget = {});

}  // namespace pdlog
