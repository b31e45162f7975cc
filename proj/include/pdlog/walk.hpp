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
#include <string_view>
#include <vector>

#include "pdlog/budget.hpp"
#include "pdlog/cycles.hpp"
#include "pdlog/graph.hpp"
#include "pdlog/meter.hpp"
#include "pdlog/random.hpp"
#include "pdlog/rational.hpp"

namespace pdlog {

enum class EstimatorMode { kPaper, kPractical };

std::string_view estimator_mode_name(EstimatorMode mode) noexcept;
EstimatorMode parse_estimator_mode(std::string_view name);

// How many walks an estimate simulates and the additive error it targets.
struct EstimatorConfig {
  EstimatorMode mode = EstimatorMode::kPractical;
  Rational epsilon;
  Rational delta;
  std::uint64_t samples = 0;

  // N = ceil(ln(2/delta) / (2 eps^2)) walks; Hoeffding then gives
  // Pr[|estimate - p| > eps] <= delta. Requires 0 < eps, delta < 1.
  static EstimatorConfig practical(const Rational& epsilon,
                                   const Rational& delta);
  // (kn)^11 walks, eps = 1/(kn)^5, failure probability 2 exp(-2kn).
  // BudgetExceeded when the walk count exceeds budget.max_samples.
  static EstimatorConfig paper(std::uint64_t k, std::uint64_t n,
                               const OracleBudget& budget);
};

std::uint64_t hoeffding_samples(double epsilon, double delta);

struct Estimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 1;
  Rational value() const { return Rational(BigInt(hits), BigInt(samples)); }
};

// Walk restriction. A vertex is kept iff it is one of the two pinned vertices
// or its id is >= min_kept. An edge is deleted iff cycles != nullptr and it
// lies on one of the first deleted_prefix cycles. Stepping along an edge that
// is deleted or leads to a removed vertex leaves the walk in place.
struct Restriction {
  Vertex min_kept = 0;
  Vertex keep_a = kNoVertex;
  Vertex keep_b = kNoVertex;
  EdgeId deleted_prefix = 0;
  const DeletedCycles* cycles = nullptr;

  static Restriction none() { return {}; }
  static Restriction vertices_from(Vertex min_kept, Vertex a, Vertex b) {
    return {min_kept, a, b, 0, nullptr};
  }
  static Restriction cycle_prefix(const DeletedCycles& cycles, EdgeId prefix) {
    return {0, kNoVertex, kNoVertex, prefix, &cycles};
  }

  bool kept(Vertex v) const noexcept {
    return v >= min_kept || v == keep_a || v == keep_b;
  }
  bool edge_deleted(EdgeId e, Counters* counters) const {
    return cycles && deleted_prefix && cycles->contains(e, deleted_prefix,
                                                        counters);
  }
};

// Out-edges only, or every incident edge regardless of direction.
enum class Traversal { kForward, kSymmetric };

// Meter and counters shared by everything running under one solve.
struct WalkContext {
  WorkspaceMeter* meter = nullptr;
  Counters* counters = nullptr;
};

// One uniform step from v.
Vertex step(const Graph& g, Vertex v, const Restriction& restriction,
            Traversal traversal, Stream& stream, const WalkContext& ctx = {});

// Fraction of N k-step forward walks from s that reach t (t absorbing). Walk j
// draws from family.child(j).
Estimate estimate_pk(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
                     const EstimatorConfig& cfg, const StreamFamily& family,
                     const WalkContext& ctx = {});

// Exact probability that a k-step forward walk from s visits t, with t
// absorbing and a vertex without out-edges holding its mass in place.
Rational exact_pk(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
                  const OracleBudget& budget = {});

// Step-indexed distributions (k + 1 vectors) behind exact_pk.
std::vector<std::vector<Rational>> exact_distributions(
    const Graph& g, Vertex s, Vertex t, std::uint64_t k,
    const OracleBudget& budget = {});

// Repetitions R with 2^-R <= n^-10 and R >= 34: R = max(34, ceil(34 log2 n)).
std::uint64_t connectivity_repetitions(std::uint64_t n);
// 4 m n.
std::uint64_t connectivity_walk_length(const Graph& g);

// Randomized connectivity of a and b in the restricted graph: R walks of
// length 4mn from a, early exit on reaching b. Undirected graphs walk their
// edges; eulerian graphs walk every edge ignoring direction. KindViolation on
// a plain directed graph. One-sided: never reports a disconnected pair as
// connected.
bool test_connectivity(const Graph& g, Vertex a, Vertex b,
                       const Restriction& restriction,
                       const StreamFamily& family,
                       const WalkContext& ctx = {});

}  // namespace pdlog
