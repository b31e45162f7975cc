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

#include "pdlog/walk.hpp"

#include <cmath>
#include <string>

#include "pdlog/errors.hpp"

namespace pdlog {

std::string_view estimator_mode_name(EstimatorMode mode) noexcept {
  return mode == EstimatorMode::kPaper ? "paper" : "practical";
}

EstimatorMode parse_estimator_mode(std::string_view name) {
  if (name == "paper") return EstimatorMode::kPaper;
  if (name == "practical") return EstimatorMode::kPractical;
  throw DomainError("unknown estimator mode '" + std::string(name) + "'");
}

std::uint64_t hoeffding_samples(double epsilon, double delta) {
  const long double e = epsilon, d = delta;
  const long double n = std::ceil(std::log(2.0L / d) / (2.0L * e * e));
  if (!(n >= 1) || n > 1e18L)
    throw BudgetExceeded("Hoeffding sample count out of range");
  return static_cast<std::uint64_t>(n);
}

EstimatorConfig EstimatorConfig::practical(const Rational& epsilon,
                                           const Rational& delta) {
  if (epsilon <= 0 || epsilon >= 1)
    throw DomainError("epsilon must lie in (0, 1)");
  if (delta <= 0 || delta >= 1) throw DomainError("delta must lie in (0, 1)");
  EstimatorConfig cfg;
  cfg.mode = EstimatorMode::kPractical;
  cfg.epsilon = epsilon;
  cfg.delta = delta;
  cfg.samples = hoeffding_samples(epsilon.get_d(), delta.get_d());
  return cfg;
}

EstimatorConfig EstimatorConfig::paper(std::uint64_t k, std::uint64_t n,
                                       const OracleBudget& budget) {
  if (k == 0 || n == 0) throw DomainError("paper mode needs k, n >= 1");
  BigInt kn = BigInt(static_cast<unsigned long>(k)) *
              BigInt(static_cast<unsigned long>(n));
  BigInt walks, err_den;
  mpz_pow_ui(walks.get_mpz_t(), kn.get_mpz_t(), 11);
  mpz_pow_ui(err_den.get_mpz_t(), kn.get_mpz_t(), 5);
  if (walks > BigInt(static_cast<unsigned long>(budget.max_samples)))
    throw BudgetExceeded("paper-mode estimate needs (kn)^11 = " +
                         walks.get_str() + " walks, budget is " +
                         std::to_string(budget.max_samples));
  EstimatorConfig cfg;
  cfg.mode = EstimatorMode::kPaper;
  cfg.epsilon = Rational(BigInt(1), err_den);
  // 2 exp(-2kn) is irrational; keep a rational upper bound 2 * 2^-(2kn).
  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, 2 * kn.get_ui());
  cfg.delta = Rational(BigInt(2), pow2);
  cfg.delta.canonicalize();
  cfg.samples = walks.get_ui();
  return cfg;
}

namespace {

template <Traversal T>
inline Vertex step_impl(const Graph& g, Vertex v,
                        const Restriction& restriction, Stream& stream,
                        Counters* counters) {
  const auto out = g.out_adj(v);
  const bool split = T == Traversal::kSymmetric && g.directed();
  const std::size_t deg = out.size() + (split ? g.in_degree(v) : 0);
  if (counters) ++counters->walk_steps;
  if (deg == 0) {
    if (counters) ++counters->degenerate_steps;
    return v;
  }
  const std::uint64_t i = uniform_index(stream, deg);
  const AdjEntry entry = i < out.size() ? out[i] : g.in_adj(v)[i - out.size()];
  if (!restriction.kept(entry.neighbor)) return v;
  if (restriction.edge_deleted(entry.edge, counters)) return v;
  return entry.neighbor;
}

Vertex step_dispatch(const Graph& g, Vertex v, const Restriction& restriction,
                     Traversal traversal, Stream& stream, Counters* counters) {
  return traversal == Traversal::kForward
             ? step_impl<Traversal::kForward>(g, v, restriction, stream,
                                              counters)
             : step_impl<Traversal::kSymmetric>(g, v, restriction, stream,
                                                counters);
}

void check_budget(const Graph& g, std::uint64_t k, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices ||
      g.edge_count() > budget.max_edges || k > budget.max_walk_length)
    throw BudgetExceeded("exact computation over budget (n=" +
                         std::to_string(g.vertex_count()) +
                         ", m=" + std::to_string(g.edge_count()) +
                         ", k=" + std::to_string(k) + ")");
}

}  // namespace

Vertex step(const Graph& g, Vertex v, const Restriction& restriction,
            Traversal traversal, Stream& stream, const WalkContext& ctx) {
  g.check_vertex(v);
  return step_dispatch(g, v, restriction, traversal, stream, ctx.counters);
}

Estimate estimate_pk(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
                     const EstimatorConfig& cfg, const StreamFamily& family,
                     const WalkContext& ctx) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (cfg.samples == 0) throw DomainError("estimator needs at least one walk");
  // hits, walk index, current vertex, step counter
  MeterScope scope(ctx.meter, 4);
  if (ctx.counters) ++ctx.counters->estimator_calls;

  Estimate est{0, cfg.samples};
  if (s == t) {
    est.hits = cfg.samples;
    return est;
  }
  const Restriction open = Restriction::none();
  for (std::uint64_t j = 0; j < cfg.samples; ++j) {
    Stream stream = family.stream(j);
    Vertex v = s;
    for (std::uint64_t i = 0; i < k; ++i) {
      v = step_impl<Traversal::kForward>(g, v, open, stream, ctx.counters);
      if (v == t) {
        ++est.hits;
        break;
      }
    }
  }
  if (ctx.counters) ctx.counters->walks += cfg.samples;
  return est;
}

std::vector<std::vector<Rational>> exact_distributions(
    const Graph& g, Vertex s, Vertex t, std::uint64_t k,
    const OracleBudget& budget) {
  g.check_vertex(s);
  g.check_vertex(t);
  check_budget(g, k, budget);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> history;
  history.reserve(k + 1);
  std::vector<Rational> dist(n);
  dist[s] = 1;
  history.push_back(dist);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::vector<Rational> next(n);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == 0) continue;
      const auto out = g.out_adj(v);
      if (v == t || out.empty()) {
        next[v] += dist[v];
        continue;
      }
      Rational share = dist[v] / static_cast<unsigned long>(out.size());
      for (const AdjEntry& a : out) next[a.neighbor] += share;
    }
    dist = std::move(next);
    history.push_back(dist);
  }
  return history;
}

Rational exact_pk(const Graph& g, Vertex s, Vertex t, std::uint64_t k,
                  const OracleBudget& budget) {
  return exact_distributions(g, s, t, k, budget).back()[t];
}

std::uint64_t connectivity_repetitions(std::uint64_t n) {
  if (n < 2) return 34;
  // ceil(34 log2 n) is the bit length of n^34 - 1.
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), n, 34);
  p -= 1;
  const std::uint64_t r = mpz_sizeinbase(p.get_mpz_t(), 2);
  return r < 34 ? 34 : r;
}

std::uint64_t connectivity_walk_length(const Graph& g) {
  return 4ull * g.edge_count() * g.vertex_count();
}

bool test_connectivity(const Graph& g, Vertex a, Vertex b,
                       const Restriction& restriction,
                       const StreamFamily& family, const WalkContext& ctx) {
  if (g.kind() == GraphKind::kDirected)
    throw KindViolation(
        "walk-based connectivity needs an undirected or eulerian graph");
  g.check_vertex(a);
  g.check_vertex(b);
  if (ctx.counters) ++ctx.counters->connectivity_calls;
  if (a == b) return true;
  // repetition, step counter, current vertex, target
  MeterScope scope(ctx.meter, 4);
  const std::uint64_t reps = connectivity_repetitions(g.vertex_count());
  const std::uint64_t length = connectivity_walk_length(g);
  for (std::uint64_t r = 0; r < reps; ++r) {
    Stream stream = family.stream(r);
    if (ctx.counters) ++ctx.counters->walks;
    Vertex v = a;
    for (std::uint64_t i = 0; i < length; ++i) {
      v = step_impl<Traversal::kSymmetric>(g, v, restriction, stream,
                                           ctx.counters);
      if (v == b) return true;
    }
  }
  return false;
}

}  // namespace pdlog
