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

#include "pdlog/swfp.hpp"

#include <algorithm>
#include <string>

#include "pdlog/errors.hpp"

namespace pdlog {
namespace {

std::size_t bit_length(const BigInt& x) {
  return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

void check_instance(const SwfpInstance& inst) {
  inst.g.check_vertex(inst.s);
  inst.g.check_vertex(inst.t);
  if (inst.k == 0) throw DomainError("walk length k must be at least 1");
}

SolveReport run(const SwfpInstance& inst, const SwfpOptions& opts,
                Threshold threshold, std::uint64_t seed2) {
  const Graph& g = inst.g;
  SolveReport rep;
  rep.threshold = std::move(threshold);
  const WalkContext ctx{opts.meter, &rep.counters};
  // u, d, neighbor cursor, accepted flag, stall count, threshold index
  const std::size_t index_words = 1 + bit_length(rep.threshold.index) / 64;
  MeterScope scope(opts.meter, 5 + index_words);

  const BigInt& D = rep.threshold.denominator;
  const BigInt& c = rep.threshold.index;
  if (!opts.exact && opts.estimator.epsilon * 2 * D >= 1)
    rep.warnings.push_back("estimator error " +
                           to_fraction_string(opts.estimator.epsilon) +
                           " is not below half the grid spacing 1/(2D)");

  std::vector<std::vector<Rational>> table;
  if (opts.exact) table = hit_table(g, inst.t, inst.k, opts.budget);
  if (opts.exact || opts.certify) {
    const Rational eps = opts.exact ? Rational(0) : opts.estimator.epsilon;
    const GridCertificate cert =
        certify_grid(g, inst.t, inst.k, eps, opts.budget);
    rep.grid_collision = cert.collision;
    if (cert.collision)
      rep.warnings.push_back("GridCollision: some 1/2 - p_i(v,t) is a grid "
                             "point");
    if (!opts.exact && !cert.certified)
      rep.warnings.push_back(std::to_string(cert.offenders.size()) +
                             " (i, v) pairs lie within eps of the grid");
  }
  const StreamFamily walks(Seed{seed2}, "walks");

  Vertex u = inst.s;
  rep.path.vertices.push_back(u);
  for (std::uint64_t d = inst.k; d >= 1; --d) {
    if (u == inst.t) break;
    const auto out = g.out_adj(u);
    bool accepted = false;
    for (std::size_t i = 0; i < out.size() && !accepted; ++i) {
      const AdjEntry entry = out[i];
      if (i > 0 && out[i - 1].neighbor == entry.neighbor) continue;
      const Vertex v = entry.neighbor;
      if (opts.exact) {
        // 1/2 - p <= c / D
        accepted = Rational(1, 2) - table[d - 1][v] <= Rational(c, D);
      } else {
        const Estimate est =
            estimate_pk(g, v, inst.t, d - 1, opts.estimator,
                        walks.child(d).child(v), ctx);
        const BigInt N(static_cast<unsigned long>(est.samples));
        const BigInt h(static_cast<unsigned long>(est.hits));
        accepted = D * (N - 2 * h) <= 2 * c * N;
      }
      if (accepted) {
        u = v;
        rep.path.vertices.push_back(v);
        rep.path.edge_ids.push_back(entry.edge);
      }
    }
    if (!accepted) ++rep.stalls;
  }
  rep.success = u == inst.t;
  return rep;
}

}  // namespace

bool instance_valid(const SwfpInstance& inst, const OracleBudget& budget) {
  check_instance(inst);
  const Rational need =
      1 - Rational(1, instance_size(inst.g, inst.s, inst.t, inst.k));
  return exact_pk(inst.g, inst.s, inst.t, inst.k, budget) >= need;
}

BigInt grid_size(std::uint64_t k, std::uint64_t n) {
  const BigInt kn = BigInt(static_cast<unsigned long>(k)) *
                    BigInt(static_cast<unsigned long>(n));
  return kn * kn;
}

BigInt grid_denominator(std::uint64_t k, std::uint64_t n) {
  const BigInt m = grid_size(k, n);
  return m * m;
}

Threshold make_threshold(std::uint64_t k, std::uint64_t n,
                         const BigInt& index) {
  Threshold th{index, grid_size(k, n), grid_denominator(k, n)};
  if (th.grid == 0) throw DomainError("empty threshold grid (k or n is 0)");
  if (index < 1 || index > th.grid)
    throw DomainError("threshold index " + index.get_str() +
                      " outside [1, " + th.grid.get_str() + "]");
  return th;
}

Threshold sample_threshold(std::uint64_t k, std::uint64_t n, Stream& stream) {
  const BigInt M = grid_size(k, n);
  if (M == 0) throw DomainError("empty threshold grid (k or n is 0)");
  BigInt index;
  if (M <= BigInt(~0ul)) {
    index = BigInt(static_cast<unsigned long>(
                uniform_index(stream, M.get_ui()))) + 1;
  } else {
    const BigInt top = M - 1;
    const std::size_t bits = bit_length(top);
    do {
      index = 0;
      for (std::size_t done = 0; done < bits; done += 64) {
        const unsigned take =
            static_cast<unsigned>(std::min<std::size_t>(64, bits - done));
        BigInt chunk(static_cast<unsigned long>(stream.next_bits(take)));
        mpz_mul_2exp(chunk.get_mpz_t(), chunk.get_mpz_t(), done);
        index += chunk;
      }
    } while (index > top);
    index += 1;
  }
  return make_threshold(k, n, index);
}

SolveReport solve_swfp(const SwfpInstance& inst, const SwfpOptions& opts,
                       std::uint64_t seed) {
  check_instance(inst);
  Stream r1 = substream(Seed{seed}, "threshold");
  Threshold th = sample_threshold(inst.k, inst.g.vertex_count(), r1);
  return run(inst, opts, std::move(th), seed);
}

SolveReport replay_swfp(const SwfpInstance& inst, const SwfpOptions& opts,
                        const BigInt& index, std::uint64_t seed2) {
  check_instance(inst);
  return run(inst, opts, make_threshold(inst.k, inst.g.vertex_count(), index),
             seed2);
}

std::vector<std::vector<Rational>> hit_table(const Graph& g, Vertex t,
                                             std::uint64_t k,
                                             const OracleBudget& budget) {
  g.check_vertex(t);
  if (g.vertex_count() > budget.max_vertices ||
      g.edge_count() > budget.max_edges || k > budget.max_walk_length)
    throw BudgetExceeded("hit table over budget");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Rational>> table(k + 1, std::vector<Rational>(n));
  table[0][t] = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    for (Vertex v = 0; v < n; ++v) {
      if (v == t) {
        table[i][v] = 1;
        continue;
      }
      const auto out = g.out_adj(v);
      if (out.empty()) continue;
      Rational sum = 0;
      for (const AdjEntry& a : out) sum += table[i - 1][a.neighbor];
      table[i][v] = sum / static_cast<unsigned long>(out.size());
    }
  return table;
}

GridCertificate certify_grid(const Graph& g, Vertex t, std::uint64_t k,
                             const Rational& epsilon,
                             const OracleBudget& budget) {
  if (k == 0) throw DomainError("walk length k must be at least 1");
  const std::uint64_t n = g.vertex_count();
  const BigInt M = grid_size(k, n), D = grid_denominator(k, n);
  const Rational lo = Rational(1, D) - epsilon;
  const Rational hi = Rational(M, D) + epsilon;
  // 1 / (kn)^5
  const Rational width(BigInt(1), D * BigInt(static_cast<unsigned long>(k)) *
                                      BigInt(static_cast<unsigned long>(n)));
  const auto table = hit_table(g, t, k, budget);

  GridCertificate cert;
  std::vector<std::pair<BigInt, BigInt>> covered;
  for (std::uint64_t i = 0; i < k; ++i)
    for (Vertex v = 0; v < n; ++v) {
      const Rational x = Rational(1, 2) - table[i][v];
      if (x >= lo && x <= hi) cert.offenders.push_back({i, v});
      const Rational scaled = x * D;
      if (scaled.get_den() == 1 && scaled >= 1 && scaled <= M)
        cert.collision = true;
      // grid indices j with |x - j/D| <= width
      Rational a = (x - width) * D, b = (x + width) * D;
      BigInt first, last;
      mpz_cdiv_q(first.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
      mpz_fdiv_q(last.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
      if (first < 1) first = 1;
      if (last > M) last = M;
      if (first <= last) covered.push_back({first, last});
    }
  cert.certified = cert.offenders.empty();
  std::sort(covered.begin(), covered.end());
  BigInt count = 0, reach = 0;  // reach: largest index counted so far
  for (const auto& [a, b] : covered) {
    const BigInt start = a > reach ? a : reach + 1;
    if (b >= start) {
      count += b - start + 1;
      reach = b;
    }
  }
  cert.bad_indices = count.get_ui();
  return cert;
}

}  // namespace pdlog
