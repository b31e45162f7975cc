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

#include "pdlog/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>

#include "pdlog/errors.hpp"
#include "pdlog/eulerian.hpp"
#include "pdlog/swfp.hpp"
#include "pdlog/undirected.hpp"

namespace pdlog {

std::string_view suite_name(BenchSuite suite) noexcept {
  switch (suite) {
    case BenchSuite::kUndirected: return "undirected";
    case BenchSuite::kEulerian: return "eulerian";
    case BenchSuite::kSwfp: return "swfp";
  }
  return "?";
}

BenchSuite parse_suite(std::string_view name) {
  if (name == "undirected") return BenchSuite::kUndirected;
  if (name == "eulerian") return BenchSuite::kEulerian;
  if (name == "swfp") return BenchSuite::kSwfp;
  throw DomainError("unknown bench suite '" + std::string(name) + "'");
}

namespace {

GeneratedInstance make_instance(const BenchConfig& cfg, std::uint64_t n,
                                std::uint64_t seed) {
  Stream stream = substream(Seed{seed}, "bench/graph/" + std::to_string(n));
  GenParams p;
  p.n = n;
  GenModel model = GenModel::kErdosUndirected;
  switch (cfg.suite) {
    case BenchSuite::kUndirected:
      p.connected = true;
      p.edges = std::min(cfg.edge_factor * n, n * (n - 1) / 2);
      break;
    case BenchSuite::kEulerian:
      model = GenModel::kEulerianCycleUnion;
      p.connected = true;
      p.cycles = cfg.edge_factor;
      p.min_cycle = p.max_cycle = n;
      break;
    case BenchSuite::kSwfp:
      model = GenModel::kLayeredFunnel;
      p.k = cfg.swfp_k;
      p.density = 0.2;
      break;
  }
  if (cfg.model) {
    model = *cfg.model;
    if (model == GenModel::kErdosDirected || model == GenModel::kErdosUndirected)
      p.edges = std::min(cfg.edge_factor * n, n * (n - 1) / 2);
    p.connected = p.connected && model != GenModel::kErdosDirected;
  }
  GeneratedInstance inst = generate_graph(model, p, stream);
  if (model != GenModel::kLayeredFunnel && model != GenModel::kPolyMixing) {
    inst.s = 0;
    inst.t = static_cast<Vertex>(n - 1);
  }
  return inst;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (std::uint64_t n : cfg.sizes)
    for (std::uint64_t seed : cfg.seeds) {
      BenchRow row;
      row.suite = suite_name(cfg.suite);
      row.n = n;
      row.seed = seed;
      const auto start = std::chrono::steady_clock::now();
      try {
        const GeneratedInstance inst = make_instance(cfg, n, seed);
        row.m = inst.graph.edge_count();
        Counters c;
        switch (cfg.suite) {
          case BenchSuite::kUndirected:
            c = find_path_undirected(inst.graph, inst.s, inst.t, seed)
                    .trace.counters;
            break;
          case BenchSuite::kEulerian: {
            EulerianOptions opts;
            opts.membership = cfg.membership;
            c = find_path_eulerian(inst.graph, inst.s, inst.t, seed, opts)
                    .trace.counters;
            break;
          }
          case BenchSuite::kSwfp: {
            SwfpOptions opts;
            opts.estimator = EstimatorConfig::practical(Rational(1, 10),
                                                        Rational(1, 1000));
            c = solve_swfp({inst.graph, inst.s, inst.t, cfg.swfp_k}, opts,
                           seed)
                    .counters;
            break;
          }
        }
        row.walk_steps = c.walk_steps;
        row.connectivity_calls = c.connectivity_calls;
        row.orbit_steps = c.orbit_steps;
      } catch (const Error& e) {
        row.status = error_name(e.code());
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      rows.push_back(row);
    }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool with_wall) {
  std::string out = "suite,n,m,seed,walk_steps,connectivity_calls,orbit_steps,";
  out += with_wall ? "wall_ms,status\n" : "status\n";
  for (const auto& r : rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out += r.suite + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) +
           ',' + std::to_string(r.seed) + ',' + std::to_string(r.walk_steps) +
           ',' + std::to_string(r.connectivity_calls) + ',' +
           std::to_string(r.orbit_steps) + ',';
    if (with_wall) out += ms + std::string(",");
    out += r.status + '\n';
  }
  return out;
}

double loglog_slope(const std::vector<double>& x,
                    const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw DomainError("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = k * sxx - sx * sx;
  if (den == 0) throw DomainError("slope fit needs two distinct sizes");
  return (k * sxy - sx * sy) / den;
}

std::optional<double> walk_step_slope(const std::vector<BenchRow>& rows) {
  std::map<std::uint64_t, std::vector<double>> by_n;
  for (const auto& r : rows)
    if (r.status == "ok" && r.walk_steps > 0)
      by_n[r.n].push_back(static_cast<double>(r.walk_steps));
  if (by_n.size() < 2) return std::nullopt;
  std::vector<double> xs, ys;
  for (auto& [n, v] : by_n) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    xs.push_back(static_cast<double>(n));
    ys.push_back(v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2);
  }
  return loglog_slope(xs, ys);
}

}  // namespace pdlog
