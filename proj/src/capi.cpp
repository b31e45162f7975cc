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

#include "pdlog/pdlog.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdlog/bench.hpp"
#include "pdlog/budget.hpp"
#include "pdlog/digest.hpp"
#include "pdlog/errors.hpp"
#include "pdlog/eulerian.hpp"
#include "pdlog/generators.hpp"
#include "pdlog/graph.hpp"
#include "pdlog/oracles.hpp"
#include "pdlog/reduction.hpp"
#include "pdlog/repro.hpp"
#include "pdlog/runners.hpp"
#include "pdlog/swfp.hpp"
#include "pdlog/undirected.hpp"
#include "pdlog/walk.hpp"

using json = nlohmann::json;

struct pdlog_graph {
  pdlog::Graph g;
};

struct pdlog_text {
  std::string s;
};

struct pdlog_result {
  bool success = false;
  std::vector<std::uint32_t> vertices;
  std::vector<std::uint32_t> edges;
  std::string diagnostics;
  std::string trace;
  std::uint64_t peak = 0;
};

namespace {

thread_local std::string last_error;

template <class F>
pdlog_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return PDLOG_OK;
  } catch (const pdlog::Error& e) {
    last_error = e.what();
    return static_cast<pdlog_status>(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("bad JSON: ") + e.what();
    return PDLOG_E_DOMAIN;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PDLOG_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PDLOG_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw pdlog::DomainError(std::string(what) + " is null");
}

pdlog_text* make_text(std::string s) { return new pdlog_text{std::move(s)}; }

pdlog_options defaults() {
  pdlog_options o;
  pdlog_options_init(&o);
  return o;
}

pdlog::EstimatorConfig estimator(const pdlog::Graph& g,
                                 const pdlog_options& o,
                                 const pdlog::OracleBudget& budget) {
  if (o.paper_mode)
    return pdlog::EstimatorConfig::paper(o.k, g.vertex_count(), budget);
  return pdlog::EstimatorConfig::practical(
      pdlog::parse_rational(o.eps ? o.eps : "1/50"),
      pdlog::parse_rational(o.delta ? o.delta : "1/10000"));
}

pdlog::MembershipMode membership(const pdlog_options& o) {
  return o.membership ? pdlog::parse_membership(o.membership)
                      : pdlog::MembershipMode::kOrbitMin;
}

pdlog::SwfpOptions swfp_options(const pdlog::Graph& g, const pdlog_options& o,
                                pdlog::WorkspaceMeter* meter) {
  pdlog::SwfpOptions so;
  so.budget = pdlog::OracleBudget::from_env();
  so.exact = o.exact != 0;
  so.certify = o.certify != 0;
  if (!so.exact) so.estimator = estimator(g, o, so.budget);
  so.meter = meter;
  return so;
}

pdlog::TokenSearch search(const pdlog_options& o) {
  pdlog::TokenSearch ts;
  if (o.reps) ts.amplify.reps = o.reps;
  ts.amplify.streaming = o.streaming != 0;
  if (o.trials_per_candidate) ts.trials_per_candidate = o.trials_per_candidate;
  if (o.max_candidates) ts.max_candidates = o.max_candidates;
  return ts;
}

void fill_counters(json& d, const pdlog::Counters& c) {
  d["walk_steps"] = c.walk_steps;
  d["walks"] = c.walks;
  d["connectivity_calls"] = c.connectivity_calls;
  d["estimator_calls"] = c.estimator_calls;
  d["orbit_steps"] = c.orbit_steps;
  d["degenerate_steps"] = c.degenerate_steps;
}

void fill_path(pdlog_result& r, const pdlog::Path& p) {
  r.vertices.assign(p.vertices.begin(), p.vertices.end());
  r.edges.assign(p.edge_ids.begin(), p.edge_ids.end());
}

pdlog_result* swfp_result(const pdlog::SolveReport& rep,
                          const pdlog::SwfpOptions& so,
                          const pdlog::WorkspaceMeter& meter) {
  auto r = std::make_unique<pdlog_result>();
  r->success = rep.success;
  fill_path(*r, rep.path);
  json d;
  d["algorithm"] = "swfp";
  d["success"] = rep.success;
  d["threshold_index"] = rep.threshold.index.get_str();
  d["grid"] = rep.threshold.grid.get_str();
  d["denominator"] = rep.threshold.denominator.get_str();
  d["stalls"] = rep.stalls;
  if (so.exact || so.certify) d["grid_collision"] = rep.grid_collision;
  d["estimator"] = so.exact ? "exact"
                            : std::string(pdlog::estimator_mode_name(
                                  so.estimator.mode));
  if (!so.exact) {
    d["samples"] = so.estimator.samples;
    d["eps"] = pdlog::to_fraction_string(so.estimator.epsilon);
    d["delta"] = pdlog::to_fraction_string(so.estimator.delta);
  }
  fill_counters(d, rep.counters);
  d["warnings"] = rep.warnings;
  r->diagnostics = d.dump();
  r->peak = meter.peak_words();
  return r.release();
}

pdlog_result* walk_result(const char* alg, const pdlog::SolveResult& res,
                          const pdlog::WorkspaceMeter& meter) {
  auto r = std::make_unique<pdlog_result>();
  r->success = true;
  fill_path(*r, res.path);
  json d;
  d["algorithm"] = alg;
  d["success"] = true;
  d["passes"] = res.trace.passes;
  d["moves"] = res.trace.moves.size();
  fill_counters(d, res.trace.counters);
  r->diagnostics = d.dump();
  for (const auto& m : res.trace.moves) {
    json line;
    line["move"] = m.move;
    line["v_cur"] = m.from;
    line["next"] = m.to;
    line["sequence"] = m.sequence;
    r->trace += line.dump() + "\n";
  }
  r->peak = meter.peak_words();
  return r.release();
}

std::unique_ptr<pdlog::Runner> make_runner(const pdlog::Graph& g,
                                           std::string_view alg,
                                           const pdlog_options& o) {
  if (alg == "swfp")
    return std::make_unique<pdlog::SwfpRunner>(g, o.s, o.t, o.k,
                                               swfp_options(g, o, nullptr));
  if (alg == "undirected")
    return std::make_unique<pdlog::UndirectedRunner>(g, o.s, o.t);
  if (alg == "eulerian") {
    pdlog::EulerianOptions eo;
    eo.membership = membership(o);
    return std::make_unique<pdlog::EulerianRunner>(g, o.s, o.t, eo);
  }
  throw pdlog::DomainError("unknown algorithm '" + std::string(alg) + "'");
}

json stats_json(const pdlog::PseudoDetStats& st) {
  json j;
  j["trials"] = st.trials;
  j["distinct"] = st.distinct;
  j["modal_digest"] = st.modal_digest;
  j["modal_count"] = st.modal_count;
  j["modal_frequency"] = st.modal_frequency;
  j["entropy_bits"] = st.entropy_bits;
  j["modal_output"] = st.modal_output;
  return j;
}

pdlog::Restriction walk_restriction(const pdlog::Graph& g, std::uint32_t a,
                                    std::uint32_t b, std::uint32_t min_kept,
                                    std::uint32_t prefix,
                                    std::unique_ptr<pdlog::DeletedCycles>& dc) {
  pdlog::Restriction r = pdlog::Restriction::vertices_from(min_kept, a, b);
  if (prefix) {
    dc = std::make_unique<pdlog::DeletedCycles>(
        g, pdlog::MembershipMode::kTable);
    r.deleted_prefix = prefix;
    r.cycles = dc.get();
  }
  return r;
}

}  // namespace

extern "C" {

void pdlog_options_init(pdlog_options* opts) {
  if (!opts) return;
  std::memset(opts, 0, sizeof *opts);
  opts->k = 1;
}

const char* pdlog_version(void) { return "1.0.0"; }

const char* pdlog_generator_version(void) {
  return pdlog::kGeneratorVersion.data();
}

const char* pdlog_status_name(pdlog_status status) {
  if (status == PDLOG_OK) return "Ok";
  return pdlog::error_name(static_cast<pdlog::ErrorCode>(status)).data();
}

const char* pdlog_last_error(void) { return last_error.c_str(); }

const char* pdlog_text_data(const pdlog_text* text) {
  return text ? text->s.c_str() : "";
}
size_t pdlog_text_size(const pdlog_text* text) {
  return text ? text->s.size() : 0;
}
void pdlog_text_free(pdlog_text* text) { delete text; }

pdlog_status pdlog_sha256(const char* data, size_t size, pdlog_text** out) {
  return guard([&] {
    if (size) require(data, "data");
    require(out, "out");
    *out = make_text(pdlog::sha256_hex({data ? data : "", size}));
  });
}

pdlog_status pdlog_graph_load_file(const char* path, pdlog_graph** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new pdlog_graph{pdlog::load_graph_file(path)};
  });
}

pdlog_status pdlog_graph_parse(const char* text, size_t size,
                               pdlog_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new pdlog_graph{pdlog::load_graph_text({text, size})};
  });
}

pdlog_status pdlog_graph_generate(const char* model, const char* params_json,
                                  uint64_t seed, pdlog_graph** out,
                                  uint32_t* s, uint32_t* t) {
  return guard([&] {
    require(model, "model");
    require(out, "out");
    pdlog::GenParams p;
    if (params_json && *params_json) {
      const json j = json::parse(params_json);
      for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        if (key == "n") p.n = it->get<std::uint64_t>();
        else if (key == "density") p.density = it->get<double>();
        else if (key == "edges") p.edges = it->get<std::uint64_t>();
        else if (key == "connected") p.connected = it->get<bool>();
        else if (key == "cycles") p.cycles = it->get<std::uint64_t>();
        else if (key == "min_cycle") p.min_cycle = it->get<std::uint64_t>();
        else if (key == "max_cycle") p.max_cycle = it->get<std::uint64_t>();
        else if (key == "k") p.k = it->get<std::uint64_t>();
        else if (key == "back_density") p.back_density = it->get<double>();
        else if (key == "attempts") p.attempts = it->get<std::uint64_t>();
        else throw pdlog::DomainError("unknown generator parameter '" + key + "'");
      }
    }
    pdlog::Stream stream = pdlog::substream(pdlog::Seed{seed}, "gen");
    auto inst = pdlog::generate_graph(pdlog::parse_model(model), p, stream);
    if (s) *s = inst.s;
    if (t) *t = inst.t;
    *out = new pdlog_graph{std::move(inst.graph)};
  });
}

void pdlog_graph_free(pdlog_graph* g) { delete g; }

size_t pdlog_graph_vertex_count(const pdlog_graph* g) {
  return g ? g->g.vertex_count() : 0;
}
size_t pdlog_graph_edge_count(const pdlog_graph* g) {
  return g ? g->g.edge_count() : 0;
}
const char* pdlog_graph_kind(const pdlog_graph* g) {
  return g ? pdlog::kind_name(g->g.kind()).data() : "";
}

pdlog_status pdlog_graph_serialize(const pdlog_graph* g, pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = make_text(pdlog::serialize(g->g));
  });
}

pdlog_status pdlog_graph_digest(const pdlog_graph* g, pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = make_text(pdlog::graph_digest(g->g));
  });
}

pdlog_status pdlog_instance_size(const pdlog_graph* g, uint32_t s, uint32_t t,
                                 uint64_t k, uint64_t* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    g->g.check_vertex(s);
    g->g.check_vertex(t);
    *out = pdlog::instance_size(g->g, s, t, k);
  });
}

pdlog_status pdlog_solve(const pdlog_graph* g, const char* alg,
                         const pdlog_options* opts, pdlog_result** out) {
  return guard([&] {
    require(g, "graph");
    require(alg, "algorithm");
    require(out, "out");
    const pdlog_options o = opts ? *opts : defaults();
    const std::string_view a = alg;
    pdlog::WorkspaceMeter meter;
    if (a == "swfp") {
      const auto so = swfp_options(g->g, o, &meter);
      const auto rep = pdlog::solve_swfp({g->g, o.s, o.t, o.k}, so, o.seed);
      *out = swfp_result(rep, so, meter);
    } else if (a == "undirected") {
      pdlog::UndirectedOptions uo;
      uo.meter = &meter;
      *out = walk_result(alg, pdlog::find_path_undirected(g->g, o.s, o.t,
                                                          o.seed, uo),
                         meter);
    } else if (a == "eulerian") {
      pdlog::EulerianOptions eo;
      eo.meter = &meter;
      eo.membership = membership(o);
      *out = walk_result(
          alg, pdlog::find_path_eulerian(g->g, o.s, o.t, o.seed, eo), meter);
    } else {
      throw pdlog::DomainError("unknown algorithm '" + std::string(a) + "'");
    }
  });
}

pdlog_status pdlog_replay_swfp(const pdlog_graph* g, const pdlog_options* opts,
                               const char* index, uint64_t seed2,
                               pdlog_result** out) {
  return guard([&] {
    require(g, "graph");
    require(index, "index");
    require(out, "out");
    const pdlog_options o = opts ? *opts : defaults();
    pdlog::BigInt idx;
    if (idx.set_str(index, 10) != 0)
      throw pdlog::DomainError("bad threshold index '" + std::string(index) +
                               "'");
    pdlog::WorkspaceMeter meter;
    const auto so = swfp_options(g->g, o, &meter);
    const auto rep = pdlog::replay_swfp({g->g, o.s, o.t, o.k}, so, idx, seed2);
    *out = swfp_result(rep, so, meter);
  });
}

int pdlog_result_success(const pdlog_result* r) { return r && r->success; }
size_t pdlog_result_vertex_count(const pdlog_result* r) {
  return r ? r->vertices.size() : 0;
}
const uint32_t* pdlog_result_vertices(const pdlog_result* r) {
  return r ? r->vertices.data() : nullptr;
}
size_t pdlog_result_edge_count(const pdlog_result* r) {
  return r ? r->edges.size() : 0;
}
const uint32_t* pdlog_result_edges(const pdlog_result* r) {
  return r ? r->edges.data() : nullptr;
}
const char* pdlog_result_diagnostics(const pdlog_result* r) {
  return r ? r->diagnostics.c_str() : "";
}
const char* pdlog_result_trace(const pdlog_result* r) {
  return r ? r->trace.c_str() : "";
}
uint64_t pdlog_result_workspace_peak(const pdlog_result* r) {
  return r ? r->peak : 0;
}
void pdlog_result_free(pdlog_result* r) { delete r; }

pdlog_status pdlog_estimate_pk(const pdlog_graph* g, const pdlog_options* opts,
                               uint64_t* hits, uint64_t* samples) {
  return guard([&] {
    require(g, "graph");
    require(hits, "hits");
    require(samples, "samples");
    const pdlog_options o = opts ? *opts : defaults();
    const auto budget = pdlog::OracleBudget::from_env();
    const auto cfg = estimator(g->g, o, budget);
    const pdlog::StreamFamily fam(pdlog::Seed{o.seed}, "estimate");
    const auto est = pdlog::estimate_pk(g->g, o.s, o.t, o.k, cfg, fam);
    *hits = est.hits;
    *samples = est.samples;
  });
}

pdlog_status pdlog_oracle_pk(const pdlog_graph* g, uint32_t s, uint32_t t,
                             uint64_t k, pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = make_text(pdlog::to_fraction_string(
        pdlog::exact_pk(g->g, s, t, k, pdlog::OracleBudget::from_env())));
  });
}

pdlog_status pdlog_oracle_connected(const pdlog_graph* g, uint32_t a,
                                    uint32_t b, uint32_t min_kept,
                                    uint32_t deleted_prefix, int directed,
                                    int* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    pdlog::OracleRestriction r{min_kept, a, b, deleted_prefix};
    *out = pdlog::bfs_connected(g->g, a, b, r, directed != 0,
                                pdlog::OracleBudget::from_env());
  });
}

pdlog_status pdlog_walk_connected(const pdlog_graph* g, uint32_t a, uint32_t b,
                                  uint32_t min_kept, uint32_t deleted_prefix,
                                  uint64_t seed, int* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    std::unique_ptr<pdlog::DeletedCycles> dc;
    const auto r = walk_restriction(g->g, a, b, min_kept, deleted_prefix, dc);
    *out = pdlog::test_connectivity(
        g->g, a, b, r, pdlog::StreamFamily(pdlog::Seed{seed}, "conn"));
  });
}

pdlog_status pdlog_oracle_validate(const pdlog_graph* g,
                                   const uint32_t* vertices,
                                   size_t vertex_count, const uint32_t* edges,
                                   size_t edge_count, uint32_t s, uint32_t t,
                                   int* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    if (vertex_count) require(vertices, "vertices");
    pdlog::Path p;
    p.vertices.assign(vertices, vertices + vertex_count);
    if (edges) p.edge_ids.assign(edges, edges + edge_count);
    *out = pdlog::validate_path(g->g, p, s, t);
  });
}

pdlog_status pdlog_oracle_enumerate(const pdlog_graph* g, uint32_t s,
                                    uint32_t t, uint64_t max_len,
                                    pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    std::string text;
    for (const auto& walk : pdlog::enumerate_st_paths(
             g->g, s, t, max_len, pdlog::OracleBudget::from_env())) {
      pdlog::Path p;
      p.vertices = walk;
      text += pdlog::format_path(p);
    }
    *out = make_text(std::move(text));
  });
}

pdlog_status pdlog_oracle_grid(const pdlog_graph* g, uint32_t t, uint64_t k,
                               const char* eps, pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    const pdlog::Rational e = pdlog::parse_rational(eps ? eps : "1/50");
    const auto cert = pdlog::certify_grid(g->g, t, k, e,
                                          pdlog::OracleBudget::from_env());
    json j;
    j["certified"] = cert.certified;
    j["collision"] = cert.collision;
    j["bad_indices"] = cert.bad_indices;
    j["grid"] = pdlog::grid_size(k, g->g.vertex_count()).get_str();
    j["eps"] = pdlog::to_fraction_string(e);
    json off = json::array();
    for (auto [i, v] : cert.offenders) off.push_back({i, v});
    j["offenders"] = off;
    *out = make_text(j.dump());
  });
}

pdlog_status pdlog_verify(const pdlog_graph* g, const char* alg,
                          const pdlog_options* opts, uint64_t trials,
                          pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(alg, "algorithm");
    require(out, "out");
    const pdlog_options o = opts ? *opts : defaults();
    const auto runner = make_runner(g->g, alg, o);
    json j = stats_json(pdlog::measure(*runner, trials, o.seed));
    j["algorithm"] = alg;
    if (std::string_view(alg) == "swfp") {
      const auto& sr = static_cast<const pdlog::SwfpRunner&>(*runner);
      j["grid"] = sr.grid().get_str();
      j["token_bits"] = sr.token_bits();
    }
    *out = make_text(j.dump());
  });
}

pdlog_status pdlog_coin_entropy(uint64_t trials, uint64_t seed,
                                pdlog_text** out) {
  return guard([&] {
    require(out, "out");
    auto coin = [](std::uint64_t s) -> std::string {
      pdlog::Stream st = pdlog::substream(pdlog::Seed{s}, "coin");
      return st.next_bits(1) ? "1" : "0";
    };
    json j = stats_json(pdlog::measure(coin, trials, seed));
    j["algorithm"] = "coin";
    *out = make_text(j.dump());
  });
}

pdlog_status pdlog_token_make(const pdlog_graph* g, const char* alg,
                              const pdlog_options* opts, pdlog_text** hex,
                              uint64_t* bits) {
  return guard([&] {
    require(g, "graph");
    require(alg, "algorithm");
    require(hex, "hex");
    const pdlog_options o = opts ? *opts : defaults();
    const auto runner = make_runner(g->g, alg, o);
    const auto token = pdlog::algorithm_A(*runner, o.seed, search(o));
    *hex = make_text(pdlog::to_hex(token.bytes));
    if (bits) *bits = token.bits;
  });
}

pdlog_status pdlog_token_use(const pdlog_graph* g, const char* alg,
                             const pdlog_options* opts, const char* hex,
                             pdlog_text** output) {
  return guard([&] {
    require(g, "graph");
    require(alg, "algorithm");
    require(hex, "hex");
    require(output, "output");
    const pdlog_options o = opts ? *opts : defaults();
    const auto runner = make_runner(g->g, alg, o);
    const pdlog::ReproToken token{pdlog::from_hex(hex), runner->token_bits()};
    *output = make_text(
        pdlog::algorithm_B(*runner, token, o.seed, search(o).amplify));
  });
}

pdlog_status pdlog_copies(const pdlog_graph* g, const char* alg,
                          const pdlog_options* opts, uint64_t copies,
                          pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(alg, "algorithm");
    require(out, "out");
    const pdlog_options o = opts ? *opts : defaults();
    const auto runner = make_runner(g->g, alg, o);
    const auto c = pdlog::emit_copies(*runner, copies, o.seed, search(o));
    json j;
    j["token"] = pdlog::to_hex(c.token.bytes);
    j["token_bits"] = c.token.bits;
    j["outputs"] = c.outputs;
    j["all_equal"] = c.all_equal;
    bool valid = true;
    for (const auto& s : c.outputs) valid &= runner->valid_output(s);
    j["all_valid"] = valid;
    *out = make_text(j.dump());
  });
}

pdlog_status pdlog_reduce(const pdlog_graph* g, uint32_t s, uint32_t t,
                          uint64_t k, uint64_t x, pdlog_graph** out,
                          pdlog_text** sidecar) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto li = pdlog::build_layered(g->g, s, t, k, x,
                                   pdlog::OracleBudget::from_env());
    if (sidecar) {
      json j;
      j["n"] = li.n;
      j["layers"] = li.layers;
      j["k"] = li.k;
      j["x"] = li.x;
      j["walk_length"] = li.walk_length;
      j["s"] = li.s;
      j["t"] = li.t;
      j["source"] = li.source;
      j["sink"] = li.sink;
      j["per_layer"] = li.per_layer;
      j["first_wrap_edge"] = li.first_wrap_edge();
      j["codec"] = "id = layer * n + v";
      *sidecar = make_text(j.dump());
    }
    *out = new pdlog_graph{std::move(li.gprime)};
  });
}

pdlog_status pdlog_project(const pdlog_graph* g, uint32_t s, uint32_t t,
                           uint64_t k, uint64_t x, const uint32_t* vertices,
                           size_t count, pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    if (count) require(vertices, "vertices");
    const auto li = pdlog::build_layered(g->g, s, t, k, x,
                                         pdlog::OracleBudget::from_env());
    pdlog::Path p;
    p.vertices.assign(vertices, vertices + count);
    std::string text;
    for (const auto& piece : pdlog::project_path(li, p))
      text += pdlog::format_path(piece);
    *out = make_text(std::move(text));
  });
}

pdlog_status pdlog_cycles(const pdlog_graph* g, uint64_t k, pdlog_text** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    auto line = [&](const std::vector<pdlog::EdgeId>& orbit) {
      std::string s = "edges";
      for (auto e : orbit) s += ' ' + std::to_string(e);
      s += " | vertices";
      for (auto e : orbit) s += ' ' + std::to_string(g->g.edge(e).tail);
      return s + '\n';
    };
    std::string text;
    if (k == 0) {
      for (const auto& orbit : pdlog::orbit_decomposition(g->g))
        text += line(orbit);
    } else {
      if (k > g->g.edge_count())
        throw pdlog::DomainError("cycle index " + std::to_string(k) +
                                 " outside [1, m]");
      text = line(pdlog::orbit(g->g, static_cast<pdlog::EdgeId>(k - 1)));
    }
    *out = make_text(std::move(text));
  });
}

pdlog_status pdlog_bench(const char* suite, const uint64_t* sizes,
                         size_t size_count, const uint64_t* seeds,
                         size_t seed_count, uint64_t edge_factor,
                         const char* model, pdlog_text** csv,
                         pdlog_text** wall, double* slope, int* has_slope) {
  return guard([&] {
    require(suite, "suite");
    require(csv, "csv");
    pdlog::BenchConfig cfg;
    cfg.suite = pdlog::parse_suite(suite);
    if (size_count) require(sizes, "sizes");
    cfg.sizes.assign(sizes, sizes + size_count);
    if (seed_count) {
      require(seeds, "seeds");
      cfg.seeds.assign(seeds, seeds + seed_count);
    }
    if (edge_factor) cfg.edge_factor = edge_factor;
    if (model) cfg.model = pdlog::parse_model(model);
    const auto rows = pdlog::run_bench(cfg);
    *csv = make_text(pdlog::bench_csv(rows, false));
    if (wall) {
      json ms = json::array();
      for (const auto& r : rows) ms.push_back(r.wall_ms);
      *wall = make_text(ms.dump());
    }
    const auto fit = pdlog::walk_step_slope(rows);
    if (has_slope) *has_slope = fit.has_value();
    if (slope) *slope = fit.value_or(0.0);
  });
}

}  // extern "C"
