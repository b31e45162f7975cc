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

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdlog/pdlog.h"

using json = nlohmann::json;

namespace {

struct Failure {
  pdlog_status status;
  std::string message;
};

void check(pdlog_status st) {
  if (st != PDLOG_OK) throw Failure{st, pdlog_last_error()};
}

std::string take(pdlog_text* t) {
  std::string s(pdlog_text_data(t), pdlog_text_size(t));
  pdlog_text_free(t);
  return s;
}

std::string sha256(const std::string& s) {
  pdlog_text* t = nullptr;
  check(pdlog_sha256(s.data(), s.size(), &t));
  return take(t);
}

std::vector<uint32_t> parse_ids(const std::string& text) {
  std::vector<uint32_t> ids;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v > 0xffffffffUL)
      throw CLI::ValidationError("bad vertex or edge id '" + tok + "'");
    ids.push_back(static_cast<uint32_t>(v));
  }
  return ids;
}

struct GraphHandle {
  pdlog_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { pdlog_graph_free(g); }
};

struct ResultHandle {
  pdlog_result* r = nullptr;
  ResultHandle() = default;
  ResultHandle(const ResultHandle&) = delete;
  ResultHandle& operator=(const ResultHandle&) = delete;
  ~ResultHandle() { pdlog_result_free(r); }
};

struct Common {
  std::string graph;
  uint64_t seed = 0;
  std::string stats;
  unsigned jobs = 1;
  std::string mode = "practical";
  std::string eps = "1/50";
  std::string delta = "1/10000";
};

struct Solver {
  std::string alg;
  uint32_t s = 0, t = 0;
  uint64_t k = 1;
  bool exact = false;
  bool certify = false;
  std::string membership = "orbit-min";
  uint64_t reps = 15;
  uint64_t trials_per_candidate = 32;
  uint64_t max_candidates = 40;
  bool streaming = false;
};

// Everything a subcommand reports besides stdout.
struct Record {
  std::string subcommand;
  json parameters = json::object();
  std::string graph_digest;
  uint64_t workspace_peak = 0;
  json diagnostics = json::object();
};

class Cli {
 public:
  Cli() { build(); }

  int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    std::string status = "Ok";
    try {
      app_.parse(argc, argv);
      code = dispatch();
    } catch (const CLI::CallForHelp& e) {
      return app_.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
      return app_.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app_.exit(e);
    } catch (const CLI::ParseError& e) {
      app_.exit(e);
      status = "Usage";
      code = 2;
    } catch (const Failure& f) {
      status = pdlog_status_name(f.status);
      std::cerr << "pdlog: " << status << ": " << f.message << "\n";
      code = exit_code(f.status);
      out_.clear();
    }
    if (code == 1 && status == "Ok") status = unsuccessful_;
    std::fwrite(out_.data(), 1, out_.size(), stdout);
    std::fflush(stdout);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    emit_record(status, ms);
    return code;
  }

 private:
  static int exit_code(pdlog_status st) {
    switch (st) {
      case PDLOG_E_PARSE:
      case PDLOG_E_DOMAIN:
        return 2;
      default:
        return 1;
    }
  }

  void add_common(CLI::App* sub, bool graph_required) {
    auto* g = sub->add_option("--graph", common_.graph, "edge-list file");
    if (graph_required) g->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", common_.seed, "u64 seed");
    sub->add_option("--stats", common_.stats, "append RunRecord here");
    sub->add_option("--jobs", common_.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--mode", common_.mode, "estimator constants")
        ->check(CLI::IsMember({"paper", "practical"}));
    sub->add_option("--eps", common_.eps, "estimator error (p/q or decimal)");
    sub->add_option("--delta", common_.delta, "estimator failure rate");
  }

  void add_solver(CLI::App* sub, bool with_alg) {
    if (with_alg)
      sub->add_option("--alg", solver_.alg, "swfp | undirected | eulerian")
          ->required()
          ->check(CLI::IsMember({"swfp", "undirected", "eulerian"}));
    sub->add_option("--s", solver_.s, "source")->required();
    sub->add_option("--t", solver_.t, "target")->required();
    sub->add_option("--k", solver_.k, "walk length (swfp)");
    sub->add_flag("--exact", solver_.exact, "exact probabilities (swfp)");
    sub->add_flag("--certify", solver_.certify,
                  "check the threshold grid exactly (swfp)");
    sub->add_option("--membership", solver_.membership,
                    "cycle membership test (eulerian)")
        ->check(CLI::IsMember({"scan", "orbit-min", "table"}));
  }

  void add_amplify(CLI::App* sub) {
    sub->add_option("--reps", solver_.reps, "amplification repetitions");
    sub->add_option("--trials-per-candidate", solver_.trials_per_candidate);
    sub->add_option("--max-candidates", solver_.max_candidates);
    sub->add_flag("--streaming", solver_.streaming,
                  "recompute amplified bits one at a time");
  }

  void build() {
    app_.description("pseudo-deterministic log-space path finding");
    app_.require_subcommand(1);
    app_.failure_message(CLI::FailureMessage::help);

    auto* gen = app_.add_subcommand("gen", "generate an instance");
    add_common(gen, false);
    gen->add_option("--model", gen_model_,
                    "erdos_directed | erdos_undirected | "
                    "eulerian_cycle_union | layered_funnel | poly_mixing")
        ->required();
    gen->add_option("--n", gen_.n, "vertices")->required();
    gen->add_option("--density", gen_.density);
    gen->add_option("--edges", gen_.edges);
    gen->add_flag("--connected", gen_.connected);
    gen->add_option("--cycles", gen_.cycles);
    gen->add_option("--min-cycle", gen_.min_cycle);
    gen->add_option("--max-cycle", gen_.max_cycle);
    gen->add_option("--k", gen_.k);
    gen->add_option("--back-density", gen_.back_density);

    auto* solve = app_.add_subcommand("solve", "find an s-t path");
    add_common(solve, true);
    add_solver(solve, true);
    solve->add_flag("--emit-edges", emit_edges_, "append edge ids");
    solve->add_option("--trace", trace_, "write per-move JSON lines here");

    auto* replay = app_.add_subcommand(
        "replay", "swfp with a fixed threshold index and walk seed");
    add_common(replay, true);
    add_solver(replay, false);
    replay->add_option("--index", index_, "threshold index in [1, (kn)^2]")
        ->required();
    replay->add_flag("--emit-edges", emit_edges_);

    auto* verify = app_.add_subcommand("verify", "repeat a solver, summarize");
    add_common(verify, true);
    add_solver(verify, true);
    verify->add_option("--trials", trials_, "independent runs");

    auto* entropy = app_.add_subcommand(
        "entropy", "plug-in output entropy; without --graph, a fair coin");
    add_common(entropy, false);
    entropy->add_option("--alg", solver_.alg)
        ->check(CLI::IsMember({"swfp", "undirected", "eulerian"}));
    entropy->add_option("--s", solver_.s);
    entropy->add_option("--t", solver_.t);
    entropy->add_option("--k", solver_.k);
    entropy->add_flag("--exact", solver_.exact);
    entropy->add_option("--trials", trials_);

    auto* reduce = app_.add_subcommand("reduce", "build the layered graph");
    add_common(reduce, true);
    reduce->add_option("--s", solver_.s)->required();
    reduce->add_option("--t", solver_.t)->required();
    reduce->add_option("--k", solver_.k)->required();
    reduce->add_option("--x", x_, "instance size (default: encoded length)");
    reduce->add_option("--sidecar", sidecar_, "write layer metadata here");
    reduce->add_option("--project", project_,
                       "layered path to map back instead of building");

    auto* oracle = app_.add_subcommand("oracle", "exact reference answers");
    oracle->require_subcommand(1);
    auto* pk = oracle->add_subcommand("pk", "k-step hit probability");
    add_common(pk, true);
    pk->add_option("--s", solver_.s)->required();
    pk->add_option("--t", solver_.t)->required();
    pk->add_option("--k", solver_.k)->required();
    pk->add_flag("--estimate", estimate_, "Monte-Carlo hits/samples instead");
    auto* conn = oracle->add_subcommand("connected", "restricted BFS");
    add_common(conn, true);
    conn->add_option("--a", a_)->required();
    conn->add_option("--b", b_)->required();
    conn->add_option("--min-kept", min_kept_, "drop vertex ids below this");
    conn->add_option("--deleted-prefix", deleted_prefix_,
                     "drop the edges of the first cycles");
    conn->add_flag("--directed", directed_);
    conn->add_flag("--walk", walk_, "use the random-walk test");
    auto* validate = oracle->add_subcommand("validate", "check an s-t path");
    add_common(validate, true);
    validate->add_option("--s", solver_.s)->required();
    validate->add_option("--t", solver_.t)->required();
    validate->add_option("--path", path_, "space-separated vertices")
        ->required();
    validate->add_option("--edges", edges_, "space-separated edge ids");
    auto* enumerate = oracle->add_subcommand("enumerate", "all short walks");
    add_common(enumerate, true);
    enumerate->add_option("--s", solver_.s)->required();
    enumerate->add_option("--t", solver_.t)->required();
    enumerate->add_option("--max-len", max_len_)->required();
    auto* grid = oracle->add_subcommand("grid", "threshold grid certificate");
    add_common(grid, true);
    grid->add_option("--t", solver_.t)->required();
    grid->add_option("--k", solver_.k)->required();

    auto* cycles = app_.add_subcommand("cycles", "edge-permutation orbits");
    add_common(cycles, true);
    cycles->add_option("--k", cycle_k_, "print C_k only");

    auto* token = app_.add_subcommand("token", "reproducible tokens");
    token->require_subcommand(1);
    auto* make = token->add_subcommand("make", "search for a good token");
    add_common(make, true);
    add_solver(make, true);
    add_amplify(make);
    auto* use = token->add_subcommand("use", "solve with a token");
    add_common(use, true);
    add_solver(use, true);
    add_amplify(use);
    use->add_option("--token", token_, "hex token ('' for empty)")->required();
    auto* copies = token->add_subcommand("copies", "one token, many outputs");
    add_common(copies, true);
    add_solver(copies, true);
    add_amplify(copies);
    copies->add_option("--copies", copies_, "outputs to emit");

    auto* bench = app_.add_subcommand("bench", "scaling table");
    add_common(bench, false);
    bench->add_option("--suite", suite_)
        ->required()
        ->check(CLI::IsMember({"undirected", "eulerian", "swfp"}));
    bench->add_option("--sizes", sizes_)->delimiter(',');
    bench->add_option("--seeds", seeds_)->delimiter(',');
    bench->add_option("--edge-factor", edge_factor_);
    bench->add_option("--model", bench_model_, "override the generator");
  }

  pdlog_options options() const {
    pdlog_options o;
    pdlog_options_init(&o);
    o.s = solver_.s;
    o.t = solver_.t;
    o.k = solver_.k;
    o.seed = common_.seed;
    o.paper_mode = common_.mode == "paper";
    o.eps = common_.eps.c_str();
    o.delta = common_.delta.c_str();
    o.membership = solver_.membership.c_str();
    o.exact = solver_.exact;
    o.certify = solver_.certify;
    o.reps = solver_.reps;
    o.trials_per_candidate = solver_.trials_per_candidate;
    o.max_candidates = solver_.max_candidates;
    o.streaming = solver_.streaming;
    return o;
  }

  void load(GraphHandle& h) {
    check(pdlog_graph_load_file(common_.graph.c_str(), &h.g));
    pdlog_text* d = nullptr;
    check(pdlog_graph_digest(h.g, &d));
    rec_.graph_digest = take(d);
    rec_.parameters["n"] = pdlog_graph_vertex_count(h.g);
    rec_.parameters["m"] = pdlog_graph_edge_count(h.g);
    rec_.parameters["kind"] = pdlog_graph_kind(h.g);
  }

  void solver_params() {
    auto& p = rec_.parameters;
    if (!solver_.alg.empty()) p["alg"] = solver_.alg;
    p["s"] = solver_.s;
    p["t"] = solver_.t;
    if (solver_.alg.empty() || solver_.alg == "swfp") {
      p["k"] = solver_.k;
      p["mode"] = common_.mode;
      p["eps"] = common_.eps;
      p["delta"] = common_.delta;
      if (solver_.exact) p["exact"] = true;
      if (solver_.certify) p["certify"] = true;
    }
    if (solver_.alg == "eulerian") p["membership"] = solver_.membership;
  }

  void print_result(const pdlog_result* r) {
    rec_.workspace_peak = pdlog_result_workspace_peak(r);
    rec_.diagnostics = json::parse(pdlog_result_diagnostics(r));
    if (!pdlog_result_success(r)) {
      unsuccessful_ = "Unsuccessful";
      throw Unsuccessful{};
    }
    const uint32_t* v = pdlog_result_vertices(r);
    for (size_t i = 0; i < pdlog_result_vertex_count(r); ++i) {
      if (i) out_ += ' ';
      out_ += std::to_string(v[i]);
    }
    if (emit_edges_) {
      const uint32_t* e = pdlog_result_edges(r);
      out_ += " |";
      for (size_t i = 0; i < pdlog_result_edge_count(r); ++i)
        out_ += ' ' + std::to_string(e[i]);
    }
    out_ += '\n';
  }

  struct Unsuccessful {};

  int dispatch() {
    try {
      return run();
    } catch (const Unsuccessful&) {
      std::cerr << "pdlog: no path (estimator stalled)\n";
      return 1;
    }
  }

  int run() {
    rec_.parameters["jobs"] = common_.jobs;
    auto* sub = app_.get_subcommands().front();
    rec_.subcommand = sub->get_name();
    if (rec_.subcommand == "gen") return cmd_gen();
    if (rec_.subcommand == "solve") return cmd_solve();
    if (rec_.subcommand == "replay") return cmd_replay();
    if (rec_.subcommand == "verify") return cmd_verify();
    if (rec_.subcommand == "entropy") return cmd_entropy();
    if (rec_.subcommand == "reduce") return cmd_reduce();
    if (rec_.subcommand == "cycles") return cmd_cycles();
    if (rec_.subcommand == "bench") return cmd_bench();
    auto* leaf = sub->get_subcommands().front();
    rec_.subcommand += " " + leaf->get_name();
    const std::string& name = leaf->get_name();
    if (rec_.subcommand.rfind("oracle", 0) == 0) {
      if (name == "pk") return cmd_pk();
      if (name == "connected") return cmd_connected();
      if (name == "validate") return cmd_validate();
      if (name == "enumerate") return cmd_enumerate();
      return cmd_grid();
    }
    if (name == "make") return cmd_token_make();
    if (name == "use") return cmd_token_use();
    return cmd_copies();
  }

  int cmd_gen() {
    json p;
    p["n"] = gen_.n;
    if (gen_.density >= 0) p["density"] = gen_.density;
    if (gen_.edges) p["edges"] = gen_.edges;
    if (gen_.connected) p["connected"] = true;
    if (gen_.cycles) p["cycles"] = gen_.cycles;
    if (gen_.min_cycle) p["min_cycle"] = gen_.min_cycle;
    if (gen_.max_cycle) p["max_cycle"] = gen_.max_cycle;
    if (gen_.k) p["k"] = gen_.k;
    if (gen_.back_density >= 0) p["back_density"] = gen_.back_density;
    rec_.parameters = p;
    rec_.parameters["model"] = gen_model_;
    rec_.parameters["generator_version"] = pdlog_generator_version();
    GraphHandle h;
    uint32_t s = 0, t = 0;
    check(pdlog_graph_generate(gen_model_.c_str(), p.dump().c_str(),
                               common_.seed, &h.g, &s, &t));
    pdlog_text* d = nullptr;
    check(pdlog_graph_digest(h.g, &d));
    rec_.graph_digest = take(d);
    pdlog_text* text = nullptr;
    check(pdlog_graph_serialize(h.g, &text));
    out_ += "# s " + std::to_string(s) + " t " + std::to_string(t) + "\n";
    out_ += take(text);
    return 0;
  }

  int cmd_solve() {
    GraphHandle h;
    load(h);
    solver_params();
    const pdlog_options o = options();
    ResultHandle r;
    check(pdlog_solve(h.g, solver_.alg.c_str(), &o, &r.r));
    if (!trace_.empty()) {
      std::ofstream f(trace_, std::ios::binary);
      if (!f) throw Failure{PDLOG_E_IO, "cannot write " + trace_};
      f << pdlog_result_trace(r.r);
    }
    print_result(r.r);
    return 0;
  }

  int cmd_replay() {
    GraphHandle h;
    load(h);
    solver_.alg = "swfp";
    solver_params();
    rec_.parameters["index"] = index_;
    const pdlog_options o = options();
    ResultHandle r;
    check(pdlog_replay_swfp(h.g, &o, index_.c_str(), common_.seed, &r.r));
    print_result(r.r);
    return 0;
  }

  int cmd_verify() {
    GraphHandle h;
    load(h);
    solver_params();
    rec_.parameters["trials"] = trials_;
    const pdlog_options o = options();
    pdlog_text* t = nullptr;
    check(pdlog_verify(h.g, solver_.alg.c_str(), &o, trials_, &t));
    const std::string s = take(t);
    rec_.diagnostics = json::parse(s);
    out_ += s + "\n";
    return 0;
  }

  int cmd_entropy() {
    rec_.parameters["trials"] = trials_;
    pdlog_text* t = nullptr;
    if (common_.graph.empty()) {
      if (!solver_.alg.empty())
        throw CLI::RequiredError("--graph is required with --alg");
      rec_.parameters["alg"] = "coin";
      check(pdlog_coin_entropy(trials_, common_.seed, &t));
    } else {
      if (solver_.alg.empty()) throw CLI::RequiredError("--alg");
      GraphHandle h;
      load(h);
      solver_params();
      const pdlog_options o = options();
      check(pdlog_verify(h.g, solver_.alg.c_str(), &o, trials_, &t));
    }
    const json j = json::parse(take(t));
    rec_.diagnostics = j;
    json brief;
    brief["trials"] = j["trials"];
    brief["distinct"] = j["distinct"];
    brief["entropy_bits"] = j["entropy_bits"];
    out_ += brief.dump() + "\n";
    return 0;
  }

  int cmd_reduce() {
    GraphHandle h;
    load(h);
    solver_params();
    rec_.parameters["x"] = x_;
    if (!project_.empty()) {
      const auto verts = parse_ids(project_);
      pdlog_text* t = nullptr;
      check(pdlog_project(h.g, solver_.s, solver_.t, solver_.k, x_,
                          verts.data(), verts.size(), &t));
      out_ += take(t);
      return 0;
    }
    GraphHandle layered;
    pdlog_text* side = nullptr;
    check(pdlog_reduce(h.g, solver_.s, solver_.t, solver_.k, x_, &layered.g,
                       &side));
    const std::string sidecar = take(side);
    rec_.diagnostics = json::parse(sidecar);
    if (!sidecar_.empty()) {
      std::ofstream f(sidecar_, std::ios::binary);
      if (!f) throw Failure{PDLOG_E_IO, "cannot write " + sidecar_};
      f << sidecar << "\n";
    }
    pdlog_text* text = nullptr;
    check(pdlog_graph_serialize(layered.g, &text));
    out_ += take(text);
    return 0;
  }

  int cmd_pk() {
    GraphHandle h;
    load(h);
    solver_params();
    if (estimate_) {
      const pdlog_options o = options();
      uint64_t hits = 0, samples = 0;
      check(pdlog_estimate_pk(h.g, &o, &hits, &samples));
      out_ += std::to_string(hits) + "/" + std::to_string(samples) + "\n";
      return 0;
    }
    pdlog_text* t = nullptr;
    check(pdlog_oracle_pk(h.g, solver_.s, solver_.t, solver_.k, &t));
    out_ += take(t) + "\n";
    return 0;
  }

  int cmd_connected() {
    GraphHandle h;
    load(h);
    auto& p = rec_.parameters;
    p["a"] = a_;
    p["b"] = b_;
    p["min_kept"] = min_kept_;
    p["deleted_prefix"] = deleted_prefix_;
    p["directed"] = directed_;
    p["walk"] = walk_;
    int yes = 0;
    if (walk_)
      check(pdlog_walk_connected(h.g, a_, b_, min_kept_, deleted_prefix_,
                                 common_.seed, &yes));
    else
      check(pdlog_oracle_connected(h.g, a_, b_, min_kept_, deleted_prefix_,
                                   directed_, &yes));
    out_ += yes ? "yes\n" : "no\n";
    return 0;
  }

  int cmd_validate() {
    GraphHandle h;
    load(h);
    rec_.parameters["s"] = solver_.s;
    rec_.parameters["t"] = solver_.t;
    const auto verts = parse_ids(path_);
    const auto edges = parse_ids(edges_);
    int ok = 0;
    check(pdlog_oracle_validate(h.g, verts.data(), verts.size(),
                                edges_.empty() ? nullptr : edges.data(),
                                edges.size(), solver_.s, solver_.t, &ok));
    out_ += ok ? "valid\n" : "invalid\n";
    return ok ? 0 : 1;
  }

  int cmd_enumerate() {
    GraphHandle h;
    load(h);
    rec_.parameters["s"] = solver_.s;
    rec_.parameters["t"] = solver_.t;
    rec_.parameters["max_len"] = max_len_;
    pdlog_text* t = nullptr;
    check(pdlog_oracle_enumerate(h.g, solver_.s, solver_.t, max_len_, &t));
    out_ += take(t);
    return 0;
  }

  int cmd_grid() {
    GraphHandle h;
    load(h);
    rec_.parameters["t"] = solver_.t;
    rec_.parameters["k"] = solver_.k;
    rec_.parameters["eps"] = common_.eps;
    pdlog_text* t = nullptr;
    check(pdlog_oracle_grid(h.g, solver_.t, solver_.k, common_.eps.c_str(),
                            &t));
    out_ += take(t) + "\n";
    return 0;
  }

  int cmd_cycles() {
    GraphHandle h;
    load(h);
    rec_.parameters["k"] = cycle_k_;
    pdlog_text* t = nullptr;
    check(pdlog_cycles(h.g, cycle_k_, &t));
    out_ += take(t);
    return 0;
  }

  void amplify_params() {
    solver_params();
    rec_.parameters["reps"] = solver_.reps;
    rec_.parameters["trials_per_candidate"] = solver_.trials_per_candidate;
    rec_.parameters["max_candidates"] = solver_.max_candidates;
    rec_.parameters["streaming"] = solver_.streaming;
  }

  int cmd_token_make() {
    GraphHandle h;
    load(h);
    amplify_params();
    const pdlog_options o = options();
    pdlog_text* hex = nullptr;
    uint64_t bits = 0;
    check(pdlog_token_make(h.g, solver_.alg.c_str(), &o, &hex, &bits));
    json j;
    j["token"] = take(hex);
    j["bits"] = bits;
    out_ += j.dump() + "\n";
    return 0;
  }

  int cmd_token_use() {
    GraphHandle h;
    load(h);
    amplify_params();
    rec_.parameters["token"] = token_;
    const pdlog_options o = options();
    pdlog_text* t = nullptr;
    check(pdlog_token_use(h.g, solver_.alg.c_str(), &o, token_.c_str(), &t));
    out_ += take(t);
    if (!out_.empty() && out_.back() != '\n') out_ += '\n';
    return 0;
  }

  int cmd_copies() {
    GraphHandle h;
    load(h);
    amplify_params();
    rec_.parameters["copies"] = copies_;
    const pdlog_options o = options();
    pdlog_text* t = nullptr;
    check(pdlog_copies(h.g, solver_.alg.c_str(), &o, copies_, &t));
    const std::string s = take(t);
    rec_.diagnostics = json::parse(s);
    out_ += s + "\n";
    return 0;
  }

  int cmd_bench() {
    auto& p = rec_.parameters;
    p["suite"] = suite_;
    p["sizes"] = sizes_;
    p["seeds"] = seeds_;
    p["edge_factor"] = edge_factor_;
    if (!bench_model_.empty()) p["model"] = bench_model_;
    pdlog_text *csv = nullptr, *wall = nullptr;
    double slope = 0;
    int has_slope = 0;
    check(pdlog_bench(suite_.c_str(), sizes_.data(), sizes_.size(),
                      seeds_.data(), seeds_.size(), edge_factor_,
                      bench_model_.empty() ? nullptr : bench_model_.c_str(),
                      &csv, &wall, &slope, &has_slope));
    out_ += take(csv);
    rec_.diagnostics["wall_ms"] = json::parse(take(wall));
    if (has_slope) rec_.diagnostics["walk_step_slope"] = slope;
    return 0;
  }

  void emit_record(const std::string& status, double ms) {
    json r;
    r["schema"] = "pdlog.run/1";
    r["subcommand"] = rec_.subcommand;
    r["seed"] = common_.seed;
    r["graph_digest"] = rec_.graph_digest;
    r["parameters"] = rec_.parameters;
    r["wall_ms"] = ms;
    r["workspace_peak"] = rec_.workspace_peak;
    r["result_digest"] = status == "Usage" ? std::string() : sha256(out_);
    r["status"] = status;
    r["diagnostics"] = rec_.diagnostics;
    const std::string line = r.dump() + "\n";
    if (common_.stats.empty()) {
      std::cerr << line;
      return;
    }
    std::ofstream f(common_.stats, std::ios::app | std::ios::binary);
    if (!f) {
      std::cerr << "pdlog: cannot append to " << common_.stats << "\n"
                << line;
      return;
    }
    f << line;
  }

  struct GenFlags {
    uint64_t n = 0;
    double density = -1;
    uint64_t edges = 0;
    bool connected = false;
    uint64_t cycles = 0, min_cycle = 0, max_cycle = 0, k = 0;
    double back_density = -1;
  };

  CLI::App app_{"pdlog"};
  Common common_;
  Solver solver_;
  Record rec_;
  std::string out_;
  std::string unsuccessful_ = "Ok";

  std::string gen_model_;
  GenFlags gen_;
  bool emit_edges_ = false;
  std::string trace_;
  std::string index_;
  uint64_t trials_ = 100;
  uint64_t x_ = 0;
  std::string sidecar_, project_;
  bool estimate_ = false;
  uint32_t a_ = 0, b_ = 0, min_kept_ = 0, deleted_prefix_ = 0;
  bool directed_ = false, walk_ = false;
  std::string path_, edges_;
  uint64_t max_len_ = 0;
  uint64_t cycle_k_ = 0;
  std::string token_;
  uint64_t copies_ = 5;
  std::string suite_;
  std::vector<uint64_t> sizes_, seeds_{1};
  uint64_t edge_factor_ = 3;
  std::string bench_model_;
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  return cli.main(argc, argv);
}
