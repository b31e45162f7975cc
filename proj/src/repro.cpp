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

#include "pdlog/repro.hpp"

#include <cmath>
#include <map>
#include <string>

#include "pdlog/digest.hpp"
#include "pdlog/errors.hpp"

namespace pdlog {

std::string Runner::solve(std::uint64_t seed) const {
  Stream influential = substream(Seed{seed}, "influential");
  return run(sample_token(influential), seed);
}

namespace {

std::uint64_t rep_seed(std::uint64_t seed, std::uint64_t j) {
  return derive_seed(StreamFamily(Seed{seed}, "amp").child(j));
}

int bit_at(const std::string& s, std::size_t pos) {
  return (static_cast<unsigned char>(s[pos / 8]) >> (pos % 8)) & 1;
}

std::string amplify_buffered(const Runner& runner, const ReproToken& token,
                             std::uint64_t seed, std::uint64_t reps) {
  std::vector<std::string> outs;
  outs.reserve(reps);
  for (std::uint64_t j = 0; j < reps; ++j) {
    outs.push_back(runner.run(token, rep_seed(seed, j)));
    if (outs.back().size() != outs.front().size())
      throw LengthMismatch("repetition " + std::to_string(j) + " produced " +
                           std::to_string(outs.back().size()) +
                           " bytes, repetition 0 produced " +
                           std::to_string(outs.front().size()));
  }
  std::string result(outs.front().size(), '\0');
  for (std::size_t pos = 0; pos < result.size() * 8; ++pos) {
    std::uint64_t ones = 0;
    for (const auto& o : outs) ones += bit_at(o, pos);
    if (2 * ones > reps)
      result[pos / 8] = static_cast<char>(result[pos / 8] | (1 << (pos % 8)));
  }
  return result;
}

std::string amplify_streaming(const Runner& runner, const ReproToken& token,
                              std::uint64_t seed, std::uint64_t reps) {
  std::size_t length = 0;
  for (std::uint64_t j = 0; j < reps; ++j) {
    const std::size_t len = runner.run(token, rep_seed(seed, j)).size();
    if (j == 0) length = len;
    if (len != length)
      throw LengthMismatch("repetition " + std::to_string(j) + " produced " +
                           std::to_string(len) + " bytes, repetition 0 "
                           "produced " + std::to_string(length));
  }
  std::string result(length, '\0');
  for (std::size_t pos = 0; pos < length * 8; ++pos) {
    std::uint64_t ones = 0;
    for (std::uint64_t j = 0; j < reps; ++j)
      ones += bit_at(runner.run(token, rep_seed(seed, j)), pos);
    if (2 * ones > reps)
      result[pos / 8] = static_cast<char>(result[pos / 8] | (1 << (pos % 8)));
  }
  return result;
}

}  // namespace

std::string amplify_bitwise(const Runner& runner, const ReproToken& token,
                            std::uint64_t seed, const AmplifyOptions& opts) {
  if (opts.reps < 3 || opts.reps % 2 == 0)
    throw DomainError("repetitions must be odd and at least 3, got " +
                      std::to_string(opts.reps));
  runner.check_token(token);
  return opts.streaming ? amplify_streaming(runner, token, seed, opts.reps)
                        : amplify_buffered(runner, token, seed, opts.reps);
}

ReproToken algorithm_A(const Runner& runner, std::uint64_t seed,
                       const TokenSearch& search) {
  if (search.trials_per_candidate == 0)
    throw DomainError("need at least one trial per candidate");
  const StreamFamily trials(Seed{seed}, "A/trial");
  for (std::uint64_t c = 0; c < search.max_candidates; ++c) {
    Stream influential =
        substream(Seed{seed}, "A/candidate/" + std::to_string(c));
    const ReproToken token = runner.sample_token(influential);
    bool good = true;
    std::string first;
    for (std::uint64_t j = 0; j < search.trials_per_candidate && good; ++j) {
      std::string out;
      try {
        out = amplify_bitwise(runner, token, derive_seed(trials.child(c).child(j)),
                              search.amplify);
      } catch (const LengthMismatch&) {
        good = false;
        break;
      }
      if (j == 0) {
        first = std::move(out);
        good = runner.valid_output(first);
      } else {
        good = out == first;
      }
    }
    if (good) return token;
  }
  throw NoGoodString("no consistent influential string among " +
                     std::to_string(search.max_candidates) + " candidates");
}

std::string algorithm_B(const Runner& runner, const ReproToken& token,
                        std::uint64_t seed, const AmplifyOptions& opts) {
  return amplify_bitwise(runner, token, seed, opts);
}

Copies emit_copies(const Runner& runner, std::uint64_t copies,
                   std::uint64_t seed, const TokenSearch& search) {
  if (copies == 0) throw DomainError("need at least one copy");
  Copies out;
  out.token = algorithm_A(runner, seed, search);
  const StreamFamily b(Seed{seed}, "B");
  for (std::uint64_t i = 0; i < copies; ++i)
    out.outputs.push_back(
        algorithm_B(runner, out.token, derive_seed(b.child(i)), search.amplify));
  out.all_equal = true;
  for (const auto& o : out.outputs) out.all_equal &= o == out.outputs.front();
  return out;
}

PseudoDetStats summarize(const std::vector<std::string>& outputs) {
  PseudoDetStats st;
  st.trials = outputs.size();
  if (outputs.empty()) return st;
  std::map<std::string, std::pair<std::uint64_t, std::size_t>> counts;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    auto [it, fresh] = counts.try_emplace(sha256_hex(outputs[i]), 0, i);
    ++it->second.first;
  }
  st.distinct = counts.size();
  for (const auto& [digest, entry] : counts) {
    const double p = static_cast<double>(entry.first) / st.trials;
    st.entropy_bits -= p * std::log2(p);
    if (entry.first > st.modal_count) {
      st.modal_count = entry.first;
      st.modal_digest = digest;
      st.modal_output = outputs[entry.second];
    }
  }
  if (st.entropy_bits < 0) st.entropy_bits = 0;
  st.modal_frequency = static_cast<double>(st.modal_count) / st.trials;
  return st;
}

PseudoDetStats measure(const std::function<std::string(std::uint64_t)>& solve,
                       std::uint64_t trials, std::uint64_t seed) {
  if (trials < 2) throw DomainError("measure needs at least two trials");
  const StreamFamily fam(Seed{seed}, "measure");
  std::vector<std::string> outputs;
  outputs.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i)
    outputs.push_back(solve(derive_seed(fam.child(i))));
  return summarize(outputs);
}

PseudoDetStats measure(const Runner& runner, std::uint64_t trials,
                       std::uint64_t seed) {
  return measure([&](std::uint64_t s) { return runner.solve(s); }, trials,
                 seed);
}

}  // namespace pdlog
