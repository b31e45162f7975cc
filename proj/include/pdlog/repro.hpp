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
#include <functional>
#include <string>
#include <vector>

#include "pdlog/random.hpp"

namespace pdlog {

// The influential bits of a run, as bytes plus their declared bit length.
struct ReproToken {
  std::string bytes;
  std::uint64_t bits = 0;
  friend bool operator==(const ReproToken&, const ReproToken&) = default;
};

// A randomized solver bound to one instance, with its randomness split into
// influential bits (the token) and everything else (seed2).
class Runner {
 public:
  virtual ~Runner() = default;

  virtual std::string name() const = 0;
  // Bits an influential string carries; 0 for solvers without any.
  virtual std::uint64_t token_bits() const = 0;
  virtual ReproToken sample_token(Stream& influential) const = 0;
  // DomainError unless the token is one this runner can produce.
  virtual void check_token(const ReproToken& token) const = 0;
  // Deterministic given (token, seed2).
  virtual std::string run(const ReproToken& token,
                          std::uint64_t seed2) const = 0;
  virtual std::uint64_t output_bound() const = 0;
  virtual bool valid_output(const std::string& output) const {
    (void)output;
    return true;
  }
  // One unpinned run: token from substream(seed, "influential").
  virtual std::string solve(std::uint64_t seed) const;
};

struct AmplifyOptions {
  std::uint64_t reps = 15;  // odd, >= 3
  // Recompute every output bit by rerunning all repetitions, keeping only
  // one position at a time.
  bool streaming = false;
};

// Per-bit majority over reps runs with the token fixed. Repetition j runs
// with seed2 = derive_seed of (seed, "amp").child(j).
std::string amplify_bitwise(const Runner& runner, const ReproToken& token,
                            std::uint64_t seed,
                            const AmplifyOptions& opts = {});

struct TokenSearch {
  AmplifyOptions amplify;
  std::uint64_t trials_per_candidate = 32;
  std::uint64_t max_candidates = 40;
};

// First candidate token whose amplified runs all agree on a valid output.
// Candidate c comes from substream(seed, "A/candidate/c").
ReproToken algorithm_A(const Runner& runner, std::uint64_t seed,
                       const TokenSearch& search = {});

std::string algorithm_B(const Runner& runner, const ReproToken& token,
                        std::uint64_t seed, const AmplifyOptions& opts = {});

struct Copies {
  ReproToken token;
  std::vector<std::string> outputs;
  bool all_equal = false;
};

// algorithm_A once, then algorithm_B `copies` times with that token.
Copies emit_copies(const Runner& runner, std::uint64_t copies,
                   std::uint64_t seed, const TokenSearch& search = {});

struct PseudoDetStats {
  std::uint64_t trials = 0;
  std::uint64_t distinct = 0;
  std::string modal_digest;  // SHA-256 hex of the modal output
  std::string modal_output;
  std::uint64_t modal_count = 0;
  double modal_frequency = 0;
  double entropy_bits = 0;  // plug-in Shannon entropy
};

// Trial i runs with seed derive_seed of (seed, "measure").child(i).
PseudoDetStats measure(const std::function<std::string(std::uint64_t)>& solve,
                       std::uint64_t trials, std::uint64_t seed);
PseudoDetStats measure(const Runner& runner, std::uint64_t trials,
                       std::uint64_t seed);

// Statistics over a fixed list of outputs.
PseudoDetStats summarize(const std::vector<std::string>& outputs);

}  // namespace pdlog
