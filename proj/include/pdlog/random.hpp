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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace pdlog {

// Pinned generator construction. Changing any part of the stream derivation
// must bump this string; recorded outputs depend on it.
inline constexpr std::string_view kGeneratorVersion =
    "philox4x64-10/fnv1a64+splitmix64-label/v1";

// Philox4x64 with 10 rounds (Salmon et al., Random123).
std::array<std::uint64_t, 4> philox4x64_10(std::array<std::uint64_t, 4> ctr,
                                           std::array<std::uint64_t, 2> key);

struct Seed {
  std::uint64_t value = 0;
};

// Bit stream from a counter-based generator keyed by (seed, label hash).
// Single-owner mutable state; copy it to fork a replay.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t label_key, std::string label = {});

  // Next `bits` bits (0..64) as an integer. Bits are taken least-significant
  // first from each 256-bit block; a request that does not fit in what is left
  // of the block starts a fresh block.
  std::uint64_t next_bits(unsigned bits);

  std::uint64_t bits_consumed() const noexcept { return consumed_; }
  const std::string& label() const noexcept { return label_; }
  std::uint64_t label_key() const noexcept { return key_[1]; }

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 4> buffer_{};
  unsigned position_ = 256;
  std::uint64_t consumed_ = 0;
  std::string label_;
};

// A labelled family of streams. child(i) names the label "<label>/<i>", so
// StreamFamily(seed, "walks").child(3).stream() is bitwise identical to
// substream(seed, "walks/3").
class StreamFamily {
 public:
  StreamFamily(Seed seed, std::string_view label);

  StreamFamily child(std::uint64_t index) const noexcept;
  StreamFamily child(std::string_view part) const noexcept;
  Stream stream() const;
  Stream stream(std::uint64_t index) const { return child(index).stream(); }
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  StreamFamily(std::uint64_t seed, std::uint64_t state) noexcept
      : seed_(seed), state_(state) {}
  std::uint64_t seed_;
  std::uint64_t state_;  // FNV-1a state over the label bytes
};

Stream substream(Seed seed, std::string_view label);

// Uniform on [0, m) by rejection sampling on ceil(log2 m)-bit draws.
// DomainError when m == 0.
std::uint64_t uniform_index(Stream& stream, std::uint64_t m);

// Uniform double in [0, 1) from 53 bits.
double uniform_unit(Stream& stream);

bool bernoulli(Stream& stream, double p);

// A 64-bit seed derived from (seed, label); used to hand a fresh root seed to
// a nested run.
std::uint64_t derive_seed(Seed seed, std::string_view label);
std::uint64_t derive_seed(const StreamFamily& family);

}  // namespace pdlog
