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

#include "pdlog/random.hpp"

#include <bit>

#include "pdlog/errors.hpp"

namespace pdlog {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

constexpr std::uint64_t fnv_feed(std::uint64_t h, std::string_view bytes) {
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64_10(std::array<std::uint64_t, 4> ctr,
                                           std::array<std::uint64_t, 2> key) {
  constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ull;
  constexpr std::uint64_t kM1 = 0xCA5A826395121157ull;
  constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ull;
  constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73Bull;
  for (int round = 0; round < 10; ++round) {
    if (round) {
      key[0] += kW0;
      key[1] += kW1;
    }
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kM0, ctr[0], hi0, lo0);
    mulhilo(kM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

Stream::Stream(std::uint64_t seed, std::uint64_t label_key, std::string label)
    : key_{seed, label_key}, label_(std::move(label)) {}

void Stream::refill() {
  buffer_ = philox4x64_10({block_++, 0, 0, 0}, key_);
  position_ = 0;
}

std::uint64_t Stream::next_bits(unsigned bits) {
  if (bits == 0) return 0;
  if (bits > 64) throw DomainError("at most 64 bits per draw");
  if (256 - position_ < bits) refill();
  const unsigned word = position_ / 64, offset = position_ % 64;
  std::uint64_t value = buffer_[word] >> offset;
  if (offset + bits > 64) value |= buffer_[word + 1] << (64 - offset);
  if (bits < 64) value &= (std::uint64_t{1} << bits) - 1;
  position_ += bits;
  consumed_ += bits;
  return value;
}

StreamFamily::StreamFamily(Seed seed, std::string_view label)
    : seed_(seed.value), state_(fnv_feed(kFnvOffset, label)) {}

StreamFamily StreamFamily::child(std::uint64_t index) const noexcept {
  char digits[24];
  int len = 0;
  do {
    digits[len++] = static_cast<char>('0' + index % 10);
    index /= 10;
  } while (index);
  std::uint64_t h = fnv_feed(state_, "/");
  for (int i = len - 1; i >= 0; --i) h = fnv_feed(h, {&digits[i], 1});
  return {seed_, h};
}

StreamFamily StreamFamily::child(std::string_view part) const noexcept {
  return {seed_, fnv_feed(fnv_feed(state_, "/"), part)};
}

Stream StreamFamily::stream() const {
  return Stream(seed_, splitmix_finalize(state_));
}

Stream substream(Seed seed, std::string_view label) {
  return Stream(seed.value, splitmix_finalize(fnv_feed(kFnvOffset, label)),
                std::string(label));
}

std::uint64_t uniform_index(Stream& stream, std::uint64_t m) {
  if (m == 0) throw DomainError("uniform_index needs m >= 1");
  const unsigned bits = static_cast<unsigned>(std::bit_width(m - 1));
  for (;;) {
    std::uint64_t x = stream.next_bits(bits);
    if (x < m) return x;
  }
}

double uniform_unit(Stream& stream) {
  return static_cast<double>(stream.next_bits(53)) * 0x1.0p-53;
}

bool bernoulli(Stream& stream, double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return uniform_unit(stream) < p;
}

std::uint64_t derive_seed(Seed seed, std::string_view label) {
  Stream s = substream(seed, label);
  return s.next_bits(64);
}

std::uint64_t derive_seed(const StreamFamily& family) {
  Stream s = family.stream();
  return s.next_bits(64);
}

}  // namespace pdlog
