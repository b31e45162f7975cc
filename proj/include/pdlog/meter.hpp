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

#include <cstddef>
#include <cstdint>

namespace pdlog {

// Counts live words of mutable algorithm state. The graph, randomness state,
// and the output tape are not charged.
class WorkspaceMeter {
 public:
  void acquire(std::size_t words) noexcept {
    live_ += words;
    if (live_ > peak_) peak_ = live_;
  }
  void release(std::size_t words) noexcept { live_ -= words; }
  std::size_t live_words() const noexcept { return live_; }
  std::size_t peak_words() const noexcept { return peak_; }

 private:
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

// Charges `words` to the meter for the lifetime of the scope. A null meter is
// allowed and makes the scope free.
class MeterScope {
 public:
  MeterScope(WorkspaceMeter* meter, std::size_t words) noexcept
      : meter_(meter), words_(words) {
    if (meter_) meter_->acquire(words_);
  }
  ~MeterScope() {
    if (meter_) meter_->release(words_);
  }
  MeterScope(const MeterScope&) = delete;
  MeterScope& operator=(const MeterScope&) = delete;

 private:
  WorkspaceMeter* meter_;
  std::size_t words_;
};

// Work counters accumulated over a run.
struct Counters {
  std::uint64_t walk_steps = 0;
  std::uint64_t walks = 0;
  std::uint64_t connectivity_calls = 0;
  std::uint64_t estimator_calls = 0;
  // Evaluations of the edge permutation during cycle-membership scans.
  std::uint64_t orbit_steps = 0;
  // Steps taken from a vertex with no incident edges.
  std::uint64_t degenerate_steps = 0;

  Counters& operator+=(const Counters& o) noexcept {
    walk_steps += o.walk_steps;
    walks += o.walks;
    connectivity_calls += o.connectivity_calls;
    estimator_calls += o.estimator_calls;
    orbit_steps += o.orbit_steps;
    degenerate_steps += o.degenerate_steps;
    return *this;
  }
};

}  // namespace pdlog
