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

#include "pdlog/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "pdlog/errors.hpp"

namespace pdlog {

OracleBudget OracleBudget::parse(std::string_view spec) {
  OracleBudget b;
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw DomainError("budget item '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), x);
    if (ec != std::errc{} || ptr != val.data() + val.size() || x == 0)
      throw DomainError("budget value '" + std::string(val) +
                        "' must be a positive integer");
    if (key == "vertices") b.max_vertices = x;
    else if (key == "edges") b.max_edges = x;
    else if (key == "walk") b.max_walk_length = x;
    else if (key == "samples") b.max_samples = x;
    else if (key == "paths") b.max_paths = x;
    else throw DomainError("unknown budget key '" + std::string(key) + "'");
  }
  return b;
}

OracleBudget OracleBudget::from_env() {
  const char* env = std::getenv("PDLOG_BUDGET");
  return env ? parse(env) : OracleBudget{};
}

}  // namespace pdlog
