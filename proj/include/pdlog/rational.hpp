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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pdlog {

// Exact rationals backed by GMP. Comparisons are tie-free and
// platform-independent.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", integers, and plain decimals such as "0.02" or "1e-4".
// Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

// Canonical "num/den" form (always with a denominator, "1/1" for one).
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace pdlog
