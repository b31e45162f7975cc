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

#include "pdlog/errors.hpp"

namespace pdlog {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "Ok";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kKindViolation: return "KindViolation";
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kGeneration: return "GenerationError";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNonProgress: return "NonProgress";
    case ErrorCode::kNoGoodString: return "NoGoodString";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what),
      line_(line) {}

KindViolation::KindViolation(std::uint32_t vertex, const std::string& what)
    : Error(ErrorCode::kKindViolation,
            what + " (vertex " + std::to_string(vertex) + ")"),
      vertex_(vertex) {}

}  // namespace pdlog
