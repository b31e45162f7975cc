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
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdlog {

// Stable error codes; the C API mirrors these values.
enum class ErrorCode : int {
  kOk = 0,
  kParse = 1,
  kKindViolation = 2,
  kDomain = 3,
  kBudgetExceeded = 4,
  kGeneration = 5,
  kNotConnected = 6,
  kNonProgress = 7,
  kNoGoodString = 8,
  kLengthMismatch = 9,
  kIo = 10,
  kInternal = 11,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class KindViolation : public Error {
 public:
  explicit KindViolation(const std::string& what)
      : Error(ErrorCode::kKindViolation, what) {}
  KindViolation(std::uint32_t vertex, const std::string& what);
  // Offending vertex, when the violation is local to one.
  std::int64_t vertex() const noexcept { return vertex_; }

 private:
  std::int64_t vertex_ = -1;
};

#define PDLOG_SIMPLE_ERROR(Name, Code)                                     \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

PDLOG_SIMPLE_ERROR(DomainError, kDomain)
PDLOG_SIMPLE_ERROR(BudgetExceeded, kBudgetExceeded)
PDLOG_SIMPLE_ERROR(GenerationError, kGeneration)
PDLOG_SIMPLE_ERROR(NotConnected, kNotConnected)
PDLOG_SIMPLE_ERROR(NonProgress, kNonProgress)
PDLOG_SIMPLE_ERROR(NoGoodString, kNoGoodString)
PDLOG_SIMPLE_ERROR(LengthMismatch, kLengthMismatch)
PDLOG_SIMPLE_ERROR(IoError, kIo)

#undef PDLOG_SIMPLE_ERROR

}  // namespace pdlog
