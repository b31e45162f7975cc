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

#include <string>
#include <string_view>

namespace pdlog {

// SHA-256, lowercase hex.
std::string sha256_hex(std::string_view bytes);

std::string to_hex(std::string_view bytes);
// DomainError on odd length or non-hex characters.
std::string from_hex(std::string_view hex);

}  // namespace pdlog
