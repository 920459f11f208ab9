// Copyright 2026 The rieszlab Authors
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
#ifndef RIESZLAB_DSL_DIAGNOSTIC_HPP_
#define RIESZLAB_DSL_DIAGNOSTIC_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rieszlab::dsl {

/// 1-based source position; columns count code points.
struct Span {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  friend bool operator==(const Span&, const Span&) = default;
};

enum class Severity { kError, kWarning, kNote };

/// Process exit codes of the script runner and the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitType = 3,
  kExitPrecondition = 4,
  kExitCheckFailed = 5,
};

struct Diagnostic {
  Span span;
  std::string message;
  Severity severity = Severity::kError;

  /// `name:line:col: error: message`.
  std::string format(std::string_view source_name) const;
};

}  // namespace rieszlab::dsl

#endif  // RIESZLAB_DSL_DIAGNOSTIC_HPP_
