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
#ifndef RIESZLAB_DSL_PARSER_HPP_
#define RIESZLAB_DSL_PARSER_HPP_

#include <string_view>
#include <vector>

#include "rieszlab/dsl/ast.hpp"
#include "rieszlab/dsl/diagnostic.hpp"

namespace rieszlab::dsl {

struct ParseResult {
  Script script;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

/// Parses a whole script. Never throws on malformed input; every problem is
/// reported as a diagnostic and parsing resumes after the next ';'.
ParseResult parse(std::string_view text);

}  // namespace rieszlab::dsl

#endif  // RIESZLAB_DSL_PARSER_HPP_
