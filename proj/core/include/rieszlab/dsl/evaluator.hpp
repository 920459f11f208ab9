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
#ifndef RIESZLAB_DSL_EVALUATOR_HPP_
#define RIESZLAB_DSL_EVALUATOR_HPP_

#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "rieszlab/dsl/ast.hpp"
#include "rieszlab/dsl/diagnostic.hpp"
#include "rieszlab/sampling.hpp"

namespace rieszlab::dsl {

/// Static types of script expressions. Value covers both elements and real
/// intervals; which one an operator produces is known only at run time.
enum class Type { kScalar, kSpace, kValue, kOperator, kLattice, kBool, kList, kReport, kGrid };
std::string_view to_string(Type t);

/// Names that scripts may call but not rebind.
const std::vector<std::string_view>& builtin_names();

/// Checks that every name is bound before use, operand types fit, and check
/// ids and profiles exist. Diagnostics here map to exit code 3.
std::vector<Diagnostic> typecheck(const Script& script);

struct RunOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<Diagnostic> diagnostics;
};

/// Executes a checked script, writing one block of output per statement.
/// Stops at the first runtime error (exit 4); failing checks set exit 5 but
/// execution continues.
RunResult execute(const Script& script, std::ostream& out, const RunOptions& options = {});

/// parse, typecheck, execute.
RunResult run_script(std::string_view text, std::ostream& out, const RunOptions& options = {});

}  // namespace rieszlab::dsl

#endif  // RIESZLAB_DSL_EVALUATOR_HPP_
