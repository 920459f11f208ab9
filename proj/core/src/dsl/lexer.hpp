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
#ifndef RIESZLAB_DSL_LEXER_HPP_
#define RIESZLAB_DSL_LEXER_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "rieszlab/dsl/diagnostic.hpp"

namespace rieszlab::dsl {

enum class Tok {
  kEnd,
  kError,
  kIdent,
  kNumber,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kLBrace,
  kRBrace,
  kComma,
  kSemi,
  kColon,
  kPipe,
  kArrow,       // ->
  kPlus,
  kMinus,
  kStar,
  kCaret,
  kCaretPlus,   // ^+
  kCaretMinus,  // ^-
  kJoin,        // \/
  kMeet,        // /\ .
  kLeq,         // <=
  kFragLeq,     // <<=
  kPerp,        // _|_
  kEqEq,        // ==
  kEq,          // =
  kAt,          // @
  kEllipsis,    // ...
};

std::string_view spelling(Tok t);

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  Span span;
  std::size_t offset = 0;
};

/// On-demand tokenizer. Option words after `check`, `suite` and `search`
/// are read with word(), which does not split on '-', '.', '=' or '/'.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next();
  /// Skips blanks and comments, then reads [A-Za-z0-9_.=/+-]+; empty if none.
  Token word();
  Span position() const { return {line_, column_}; }

 private:
  void skip_blank();
  void advance(std::size_t bytes);

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

}  // namespace rieszlab::dsl

#endif  // RIESZLAB_DSL_LEXER_HPP_
