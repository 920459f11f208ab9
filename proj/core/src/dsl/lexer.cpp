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
#include "dsl/lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace rieszlab::dsl {
namespace {

struct Symbol {
  std::string_view text;
  Tok kind;
};

// Longest spellings first.
constexpr std::array kSymbols{
    Symbol{"...", Tok::kEllipsis}, Symbol{"<<=", Tok::kFragLeq}, Symbol{"_|_", Tok::kPerp},
    Symbol{"->", Tok::kArrow},     Symbol{"^+", Tok::kCaretPlus}, Symbol{"^-", Tok::kCaretMinus},
    Symbol{"\\/", Tok::kJoin},     Symbol{"/\\", Tok::kMeet},     Symbol{"<=", Tok::kLeq},
    Symbol{"==", Tok::kEqEq},      Symbol{"(", Tok::kLParen},     Symbol{")", Tok::kRParen},
    Symbol{"[", Tok::kLBracket},   Symbol{"]", Tok::kRBracket},   Symbol{"{", Tok::kLBrace},
    Symbol{"}", Tok::kRBrace},     Symbol{",", Tok::kComma},      Symbol{";", Tok::kSemi},
    Symbol{":", Tok::kColon},      Symbol{"|", Tok::kPipe},       Symbol{"+", Tok::kPlus},
    Symbol{"-", Tok::kMinus},      Symbol{"*", Tok::kStar},       Symbol{"^", Tok::kCaret},
    Symbol{"=", Tok::kEq},         Symbol{"@", Tok::kAt},
    // Unicode spellings.
    Symbol{"∨", Tok::kJoin},       // logical or
    Symbol{"∧", Tok::kMeet},       // logical and
    Symbol{"⊔", Tok::kIdent},      // square cup, lsup
    Symbol{"⊓", Tok::kIdent},      // square cap, linf
    Symbol{"⊑", Tok::kFragLeq},
    Symbol{"⊥", Tok::kPerp},
    Symbol{"≤", Tok::kLeq},
    Symbol{"⁺", Tok::kCaretPlus},
    Symbol{"⁻", Tok::kCaretMinus},
    Symbol{"→", Tok::kArrow},
    Symbol{"·", Tok::kStar},
    Symbol{"−", Tok::kMinus},
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }
bool word_char(char c) {
  return ident_char(c) || c == '.' || c == '=' || c == '/' || c == '+' || c == '-';
}

}  // namespace

std::string_view spelling(Tok t) {
  switch (t) {
    case Tok::kEnd: return "end of input";
    case Tok::kError: return "invalid character";
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "number";
    default: break;
  }
  for (const auto& s : kSymbols) {
    if (s.kind == t) return s.text;
  }
  return "?";
}

void Lexer::advance(std::size_t bytes) {
  for (std::size_t i = 0; i < bytes && pos_ < text_.size(); ++i, ++pos_) {
    const auto c = static_cast<unsigned char>(text_[pos_]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }
}

void Lexer::skip_blank() {
  while (pos_ < text_.size()) {
    const char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else {
      break;
    }
  }
}

Token Lexer::next() {
  skip_blank();
  Token tok;
  tok.span = position();
  tok.offset = pos_;
  if (pos_ >= text_.size()) return tok;
  const std::string_view rest = text_.substr(pos_);
  auto take = [&](Tok kind, std::size_t n) {
    tok.kind = kind;
    tok.text = std::string(rest.substr(0, n));
    advance(n);
    return tok;
  };
  if (rest.starts_with("_|_")) return take(Tok::kPerp, 3);
  if (ident_start(rest[0])) {
    std::size_t n = 1;
    while (n < rest.size() && ident_char(rest[n])) ++n;
    return take(Tok::kIdent, n);
  }
  if (digit(rest[0])) {
    std::size_t n = 1;
    while (n < rest.size() && digit(rest[n])) ++n;
    if (n + 1 < rest.size() && rest[n] == '/' && digit(rest[n + 1])) {
      n += 2;
      while (n < rest.size() && digit(rest[n])) ++n;
    }
    return take(Tok::kNumber, n);
  }
  for (const auto& s : kSymbols) {
    if (!rest.starts_with(s.text)) continue;
    Token t = take(s.kind, s.text.size());
    if (s.text == "⊔") t.text = "lsup";
    if (s.text == "⊓") t.text = "linf";
    return t;
  }
  // One code point of garbage.
  std::size_t n = 1;
  while (n < rest.size() && (static_cast<unsigned char>(rest[n]) & 0xC0) == 0x80 && n < 4) ++n;
  return take(Tok::kError, n);
}

Token Lexer::word() {
  skip_blank();
  Token tok;
  tok.span = position();
  tok.offset = pos_;
  std::size_t n = 0;
  while (pos_ + n < text_.size() && word_char(text_[pos_ + n])) ++n;
  if (n == 0) return tok;
  tok.kind = Tok::kIdent;
  tok.text = std::string(text_.substr(pos_, n));
  advance(n);
  return tok;
}

}  // namespace rieszlab::dsl
