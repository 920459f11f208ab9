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
#include "rieszlab/dsl/parser.hpp"

#include <charconv>
#include <memory>
#include <set>
#include <string>
#include <utility>

#include "dsl/lexer.hpp"
#include "rieszlab/error.hpp"

namespace rieszlab::dsl {
namespace {

struct ParseFailure {
  Span span;
  std::string message;
};

const std::set<std::string, std::less<>> kReserved = {"let", "eval", "check", "suite", "search", "lsup",
                                                      "linf", "on", "unit", "target"};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  ParseResult run() {
    ParseResult out;
    for (;;) {
      try {
        if (peek().kind == Tok::kEnd) break;
        out.script.statements.push_back(statement());
      } catch (const ParseFailure& f) {
        out.diagnostics.push_back({f.span, f.message, Severity::kError});
        recover();
      } catch (const Error& e) {
        out.diagnostics.push_back({cur_.span, e.what(), Severity::kError});
        recover();
      }
    }
    return out;
  }

 private:
  const Token& peek() {
    if (!have_) {
      cur_ = lex_.next();
      have_ = true;
      if (cur_.kind == Tok::kError) fail_at(cur_.span, "invalid character " + describe(cur_));
    }
    return cur_;
  }
  Token take() {
    peek();
    have_ = false;
    prev_ = cur_;
    return cur_;
  }
  bool at(Tok k) { return peek().kind == k; }
  bool at_ident(std::string_view name) { return peek().kind == Tok::kIdent && peek().text == name; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }

  [[noreturn]] void fail_at(Span span, std::string message) { throw ParseFailure{span, std::move(message)}; }

  // Errors at end of input point at the last token read, which is where the
  // text stopped making sense.
  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = peek();
    if (t.kind == Tok::kEnd && !prev_.text.empty()) {
      fail_at(prev_.span, "expected " + expected + " after '" + prev_.text + "', found end of input");
    }
    fail_at(t.span, "expected " + expected + ", found " + describe(t));
  }

  Token expect(Tok k) {
    if (!at(k)) fail("'" + std::string(spelling(k)) + "'");
    return take();
  }
  void expect_ident(std::string_view name) {
    if (!at_ident(name)) fail("'" + std::string(name) + "'");
    take();
  }

  // Skips to just past the next ';'.
  void recover() {
    if (have_ && (cur_.kind == Tok::kSemi || cur_.kind == Tok::kEnd)) {
      if (cur_.kind == Tok::kSemi) have_ = false;
      prev_ = Token{};
      return;
    }
    have_ = false;
    for (;;) {
      Token t = lex_.next();
      if (t.kind == Tok::kEnd || t.kind == Tok::kSemi) break;
    }
    prev_ = Token{};
  }

  std::uint64_t integer() {
    const Token t = peek();
    if (t.kind != Tok::kNumber || t.text.find('/') != std::string::npos) fail("a nonnegative integer");
    take();
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size()) fail_at(t.span, "integer " + t.text + " is too large");
    return v;
  }

  Scalar scalar() {
    bool negative = accept(Tok::kMinus);
    if (!at(Tok::kNumber)) fail("a rational number");
    const Token t = take();
    try {
      Scalar s = Scalar::parse(t.text);
      return negative ? -s : s;
    } catch (const Error& e) {
      fail_at(t.span, e.what());
    }
  }

  std::vector<Scalar> scalar_list(Tok close) {
    std::vector<Scalar> out;
    if (at(close)) return out;
    do {
      out.push_back(scalar());
    } while (accept(Tok::kComma));
    return out;
  }

  std::vector<std::pair<Scalar, Scalar>> pair_list() {
    std::vector<std::pair<Scalar, Scalar>> out;
    expect(Tok::kLBrace);
    if (!at(Tok::kRBrace)) {
      do {
        expect(Tok::kLParen);
        Scalar a = scalar();
        expect(Tok::kComma);
        Scalar b = scalar();
        expect(Tok::kRParen);
        out.emplace_back(std::move(a), std::move(b));
      } while (accept(Tok::kComma));
    }
    expect(Tok::kRBrace);
    return out;
  }

  // ---- statements

  std::vector<std::pair<std::string, std::string>> option_words() {
    std::vector<std::pair<std::string, std::string>> out;
    for (;;) {
      Token w = lex_.word();
      if (w.text.empty()) break;
      prev_ = w;
      const auto eq = w.text.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == w.text.size()) {
        fail_at(w.span, "expected key=value, found '" + w.text + "'");
      }
      out.emplace_back(w.text.substr(0, eq), w.text.substr(eq + 1));
    }
    return out;
  }

  void level_suffix(Stmt& s) {
    if (!accept(Tok::kAt)) return;
    expect_ident("level");
    s.level = integer();
  }

  Stmt statement() {
    const Token head = peek();
    if (head.kind != Tok::kIdent) fail("a statement");
    Stmt s;
    s.span = head.span;
    take();
    if (head.text == "let") {
      s.kind = StmtKind::kLet;
      if (!at(Tok::kIdent)) fail("a name");
      const Token name = take();
      if (kReserved.contains(name.text)) fail_at(name.span, "'" + name.text + "' is a reserved word");
      s.name = name.text;
      s.name_span = name.span;
      expect(Tok::kEq);
      s.expr = expr();
    } else if (head.text == "eval" || head.text == "fragments" || head.text == "decomps") {
      s.kind = head.text == "eval" ? StmtKind::kEval
                                   : (head.text == "fragments" ? StmtKind::kFragments : StmtKind::kDecomps);
      s.expr = expr();
      level_suffix(s);
    } else if (head.text == "check" || head.text == "suite") {
      s.kind = head.text == "check" ? StmtKind::kCheck : StmtKind::kSuite;
      Token w = lex_.word();
      if (w.text.empty()) {
        fail(head.text == "check" ? "a check id" : "a profile (quick or full)");
      }
      prev_ = w;
      s.name = w.text;
      s.name_span = w.span;
      s.options = option_words();
    } else if (head.text == "search") {
      s.kind = StmtKind::kSearch;
      s.options = option_words();
    } else {
      fail_at(head.span, "expected a statement (let, eval, check, suite, search, fragments, decomps), found '" +
                             head.text + "'");
    }
    expect(Tok::kSemi);
    return s;
  }

  // ---- expressions

  static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  static ExprPtr binary(std::string op, Span span, ExprPtr a, ExprPtr b) {
    Expr e;
    e.kind = ExprKind::kBinary;
    e.span = span;
    e.text = std::move(op);
    e.args = {std::move(a), std::move(b)};
    return node(std::move(e));
  }

 public:
  ExprPtr expr() { return relation(); }

 private:
  static bool relation_tok(Tok k) {
    return k == Tok::kLeq || k == Tok::kFragLeq || k == Tok::kPerp || k == Tok::kEqEq;
  }

  ExprPtr relation() {
    ExprPtr lhs = join();
    if (!relation_tok(peek().kind)) return lhs;
    const Token op = take();
    ExprPtr rhs = join();
    if (relation_tok(peek().kind)) fail_at(peek().span, "relations do not chain; add parentheses");
    return binary(std::string(spelling(op.kind)), op.span, std::move(lhs), std::move(rhs));
  }

  template <class Next>
  ExprPtr left_assoc(Next next, auto matches) {
    ExprPtr lhs = (this->*next)();
    while (auto op = matches(peek())) {
      const Span span = peek().span;
      take();
      lhs = binary(*op, span, std::move(lhs), (this->*next)());
    }
    return lhs;
  }

  static std::optional<std::string> tok_op(const Token& t, Tok k) {
    if (t.kind == k) return std::string(spelling(k));
    return std::nullopt;
  }

  ExprPtr join() { return left_assoc(&Parser::meet, [](const Token& t) { return tok_op(t, Tok::kJoin); }); }
  ExprPtr meet() { return left_assoc(&Parser::additive, [](const Token& t) { return tok_op(t, Tok::kMeet); }); }
  ExprPtr additive() {
    return left_assoc(&Parser::term, [](const Token& t) -> std::optional<std::string> {
      if (t.kind == Tok::kPlus) return "+";
      if (t.kind == Tok::kMinus) return "-";
      return std::nullopt;
    });
  }
  ExprPtr term() { return left_assoc(&Parser::lsup, [](const Token& t) { return tok_op(t, Tok::kStar); }); }
  ExprPtr lsup() {
    return left_assoc(&Parser::linf, [](const Token& t) -> std::optional<std::string> {
      if (t.kind == Tok::kIdent && t.text == "lsup") return "lsup";
      return std::nullopt;
    });
  }
  ExprPtr linf() {
    return left_assoc(&Parser::unary, [](const Token& t) -> std::optional<std::string> {
      if (t.kind == Tok::kIdent && t.text == "linf") return "linf";
      return std::nullopt;
    });
  }

  ExprPtr unary() {
    if (at(Tok::kMinus)) {
      Expr e;
      e.kind = ExprKind::kUnary;
      e.span = take().span;
      e.text = "-";
      e.args = {unary()};
      return node(std::move(e));
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr x = primary();
    for (;;) {
      if (at(Tok::kCaretPlus) || at(Tok::kCaretMinus)) {
        Expr e;
        e.kind = ExprKind::kPostfix;
        e.span = peek().span;
        e.text = at(Tok::kCaretPlus) ? "^+" : "^-";
        take();
        e.args = {std::move(x)};
        x = node(std::move(e));
      } else if (at(Tok::kLParen)) {
        Expr e;
        e.kind = ExprKind::kCall;
        e.span = x->span;
        take();
        e.args = {std::move(x)};
        std::size_t group = 0;
        if (!at(Tok::kRParen)) {
          for (;;) {
            e.args.push_back(expr());
            ++group;
            if (accept(Tok::kComma)) continue;
            if (accept(Tok::kSemi)) {
              e.groups.push_back(group);
              group = 0;
              continue;
            }
            break;
          }
        }
        e.groups.push_back(group);
        expect(Tok::kRParen);
        x = node(std::move(e));
      } else {
        return x;
      }
    }
  }

  SpaceLit space_lit() {
    if (!at(Tok::kIdent)) fail("a space");
    return space_named(take());
  }

  SpaceLit space_named(const Token& t) {
    SpaceLit s;
    if (t.text == "coord") {
      s.kind = SpaceKind::kCoordinate;
      expect(Tok::kLParen);
      s.dimension = integer();
      expect(Tok::kRParen);
    } else if (t.text == "simple") {
      s.kind = SpaceKind::kSimpleFunction;
      expect(Tok::kLBrace);
      s.partition = scalar_list(Tok::kRBrace);
      expect(Tok::kRBrace);
    } else if (t.text == "fin") {
      s.kind = SpaceKind::kFinSupport;
    } else if (t.text == "ec") {
      s.kind = SpaceKind::kEventuallyConstant;
    } else if (t.text == "pl") {
      s.kind = SpaceKind::kPiecewiseLinear;
    } else {
      fail_at(t.span, "expected a space (coord(n), simple{...}, fin, ec, pl), found '" + t.text + "'");
    }
    return s;
  }

  std::pair<SpaceLit, SpaceLit> on_clause() {
    expect_ident("on");
    SpaceLit d = space_lit();
    expect(Tok::kArrow);
    return {std::move(d), space_lit()};
  }

  // Polynomials in t for kernel bodies.
  Polynomial poly_factor() {
    if (at(Tok::kNumber)) {
      const Token t = take();
      return Polynomial::constant(Scalar::parse(t.text));
    }
    if (accept(Tok::kLParen)) {
      Polynomial p = poly();
      expect(Tok::kRParen);
      return p;
    }
    if (at_ident("t")) {
      take();
      if (accept(Tok::kCaret)) {
        const std::uint64_t k = integer();
        if (k > 64) fail_at(prev_.span, "exponent " + std::to_string(k) + " is too large");
        return Polynomial::identity().pow(static_cast<unsigned>(k));
      }
      return Polynomial::identity();
    }
    fail("a polynomial in t");
  }
  Polynomial poly_term() {
    Polynomial p = poly_factor();
    while (accept(Tok::kStar)) p = p * poly_factor();
    return p;
  }
  Polynomial poly() {
    Polynomial p = accept(Tok::kMinus) ? -poly_term() : poly_term();
    for (;;) {
      if (accept(Tok::kPlus)) {
        p = p + poly_term();
      } else if (accept(Tok::kMinus)) {
        p = p - poly_term();
      } else {
        return p;
      }
    }
  }
  PiecewisePolynomial kernel_body() {
    if (!at_ident("pw")) return poly();
    take();
    expect(Tok::kLParen);
    std::vector<Polynomial> pieces{poly()};
    std::vector<Scalar> breaks;
    while (accept(Tok::kPipe)) {
      breaks.push_back(scalar());
      expect(Tok::kPipe);
      pieces.push_back(poly());
    }
    const Token close = expect(Tok::kRParen);
    try {
      return PiecewisePolynomial(std::move(breaks), std::move(pieces));
    } catch (const Error& e) {
      fail_at(close.span, e.what());
    }
  }

  ExprPtr kernel(Expr e) {
    e.kind = ExprKind::kKernel;
    expect(Tok::kLBrace);
    if (!at(Tok::kRBrace)) {
      do {
        if (e.kernel.diagonal) fail_at(peek().span, "the '*' term must come last");
        bool diagonal = false;
        KernelTermLit term;
        if (accept(Tok::kStar)) {
          diagonal = true;
        } else {
          term.source = integer();
          term.target = accept(Tok::kArrow) ? integer() : term.source;
        }
        expect(Tok::kColon);
        expect_ident("t");
        expect(Tok::kArrow);
        PiecewisePolynomial f = kernel_body();
        if (diagonal) {
          e.kernel.diagonal = std::move(f);
        } else {
          term.f = std::move(f);
          e.kernel.terms.push_back(std::move(term));
        }
      } while (accept(Tok::kComma));
    }
    expect(Tok::kRBrace);
    e.on = on_clause();
    return node(std::move(e));
  }

  ExprPtr linec(Expr e) {
    e.kind = ExprKind::kLinec;
    expect(Tok::kLBrace);
    if (!at(Tok::kSemi)) {
      do {
        if (e.linec.extrapolate) fail_at(peek().span, "'...' must end the coefficient list");
        if (accept(Tok::kEllipsis)) {
          e.linec.extrapolate = true;
          continue;
        }
        const std::uint64_t n = integer();
        expect(Tok::kColon);
        e.linec.coefficients.emplace_back(n, scalar());
      } while (accept(Tok::kComma));
    }
    expect(Tok::kSemi);
    ExprPtr unit;
    if (at_ident("unit")) {
      take();
      expect(Tok::kArrow);
      unit = expr();
      expect(Tok::kSemi);
    }
    expect_ident("target");
    e.args.push_back(expr());
    if (unit) {
      e.linec.has_unit = true;
      e.args.push_back(std::move(unit));
    }
    expect(Tok::kRBrace);
    return node(std::move(e));
  }

  ExprPtr table(Expr e) {
    e.kind = ExprKind::kTable;
    expect(Tok::kLBrace);
    if (!at(Tok::kRBrace)) {
      do {
        e.args.push_back(expr());
        expect(Tok::kArrow);
        e.args.push_back(expr());
      } while (accept(Tok::kComma));
    }
    expect(Tok::kRBrace);
    if (at_ident("on")) e.on = on_clause();
    return node(std::move(e));
  }

  ExprPtr primary() {
    const Token t = peek();
    Expr e;
    e.span = t.span;
    switch (t.kind) {
      case Tok::kNumber:
        take();
        e.kind = ExprKind::kNumber;
        try {
          e.number = Scalar::parse(t.text);
        } catch (const Error& err) {
          fail_at(t.span, err.what());
        }
        return node(std::move(e));
      case Tok::kLParen: {
        take();
        ExprPtr inner = expr();
        expect(Tok::kRParen);
        return inner;
      }
      case Tok::kPipe:
        take();
        e.kind = ExprKind::kAbs;
        e.args = {expr()};
        expect(Tok::kPipe);
        return node(std::move(e));
      case Tok::kIdent:
        break;
      default:
        fail("an expression");
    }
    take();
    const std::string& w = t.text;
    if (w == "coord" && at(Tok::kLBracket)) {
      take();
      e.kind = ExprKind::kElement;
      e.element.kind = SpaceKind::kCoordinate;
      e.element.values = scalar_list(Tok::kRBracket);
      expect(Tok::kRBracket);
      return node(std::move(e));
    }
    if (w == "coord" || (w == "fin" && !at(Tok::kLBrace)) || (w == "ec" && !at(Tok::kLBracket)) ||
        (w == "pl" && !at(Tok::kLBrace))) {
      e.kind = ExprKind::kSpace;
      e.space = space_named(t);
      return node(std::move(e));
    }
    if (w == "simple") {
      expect(Tok::kLBrace);
      std::vector<Scalar> partition = scalar_list(Tok::kRBrace);
      expect(Tok::kRBrace);
      if (accept(Tok::kLBracket)) {
        e.kind = ExprKind::kElement;
        e.element.kind = SpaceKind::kSimpleFunction;
        e.element.partition = std::move(partition);
        e.element.values = scalar_list(Tok::kRBracket);
        expect(Tok::kRBracket);
      } else {
        e.kind = ExprKind::kSpace;
        e.space.kind = SpaceKind::kSimpleFunction;
        e.space.partition = std::move(partition);
      }
      return node(std::move(e));
    }
    if (w == "fin" || w == "pl") {
      e.kind = ExprKind::kElement;
      e.element.kind = w == "fin" ? SpaceKind::kFinSupport : SpaceKind::kPiecewiseLinear;
      e.element.pairs = pair_list();
      return node(std::move(e));
    }
    if (w == "ec") {
      expect(Tok::kLBracket);
      e.kind = ExprKind::kElement;
      e.element.kind = SpaceKind::kEventuallyConstant;
      e.element.values = scalar_list(Tok::kPipe);
      expect(Tok::kPipe);
      e.element.tail = scalar();
      expect(Tok::kRBracket);
      return node(std::move(e));
    }
    if (w == "real") {
      expect(Tok::kLBracket);
      e.kind = ExprKind::kReal;
      e.element.values.push_back(scalar());
      if (accept(Tok::kComma)) e.element.values.push_back(scalar());
      expect(Tok::kRBracket);
      return node(std::move(e));
    }
    if (w == "kernel") return kernel(std::move(e));
    if (w == "linec") return linec(std::move(e));
    if (w == "table") return table(std::move(e));
    if (kReserved.contains(w)) fail_at(t.span, "unexpected keyword '" + w + "'");
    e.kind = ExprKind::kIdent;
    e.text = w;
    return node(std::move(e));
  }

  Lexer lex_;
  Token cur_;
  Token prev_;
  bool have_ = false;
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

}  // namespace rieszlab::dsl
