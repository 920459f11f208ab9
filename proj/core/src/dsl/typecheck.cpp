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
#include <algorithm>
#include <map>
#include <string>

#include "rieszlab/dsl/evaluator.hpp"
#include "rieszlab/error.hpp"
#include "rieszlab/theorem_suite.hpp"

namespace rieszlab::dsl {
namespace {

struct TypeFailure {
  Span span;
  std::string message;
};

[[noreturn]] void fail(Span span, std::string message) { throw TypeFailure{span, std::move(message)}; }

std::string name(Type t) { return std::string(to_string(t)); }

class Checker {
 public:
  std::vector<Diagnostic> run(const Script& script) {
    std::vector<Diagnostic> out;
    for (const auto& s : script.statements) {
      try {
        statement(s);
      } catch (const TypeFailure& f) {
        out.push_back({f.span, f.message, Severity::kError});
      }
    }
    return out;
  }

 private:
  void statement(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kLet: {
        const auto& b = builtin_names();
        if (std::find(b.begin(), b.end(), s.name) != b.end()) {
          fail(s.name_span, "'" + s.name + "' is a built-in name and cannot be rebound");
        }
        // A failed binding still defines the name so one mistake does not
        // cascade into unbound-name errors.
        Type t = Type::kValue;
        try {
          t = infer(*s.expr);
        } catch (const TypeFailure&) {
          env_[s.name] = t;
          throw;
        }
        env_[s.name] = t;
        return;
      }
      case StmtKind::kEval:
        infer(*s.expr);
        return;
      case StmtKind::kFragments:
      case StmtKind::kDecomps:
        want(*s.expr, Type::kValue, s.kind == StmtKind::kFragments ? "fragments" : "decomps");
        return;
      case StmtKind::kCheck: {
        const auto& reg = check_registry();
        if (std::none_of(reg.begin(), reg.end(), [&](const CheckInfo& c) { return c.id == s.name; })) {
          fail(s.name_span, "unknown check id '" + s.name + "'");
        }
        return;
      }
      case StmtKind::kSuite:
        try {
          parse_profile(s.name);
        } catch (const Error& e) {
          fail(s.name_span, e.what());
        }
        for (const auto& [k, v] : s.options) {
          if (k != "seed" && k != "threads") fail(s.span, "suite accepts seed= and threads=, not '" + k + "'");
        }
        return;
      case StmtKind::kSearch:
        for (const auto& [k, v] : s.options) {
          if (k != "seed" && k != "instances" && k != "max_level" && k != "bound") {
            fail(s.span, "search accepts seed=, instances=, max_level= and bound=, not '" + k + "'");
          }
        }
        return;
    }
  }

  Type want(const Expr& e, Type expected, std::string_view where) {
    const Type t = infer(e);
    if (t != expected) {
      fail(e.span, std::string(where) + " needs " + name(expected) + ", got " + name(t));
    }
    return t;
  }

  static bool is_builtin(const std::string& n) {
    const auto& b = builtin_names();
    return std::find(b.begin(), b.end(), n) != b.end();
  }

  Type binary(const Expr& e) {
    const std::string& op = e.text;
    const Type a = infer(*e.args[0]);
    const Type b = infer(*e.args[1]);
    auto mismatch = [&]() -> Type {
      fail(e.span, "operator '" + op + "' is not defined for " + name(a) + " and " + name(b));
    };
    if (op == "\\/" || op == "/\\") {
      if (a != b) return mismatch();
      if (a == Type::kValue || a == Type::kScalar) return a;
      if (a == Type::kOperator) return Type::kLattice;
      return mismatch();
    }
    if (op == "+" || op == "-") {
      if (a == b && (a == Type::kScalar || a == Type::kValue || a == Type::kOperator)) return a;
      return mismatch();
    }
    if (op == "*") {
      if (a == Type::kScalar && (b == Type::kScalar || b == Type::kValue || b == Type::kOperator)) return b;
      return mismatch();
    }
    if (op == "lsup" || op == "linf" || op == "<<=" || op == "_|_") {
      if (a != Type::kValue || b != Type::kValue) return mismatch();
      return op.size() == 4 ? Type::kValue : Type::kBool;
    }
    if (op == "<=" || op == "==") {
      if (a == b && (a == Type::kScalar || a == Type::kValue || (op == "==" && a == Type::kSpace))) {
        return Type::kBool;
      }
      return mismatch();
    }
    return mismatch();
  }

  void arity(const Expr& call, const std::string& fn, std::vector<std::size_t> groups) {
    if (call.groups != groups) {
      std::string shape;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) shape += "; ";
        shape += std::to_string(groups[i]);
      }
      fail(call.span, fn + " takes " + (groups.size() > 1 ? "argument groups of sizes " : "") + shape +
                          (groups.size() > 1 ? "" : " argument(s)"));
    }
  }

  Type call(const Expr& e) {
    const Expr& callee = *e.args[0];
    const std::size_t n = e.args.size() - 1;
    auto arg = [&](std::size_t i) -> const Expr& { return *e.args[i + 1]; };
    if (callee.kind == ExprKind::kIdent && !env_.contains(callee.text) && is_builtin(callee.text)) {
      const std::string& fn = callee.text;
      if (fn == "one" || fn == "zero") {
        arity(e, fn, {1});
        want(arg(0), Type::kSpace, fn);
        return Type::kValue;
      }
      if (fn == "domain" || fn == "codomain") {
        arity(e, fn, {1});
        want(arg(0), Type::kOperator, fn);
        return Type::kSpace;
      }
      if (fn == "pos" || fn == "neg" || fn == "abs" || fn == "mod") {
        arity(e, fn, {1});
        const Type t = infer(arg(0));
        if (t == Type::kValue) return Type::kValue;
        if (t == Type::kOperator) return Type::kLattice;
        fail(arg(0).span, fn + " needs a value or an operator, got " + name(t));
      }
      if (fn == "latsup" || fn == "latinf") {
        if (e.groups.size() != 1 || n < 2 || n > (fn == "latsup" ? 3u : 2u)) {
          fail(e.span, fn == "latsup" ? "latsup takes (x, y) or (x, y, base)" : "latinf takes (x, y)");
        }
        for (std::size_t i = 0; i < n; ++i) want(arg(i), Type::kValue, fn);
        return Type::kValue;
      }
      if (fn == "fragments" || fn == "decomps") {
        arity(e, fn, {1});
        want(arg(0), Type::kValue, fn);
        return Type::kList;
      }
      if (fn == "pliev") {
        if (e.groups.size() != 2 || e.groups[0] == 0 || e.groups[1] == 0) {
          fail(e.span, "pliev takes two nonempty groups: pliev(u1, ...; v1, ...)");
        }
        for (std::size_t i = 0; i < n; ++i) want(arg(i), Type::kValue, fn);
        return Type::kGrid;
      }
      if (fn == "meyer") {
        arity(e, fn, {1, 2, 1});
        want(arg(0), Type::kOperator, fn);
        for (std::size_t i = 1; i < 4; ++i) want(arg(i), Type::kValue, fn);
        return Type::kValue;
      }
      if (fn == "meyer_unsafe") {
        arity(e, fn, {1, 2});
        want(arg(0), Type::kOperator, fn);
        want(arg(1), Type::kValue, fn);
        want(arg(2), Type::kValue, fn);
        return Type::kValue;
      }
      if (fn == "example") {
        if (e.groups.size() != 1 || n < 1 || n > 2 || arg(0).kind != ExprKind::kIdent) {
          fail(e.span, "example takes (name) or (name, f)");
        }
        if (n == 2) want(arg(1), Type::kValue, fn);
        return Type::kOperator;
      }
      if (fn == "series") {
        arity(e, fn, {1});
        want(arg(0), Type::kScalar, fn);
        return Type::kOperator;
      }
      if (fn == "latmeet") {
        arity(e, fn, {2});
        want(arg(0), Type::kValue, fn);
        want(arg(1), Type::kValue, fn);
        return Type::kOperator;
      }
      if (fn == "verify_oao" || fn == "verify_positive" || fn == "verify_dp") {
        arity(e, fn, {1});
        want(arg(0), Type::kOperator, fn);
        return Type::kReport;
      }
      fail(callee.span, "'" + fn + "' cannot be called");
    }
    const Type f = infer(callee);
    if (f != Type::kOperator && f != Type::kLattice) {
      fail(callee.span, "only operators can be applied, got " + name(f));
    }
    arity(e, "an operator", {1});
    want(arg(0), Type::kValue, "operator application");
    return Type::kValue;
  }

  Type infer(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kNumber: return Type::kScalar;
      case ExprKind::kSpace: return Type::kSpace;
      case ExprKind::kElement:
      case ExprKind::kReal: return Type::kValue;
      case ExprKind::kKernel: return Type::kOperator;
      case ExprKind::kLinec: {
        want(*e.args[0], Type::kValue, "linec target");
        if (e.linec.has_unit) {
          const Type u = infer(*e.args[1]);
          if (u != Type::kValue && u != Type::kScalar) fail(e.args[1]->span, "linec unit needs a value");
        }
        return Type::kOperator;
      }
      case ExprKind::kTable:
        for (const auto& a : e.args) want(*a, Type::kValue, "table entry");
        return Type::kOperator;
      case ExprKind::kIdent: {
        if (auto it = env_.find(e.text); it != env_.end()) return it->second;
        if (e.text == "series") return Type::kOperator;
        if (is_builtin(e.text)) fail(e.span, "'" + e.text + "' is a function and needs arguments");
        fail(e.span, "unbound identifier '" + e.text + "'");
      }
      case ExprKind::kUnary: {
        const Type t = infer(*e.args[0]);
        if (t == Type::kScalar || t == Type::kValue || t == Type::kOperator) return t;
        fail(e.span, "unary '-' is not defined for " + name(t));
      }
      case ExprKind::kPostfix:
      case ExprKind::kAbs: {
        const Type t = infer(*e.args[0]);
        if (t == Type::kScalar || t == Type::kValue) return t;
        if (t == Type::kOperator) return Type::kLattice;
        fail(e.span, std::string(e.kind == ExprKind::kAbs ? "|.|" : e.text) + " is not defined for " + name(t));
      }
      case ExprKind::kBinary: return binary(e);
      case ExprKind::kCall: return call(e);
    }
    fail(e.span, "malformed expression");
  }

  std::map<std::string, Type, std::less<>> env_;
};

}  // namespace

std::string_view to_string(Type t) {
  switch (t) {
    case Type::kScalar: return "a scalar";
    case Type::kSpace: return "a space";
    case Type::kValue: return "a value";
    case Type::kOperator: return "an operator";
    case Type::kLattice: return "a pointwise lattice operator";
    case Type::kBool: return "a truth value";
    case Type::kList: return "a list";
    case Type::kReport: return "a check report";
    case Type::kGrid: return "a refinement grid";
  }
  return "?";
}

const std::vector<std::string_view>& builtin_names() {
  static const std::vector<std::string_view> names = {
      "one",   "zero",       "domain",  "codomain", "pos",          "neg",     "abs",        "mod",
      "latsup", "latinf",    "fragments", "decomps", "pliev",       "meyer",   "meyer_unsafe", "example",
      "series", "latmeet",   "verify_oao", "verify_positive", "verify_dp", "coord", "simple", "fin",
      "ec",     "pl",        "real",    "kernel",   "linec",        "table"};
  return names;
}

std::vector<Diagnostic> typecheck(const Script& script) { return Checker().run(script); }

}  // namespace rieszlab::dsl
