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
#include <string>

#include "rieszlab/dsl/ast.hpp"

namespace rieszlab::dsl {
namespace {

std::string join(const std::vector<Scalar>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

std::string pairs(const std::vector<std::pair<Scalar, Scalar>>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ',';
    out += "(" + ps[i].first.str() + "," + ps[i].second.str() + ")";
  }
  return out + "}";
}

std::string space_text(const SpaceLit& s) {
  switch (s.kind) {
    case SpaceKind::kCoordinate: return "coord(" + std::to_string(s.dimension) + ")";
    case SpaceKind::kSimpleFunction: return "simple{" + join(s.partition) + "}";
    case SpaceKind::kFinSupport: return "fin";
    case SpaceKind::kEventuallyConstant: return "ec";
    case SpaceKind::kPiecewiseLinear: return "pl";
  }
  return "?";
}

std::string element_text(const ElementLit& e) {
  switch (e.kind) {
    case SpaceKind::kCoordinate: return "coord[" + join(e.values) + "]";
    case SpaceKind::kSimpleFunction: return "simple{" + join(e.partition) + "}[" + join(e.values) + "]";
    case SpaceKind::kFinSupport: return "fin" + pairs(e.pairs);
    case SpaceKind::kEventuallyConstant: return "ec[" + join(e.values) + "|" + e.tail.str() + "]";
    case SpaceKind::kPiecewiseLinear: return "pl" + pairs(e.pairs);
  }
  return "?";
}

std::string on_text(const Expr& e) {
  if (!e.on) return "";
  return " on " + space_text(e.on->first) + " -> " + space_text(e.on->second);
}

}  // namespace

bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.text != b.text || a.groups != b.groups || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same(a.args[i], b.args[i])) return false;
  }
  return a.number == b.number && a.space == b.space && a.element == b.element && a.kernel == b.kernel &&
         a.linec == b.linec && a.on == b.on;
}

bool operator==(const Stmt& a, const Stmt& b) {
  return a.kind == b.kind && a.name == b.name && same(a.expr, b.expr) && a.level == b.level &&
         a.options == b.options;
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kNumber: return e.number.str();
    case ExprKind::kIdent: return e.text;
    case ExprKind::kSpace: return space_text(e.space);
    case ExprKind::kElement: return element_text(e.element);
    case ExprKind::kReal: return "real[" + join(e.element.values) + "]";
    case ExprKind::kKernel: {
      std::string out = "kernel{";
      bool first = true;
      for (const auto& t : e.kernel.terms) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(t.source);
        if (t.source != t.target) out += "->" + std::to_string(t.target);
        out += ": t -> " + t.f.str();
      }
      if (e.kernel.diagonal) out += std::string(first ? "" : ", ") + "*: t -> " + e.kernel.diagonal->str();
      return out + "}" + on_text(e);
    }
    case ExprKind::kLinec: {
      std::string out = "linec{";
      for (std::size_t i = 0; i < e.linec.coefficients.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(e.linec.coefficients[i].first) + ":" + e.linec.coefficients[i].second.str();
      }
      if (e.linec.extrapolate) out += e.linec.coefficients.empty() ? "..." : ", ...";
      if (e.linec.has_unit) out += "; unit -> " + print(*e.args[1]);
      return out + "; target " + print(*e.args[0]) + "}";
    }
    case ExprKind::kTable: {
      std::string out = "table{";
      for (std::size_t i = 0; i + 1 < e.args.size(); i += 2) {
        if (i) out += ", ";
        out += print(*e.args[i]) + " -> " + print(*e.args[i + 1]);
      }
      return out + "}" + on_text(e);
    }
    case ExprKind::kUnary: return "(-" + print(*e.args[0]) + ")";
    case ExprKind::kBinary: return "(" + print(*e.args[0]) + " " + e.text + " " + print(*e.args[1]) + ")";
    case ExprKind::kPostfix: return print(*e.args[0]) + e.text;
    case ExprKind::kAbs: return "|" + print(*e.args[0]) + "|";
    case ExprKind::kCall: {
      std::string out = print(*e.args[0]) + "(";
      std::size_t k = 1;
      for (std::size_t g = 0; g < e.groups.size(); ++g) {
        if (g) out += "; ";
        for (std::size_t i = 0; i < e.groups[g]; ++i, ++k) {
          if (i) out += ", ";
          out += print(*e.args[k]);
        }
      }
      return out + ")";
    }
  }
  return "?";
}

std::string print(const Stmt& s) {
  std::string out;
  auto options = [&] {
    for (const auto& [k, v] : s.options) out += " " + k + "=" + v;
  };
  switch (s.kind) {
    case StmtKind::kLet: out = "let " + s.name + " = " + print(*s.expr); break;
    case StmtKind::kEval: out = "eval " + print(*s.expr); break;
    case StmtKind::kFragments: out = "fragments " + print(*s.expr); break;
    case StmtKind::kDecomps: out = "decomps " + print(*s.expr); break;
    case StmtKind::kCheck: out = "check " + s.name; options(); break;
    case StmtKind::kSuite: out = "suite " + s.name; options(); break;
    case StmtKind::kSearch: out = "search"; options(); break;
  }
  if (s.level) out += " @level " + std::to_string(*s.level);
  return out + ";";
}

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += print(st) + "\n";
  return out;
}

std::string Diagnostic::format(std::string_view source_name) const {
  const char* sev = severity == Severity::kError ? "error" : (severity == Severity::kWarning ? "warning" : "note");
  return std::string(source_name) + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + sev +
         ": " + message;
}

}  // namespace rieszlab::dsl
