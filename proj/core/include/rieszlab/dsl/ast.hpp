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
#ifndef RIESZLAB_DSL_AST_HPP_
#define RIESZLAB_DSL_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rieszlab/dsl/diagnostic.hpp"
#include "rieszlab/polynomial.hpp"
#include "rieszlab/scalar.hpp"
#include "rieszlab/space.hpp"

namespace rieszlab::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Space literal as written: coord(n), simple{t0,...,tm}, fin, ec, pl.
struct SpaceLit {
  SpaceKind kind = SpaceKind::kCoordinate;
  std::uint64_t dimension = 0;
  std::vector<Scalar> partition;
  friend bool operator==(const SpaceLit&, const SpaceLit&) = default;
};

/// Element literal payload, unnormalized.
struct ElementLit {
  SpaceKind kind = SpaceKind::kCoordinate;
  std::vector<Scalar> partition;                  // simple
  std::vector<Scalar> values;                     // coord, simple, ec prefix
  Scalar tail;                                    // ec
  std::vector<std::pair<Scalar, Scalar>> pairs;   // fin (index, value), pl (t, value)
  friend bool operator==(const ElementLit&, const ElementLit&) = default;
};

struct KernelTermLit {
  std::uint64_t source = 0;
  std::uint64_t target = 0;
  PiecewisePolynomial f;
  friend bool operator==(const KernelTermLit&, const KernelTermLit&) = default;
};

struct KernelLit {
  std::vector<KernelTermLit> terms;
  std::optional<PiecewisePolynomial> diagonal;
  friend bool operator==(const KernelLit&, const KernelLit&) = default;
};

/// linec{n:a, ...[, ...]; unit -> u; target f}; unit and target are the
/// first two operands of the node (unit absent means 0).
struct LinecLit {
  std::vector<std::pair<std::uint64_t, Scalar>> coefficients;
  bool extrapolate = false;
  bool has_unit = false;
  friend bool operator==(const LinecLit&, const LinecLit&) = default;
};

enum class ExprKind {
  kNumber,    // text: the rational
  kIdent,     // text: the name
  kSpace,     // space
  kElement,   // element
  kReal,      // real[a] or real[a,b]; element.values holds the endpoints
  kKernel,    // kernel, on = {domain, codomain}
  kLinec,     // linec, args = {target, unit?}
  kTable,     // args = key, value, key, value, ...; on optional
  kUnary,     // text: "-"; args = {operand}
  kBinary,    // text: operator spelling; args = {lhs, rhs}
  kPostfix,   // text: "^+" or "^-"
  kAbs,       // |x|
  kCall,      // args[0] callee, then arguments; groups = sizes of ';'-separated groups
};

struct Expr {
  ExprKind kind = ExprKind::kNumber;
  Span span;
  std::string text;
  std::vector<ExprPtr> args;
  std::vector<std::size_t> groups;
  Scalar number;
  SpaceLit space;
  ElementLit element;
  KernelLit kernel;
  LinecLit linec;
  std::optional<std::pair<SpaceLit, SpaceLit>> on;
};

/// Structural equality ignoring spans.
bool operator==(const Expr& a, const Expr& b);
bool same(const ExprPtr& a, const ExprPtr& b);

enum class StmtKind { kLet, kEval, kCheck, kSuite, kSearch, kFragments, kDecomps };

struct Stmt {
  StmtKind kind = StmtKind::kEval;
  Span span;
  /// Bound name (let), check id (check), profile (suite).
  std::string name;
  Span name_span;
  ExprPtr expr;
  std::optional<std::uint64_t> level;
  std::vector<std::pair<std::string, std::string>> options;
};

bool operator==(const Stmt& a, const Stmt& b);

struct Script {
  std::vector<Stmt> statements;
  friend bool operator==(const Script& a, const Script& b) { return a.statements == b.statements; }
};

/// ASCII source text that parses back to an equal tree.
std::string print(const Expr& e);
std::string print(const Stmt& s);
std::string print(const Script& s);

}  // namespace rieszlab::dsl

#endif  // RIESZLAB_DSL_AST_HPP_
