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

#ifndef RIESZLAB_OPERATOR_HPP_
#define RIESZLAB_OPERATOR_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rieszlab/element.hpp"
#include "rieszlab/polynomial.hpp"
#include "rieszlab/space.hpp"
#include "rieszlab/value.hpp"

namespace rieszlab {

struct OperatorNode;

/// An orthogonally additive operator between two of the concrete spaces.
///
/// Immutable and cheap to copy (shared representation). Build instances with
/// the make_* functions below, which validate the representation invariants.
class Operator {
 public:
  const Space& domain() const;
  const Space& codomain() const;
  /// Values are real intervals rather than exact elements.
  bool real_valued() const;
  const OperatorNode& node() const { return *node_; }

  /// DSL literal, including the domain/codomain annotation.
  std::string str() const;

 private:
  explicit Operator(std::shared_ptr<const OperatorNode> node) : node_(std::move(node)) {}
  friend Operator make_operator(OperatorNode node);

  std::shared_ptr<const OperatorNode> node_;
};

/// T(x) at atom `target` gets f(x_source). Atoms not named as a source use
/// the diagonal function, if any, and land on the same atom index.
struct KernelTerm {
  std::uint64_t source;
  std::uint64_t target;
  PiecewisePolynomial f;
};

struct Kernel {
  std::vector<KernelTerm> terms;
  std::optional<PiecewisePolynomial> diagonal;
};

/// Coefficients a_1, a_2, ... given by a finite table. With `extrapolate`,
/// values past the last key K continue the arithmetic progression through
/// keys K-1 and K (constant if the table has one key); otherwise they are 0.
struct CoefficientRule {
  std::map<std::uint64_t, Scalar> table;
  bool extrapolate = false;

  Scalar at(std::uint64_t n) const;
};

/// Linear operator on the eventually constant sequences, written in the basis
/// {e_n} ∪ {1}: T(e_n) = a_n·target and T(1) = unit_value, so for x with tail c
///   T(x) = Σ_n a_n (x_n − c)·target + c·unit_value.
struct LinearEC {
  CoefficientRule coefficients;
  Element target;
  Element unit_value;
};

/// x ↦ value when x equals a key, 0 otherwise.
struct MatchTable {
  std::vector<std::pair<Element, Element>> entries;
};

/// x ↦ (x ⊓ a) − (x ⊓ b).
struct LateralMeet {
  Element a;
  Element b;
};

/// x ↦ Σ_{n≥1} (−1)^n |x_n| / n on the eventually constant sequences, as a
/// real interval of width at most `tolerance`.
struct AlternatingSeries {
  Scalar tolerance;
};

struct OperatorSum {
  std::vector<Operator> terms;
};

struct OperatorScaled {
  Scalar factor;
  Operator inner;
};

using OperatorBody =
    std::variant<Kernel, LinearEC, MatchTable, LateralMeet, AlternatingSeries, OperatorSum, OperatorScaled>;

struct OperatorNode {
  Space domain;
  Space codomain;
  bool real_valued;
  OperatorBody body;
};

Operator make_kernel(const Space& domain, const Space& codomain, Kernel kernel);
Operator make_linear_ec(CoefficientRule coefficients, Element target, Element unit_value);
/// Validates keys (distinct, nonzero) and rejects tables that are not
/// additive on the disjoint decompositions of their own keys. Keys with
/// infinitely many fragments are checked up to `validation_level`.
Operator make_match_table(const Space& domain, const Space& codomain,
                          std::vector<std::pair<Element, Element>> entries, std::size_t validation_level = 8);
Operator make_lateral_meet(Element a, Element b);
Operator make_alternating_series(Scalar tolerance = Scalar::pow10_inverse(9));
Operator make_sum(std::vector<Operator> terms);
Operator make_scaled(Scalar factor, Operator inner);

Operator operator+(const Operator& s, const Operator& t);
Operator operator-(const Operator& s, const Operator& t);
Operator operator-(const Operator& t);
Operator operator*(const Scalar& c, const Operator& t);

/// T(x). Throws DomainError when x is outside the domain.
Value apply(const Operator& op, const Element& x);

/// True when the representation is linear (linear kernels, LinearEC, and sums
/// and multiples of those).
bool is_linear(const Operator& op);

/// Elements that an operator treats specially (table keys, lateral-meet
/// parameters, ...); samplers probe these first.
std::vector<Element> distinguished_points(const Operator& op);

/// Enclosure of ln 2 of width at most `tolerance`.
RealInterval ln2_enclosure(const Scalar& tolerance);

/// Named example operators used by the theorem suite:
///   plram_series  alternating series on the eventually constant sequences
///   knbdbj        LinearEC with a_n = n, unit value 0, target `parameter`
///                 (default: the constant 1 of ec)
///   meyer_pl      table {1 ↦ 1, 2·1 ↦ −1} on the piecewise linear functions
///   lateral_meet  x ↦ x ⊓ 1 − x ⊓ 2·1 on simple functions; `parameter`, if
///                 given, is any element of the target simple-function space
/// Throws LookupError for an unknown id.
Operator named_example(std::string_view id, const std::optional<Element>& parameter = std::nullopt);

/// Default partition {0, 1/2, 1} used by the lateral_meet example.
Space default_simple_space();

}  // namespace rieszlab

#endif  // RIESZLAB_OPERATOR_HPP_
