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

#ifndef RIESZLAB_VALUE_HPP_
#define RIESZLAB_VALUE_HPP_

#include <optional>
#include <string>
#include <variant>

#include "rieszlab/element.hpp"
#include "rieszlab/scalar.hpp"

namespace rieszlab {

/// Rational enclosure [lower, upper] of a real number that is irrational in
/// general. Only the alternating-series functional produces these.
struct RealInterval {
  Scalar lower;
  Scalar upper;

  static RealInterval point(const Scalar& v) { return {v, v}; }

  Scalar width() const { return upper - lower; }
  bool is_point() const { return lower == upper; }
  bool contains(const Scalar& v) const { return lower <= v && v <= upper; }

  std::string str() const;
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

/// Result of applying an operator: an exact element, or a real interval for
/// real-valued operators.
///
/// Real values and elements of coord(1) are interchangeable; mixed arithmetic
/// promotes to intervals. Comparisons between overlapping non-degenerate
/// intervals are undecided and report std::nullopt.
class Value {
 public:
  Value(Element e) : v_(std::move(e)) {}        // NOLINT(google-explicit-constructor)
  Value(RealInterval r) : v_(std::move(r)) {}   // NOLINT(google-explicit-constructor)

  bool is_element() const { return std::holds_alternative<Element>(v_); }
  bool is_interval() const { return std::holds_alternative<RealInterval>(v_); }
  const Element& element() const;
  const RealInterval& interval() const;

  /// Exact when an element, or a degenerate interval.
  bool is_exact() const { return is_element() || interval().is_point(); }
  /// The exact element; degenerate intervals become coord(1) elements.
  /// Throws PreconditionError for a proper interval.
  Element exact() const;
  /// Interval view of a coord(1) element or an interval.
  RealInterval as_interval() const;

  bool is_zero() const;
  std::string str() const;

  /// Exact structural equality (intervals compare by endpoints).
  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<Element, RealInterval> v_;
};

Value operator+(const Value& a, const Value& b);
Value operator-(const Value& a, const Value& b);
Value operator-(const Value& a);
Value operator*(const Scalar& c, const Value& a);

Value value_sup(const Value& a, const Value& b);
Value value_inf(const Value& a, const Value& b);
Value value_pos(const Value& a);
Value value_neg(const Value& a);
Value value_abs(const Value& a);

/// a <= b; nullopt when intervals overlap so the order is not decided.
std::optional<bool> value_leq(const Value& a, const Value& b);
/// a and b are disjoint; nullopt when undecided.
std::optional<bool> value_disjoint(const Value& a, const Value& b);
/// a ⊑ b; nullopt when undecided.
std::optional<bool> value_fragment(const Value& a, const Value& b);

}  // namespace rieszlab

#endif  // RIESZLAB_VALUE_HPP_
