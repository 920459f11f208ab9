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

#ifndef RIESZLAB_ELEMENT_HPP_
#define RIESZLAB_ELEMENT_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rieszlab/scalar.hpp"
#include "rieszlab/space.hpp"

namespace rieszlab {

/// Nonzero entry of a finitely supported sequence; indices start at 1.
struct SparseEntry {
  std::uint64_t index;
  Scalar value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Vertex (t, value) of a continuous piecewise linear function on [0,1].
struct Breakpoint {
  Scalar t;
  Scalar value;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// A vector of one of the concrete spaces, always held in canonical form:
///
///   - coordinate / simple function: one scalar per atom;
///   - fin support: entries sorted by index, no zero values;
///   - eventually constant: minimal prefix (last prefix entry != tail);
///   - piecewise linear: breakpoints at 0 and 1, no collinear interior vertex.
///
/// Canonical form makes equality syntactic. The static factories are the
/// normalizers: they accept any structurally valid raw payload and throw
/// StructuralError otherwise.
class Element {
 public:
  static Element coordinate(std::vector<Scalar> values);
  static Element simple_function(const Space& space, std::vector<Scalar> cell_values);
  /// Coordinate or simple-function element from one value per atom.
  static Element dense(const Space& space, std::vector<Scalar> values);
  static Element fin_support(std::vector<SparseEntry> entries);
  static Element eventually_constant(std::vector<Scalar> prefix, Scalar tail);
  static Element piecewise_linear(std::vector<Breakpoint> points);

  const Space& space() const { return space_; }

  std::span<const Scalar> dense_values() const;
  std::span<const SparseEntry> entries() const;
  std::span<const Scalar> prefix() const;
  const Scalar& tail() const;
  std::span<const Breakpoint> points() const;

  /// Value at atom `index` (1-based) of an atomic space.
  Scalar atom(std::uint64_t index) const;
  /// Value at t in [0,1] of a piecewise linear element.
  Scalar at(const Scalar& t) const;

  bool is_zero() const;

  /// Literal syntax, e.g. coord[1,-2], ec[1,5|5], pl{(0,0),(1,1)}.
  std::string str() const;

  friend bool operator==(const Element& a, const Element& b);
  friend std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.str(); }

 private:
  explicit Element(Space space) : space_(std::move(space)) {}

  Space space_;
  std::vector<Scalar> values_;  // dense values, or the eventually-constant prefix
  std::vector<SparseEntry> entries_;
  Scalar tail_;
  std::vector<Breakpoint> points_;
};

/// Linear interpolation between (t0, v0) and (t1, v1) at t.
Scalar interpolate(const Breakpoint& left, const Breakpoint& right, const Scalar& t);

}  // namespace rieszlab

#endif  // RIESZLAB_ELEMENT_HPP_
