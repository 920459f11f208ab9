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

#include "rieszlab/element.hpp"

#include <algorithm>

#include "rieszlab/error.hpp"

namespace rieszlab {
namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.value - a.value) * (c.t - b.t) == (c.value - b.value) * (b.t - a.t);
}

void require_kind(const Space& space, SpaceKind kind, const char* what) {
  if (space.kind() != kind) {
    throw DomainError(std::string(what) + " is not defined for elements of " + space.str());
  }
}

std::string join_scalars(std::span<const Scalar> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

}  // namespace

Element Element::coordinate(std::vector<Scalar> values) {
  Space space = Space::coordinate(values.size());
  Element e(std::move(space));
  e.values_ = std::move(values);
  return e;
}

Element Element::simple_function(const Space& space, std::vector<Scalar> cell_values) {
  require_kind(space, SpaceKind::kSimpleFunction, "simple_function");
  if (cell_values.size() != space.atom_count()) {
    throw StructuralError("simple function needs " + std::to_string(space.atom_count()) +
                          " cell values, got " + std::to_string(cell_values.size()));
  }
  Element e(space);
  e.values_ = std::move(cell_values);
  return e;
}

Element Element::dense(const Space& space, std::vector<Scalar> values) {
  if (space.kind() == SpaceKind::kCoordinate) {
    if (values.size() != space.dimension()) {
      throw StructuralError("coordinate element needs " + std::to_string(space.dimension()) +
                            " values, got " + std::to_string(values.size()));
    }
    return coordinate(std::move(values));
  }
  return simple_function(space, std::move(values));
}

Element Element::fin_support(std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].index == 0) throw StructuralError("sequence indices start at 1");
    if (i && entries[i].index == entries[i - 1].index) {
      throw StructuralError("duplicate index " + std::to_string(entries[i].index));
    }
  }
  std::erase_if(entries, [](const SparseEntry& s) { return s.value.is_zero(); });
  Element e(Space::fin_support());
  e.entries_ = std::move(entries);
  return e;
}

Element Element::eventually_constant(std::vector<Scalar> prefix, Scalar tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  Element e(Space::eventually_constant());
  e.values_ = std::move(prefix);
  e.tail_ = std::move(tail);
  return e;
}

Element Element::piecewise_linear(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw StructuralError("piecewise linear element needs breakpoints at 0 and 1");
  if (points.front().t != Scalar(0) || points.back().t != Scalar(1)) {
    throw StructuralError("piecewise linear breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].t < points[i].t)) {
      throw StructuralError("piecewise linear breakpoints must be strictly increasing");
    }
  }
  std::vector<Breakpoint> kept;
  kept.reserve(points.size());
  for (auto& p : points) {
    while (kept.size() >= 2 && collinear(kept[kept.size() - 2], kept.back(), p)) kept.pop_back();
    kept.push_back(std::move(p));
  }
  Element e(Space::piecewise_linear());
  e.points_ = std::move(kept);
  return e;
}

std::span<const Scalar> Element::dense_values() const {
  if (!space_.is_dense()) throw DomainError("dense values requested from " + space_.str());
  return values_;
}

std::span<const SparseEntry> Element::entries() const {
  require_kind(space_, SpaceKind::kFinSupport, "entries");
  return entries_;
}

std::span<const Scalar> Element::prefix() const {
  require_kind(space_, SpaceKind::kEventuallyConstant, "prefix");
  return values_;
}

const Scalar& Element::tail() const {
  require_kind(space_, SpaceKind::kEventuallyConstant, "tail");
  return tail_;
}

std::span<const Breakpoint> Element::points() const {
  require_kind(space_, SpaceKind::kPiecewiseLinear, "points");
  return points_;
}

Scalar Element::atom(std::uint64_t index) const {
  if (index == 0) throw DomainError("atoms are numbered from 1");
  switch (space_.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction:
      if (index > values_.size()) throw DomainError("atom index out of range");
      return values_[index - 1];
    case SpaceKind::kFinSupport: {
      auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                 [](const SparseEntry& s, std::uint64_t i) { return s.index < i; });
      return it != entries_.end() && it->index == index ? it->value : Scalar(0);
    }
    case SpaceKind::kEventuallyConstant:
      return index <= values_.size() ? values_[index - 1] : tail_;
    case SpaceKind::kPiecewiseLinear:
      break;
  }
  throw DomainError("piecewise linear space has no atoms");
}

Scalar Element::at(const Scalar& t) const {
  require_kind(space_, SpaceKind::kPiecewiseLinear, "point evaluation");
  if (t < Scalar(0) || t > Scalar(1)) throw DomainError("evaluation point outside [0,1]");
  auto it = std::lower_bound(points_.begin(), points_.end(), t,
                             [](const Breakpoint& b, const Scalar& s) { return b.t < s; });
  if (it->t == t) return it->value;
  return interpolate(*(it - 1), *it, t);
}

bool Element::is_zero() const {
  switch (space_.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction:
      return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
    case SpaceKind::kFinSupport:
      return entries_.empty();
    case SpaceKind::kEventuallyConstant:
      return values_.empty() && tail_.is_zero();
    case SpaceKind::kPiecewiseLinear:
      return points_.size() == 2 && points_[0].value.is_zero() && points_[1].value.is_zero();
  }
  return false;
}

std::string Element::str() const {
  switch (space_.kind()) {
    case SpaceKind::kCoordinate:
      return "coord[" + join_scalars(values_) + "]";
    case SpaceKind::kSimpleFunction:
      return space_.str() + "[" + join_scalars(values_) + "]";
    case SpaceKind::kFinSupport: {
      std::string out = "fin{";
      for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += "(" + std::to_string(entries_[i].index) + "," + entries_[i].value.str() + ")";
      }
      return out + "}";
    }
    case SpaceKind::kEventuallyConstant:
      return "ec[" + join_scalars(values_) + "|" + tail_.str() + "]";
    case SpaceKind::kPiecewiseLinear: {
      std::string out = "pl{";
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) out += ',';
        out += "(" + points_[i].t.str() + "," + points_[i].value.str() + ")";
      }
      return out + "}";
    }
  }
  return "?";
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.space_ == b.space_)) return false;
  return a.values_ == b.values_ && a.entries_ == b.entries_ && a.tail_ == b.tail_ &&
         a.points_ == b.points_;
}

Scalar interpolate(const Breakpoint& left, const Breakpoint& right, const Scalar& t) {
  return left.value + (right.value - left.value) * (t - left.t) / (right.t - left.t);
}

}  // namespace rieszlab
