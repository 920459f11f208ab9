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

#include "rieszlab/lateral.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#include "rieszlab/error.hpp"
#include "rieszlab/riesz.hpp"

namespace rieszlab {
namespace testing {
namespace {
std::atomic<Mutation> g_mutation{Mutation::kNone};
}  // namespace

Mutation active_mutation() { return g_mutation.load(std::memory_order_relaxed); }
void set_mutation(Mutation m) { g_mutation.store(m, std::memory_order_relaxed); }

}  // namespace testing

namespace {

// Canonical points of x with the strict zero crossings inserted, so every
// zero of x on a segment is a vertex or the whole segment.
std::vector<Breakpoint> with_zero_crossings(const Element& x) {
  auto pts = x.points();
  std::vector<Breakpoint> out;
  out.reserve(pts.size() * 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0 && pts[i - 1].value.sign() * pts[i].value.sign() < 0) {
      const Scalar& v0 = pts[i - 1].value;
      const Scalar& v1 = pts[i].value;
      out.push_back({pts[i - 1].t + (pts[i].t - pts[i - 1].t) * v0 / (v0 - v1), Scalar(0)});
    }
    out.push_back(pts[i]);
  }
  return out;
}

std::vector<Component> components_of(const std::vector<Breakpoint>& pts) {
  std::vector<Component> out;
  std::optional<Scalar> start;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool zero_segment = pts[i].value.is_zero() && pts[i + 1].value.is_zero();
    if (zero_segment) continue;
    if (!start) start = pts[i].t;
    if (pts[i + 1].value.is_zero() || i + 2 == pts.size()) {
      out.push_back({*start, pts[i + 1].t});
      start.reset();
    }
  }
  return out;
}

bool inside(const Scalar& t, const Component& c) { return c.a <= t && t <= c.b; }

// x restricted to the union of `keep`, zero elsewhere. The components are
// those of x, so x vanishes at every interior component boundary.
Element restrict_to(const std::vector<Breakpoint>& pts, std::span<const Component> keep) {
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    const bool kept = std::any_of(keep.begin(), keep.end(), [&](const Component& c) { return inside(p.t, c); });
    out.push_back({p.t, kept ? p.value : Scalar(0)});
  }
  return Element::piecewise_linear(std::move(out));
}

bool agree_on(const Element& x, const Element& y, const Component& c) {
  auto check = [&](std::span<const Breakpoint> pts) {
    for (const auto& p : pts) {
      if (inside(p.t, c) && x.at(p.t) != y.at(p.t)) return false;
    }
    return true;
  };
  return x.at(c.a) == y.at(c.a) && x.at(c.b) == y.at(c.b) && check(x.points()) && check(y.points());
}

Element meet_formula(const Element& x, const Element& y) {
  return inf(pos(x), pos(y)) - inf(neg(x), neg(y));
}

std::vector<Element> atomic_pieces(const Element& e, std::size_t prefix_atoms, bool tail_piece) {
  std::vector<Element> pieces;
  const Space& space = e.space();
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      auto v = e.dense_values();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        std::vector<Scalar> values(v.size(), Scalar(0));
        values[i] = v[i];
        pieces.push_back(Element::dense(space, std::move(values)));
      }
      break;
    }
    case SpaceKind::kFinSupport:
      for (const auto& entry : e.entries()) pieces.push_back(Element::fin_support({entry}));
      break;
    case SpaceKind::kEventuallyConstant:
      for (std::size_t n = 1; n <= prefix_atoms; ++n) {
        Scalar v = e.atom(n);
        if (v.is_zero()) continue;
        std::vector<Scalar> prefix(n, Scalar(0));
        prefix[n - 1] = std::move(v);
        pieces.push_back(Element::eventually_constant(std::move(prefix), Scalar(0)));
      }
      if (tail_piece && !e.tail().is_zero()) {
        pieces.push_back(Element::eventually_constant(std::vector<Scalar>(prefix_atoms, Scalar(0)), e.tail()));
      }
      break;
    case SpaceKind::kPiecewiseLinear:
      break;
  }
  return pieces;
}

void check_piece_count(const std::vector<Element>& pieces) {
  if (pieces.size() > kMaxFragmentPieces) {
    throw UnsupportedError("fragment enumeration with " + std::to_string(pieces.size()) +
                           " generating pieces exceeds the indexable limit of " +
                           std::to_string(kMaxFragmentPieces));
  }
}

}  // namespace

bool is_fragment(const Element& x, const Element& e) {
  require_same_space(x.space(), e.space(), "is_fragment");
  return is_disjoint(x, e - x);
}

Element lateral_sup(const Element& x, const Element& y) {
  require_same_space(x.space(), y.space(), "lateral_sup");
  if (testing::active_mutation() == testing::Mutation::kLateralSupSignFlip) {
    return sup(pos(x), pos(y)) + sup(neg(x), neg(y));
  }
  return sup(pos(x), pos(y)) - sup(neg(x), neg(y));
}

Element lateral_sup(const Element& x, const Element& y, const Element& base) {
  if (!is_fragment(x, base)) throw PreconditionError("lateral_sup: " + x.str() + " is not a fragment of " + base.str());
  if (!is_fragment(y, base)) throw PreconditionError("lateral_sup: " + y.str() + " is not a fragment of " + base.str());
  return lateral_sup(x, y);
}

Element lateral_inf(const Element& x, const Element& y) {
  require_same_space(x.space(), y.space(), "lateral_inf");
  switch (testing::active_mutation()) {
    case testing::Mutation::kLateralInfMeetFormula:
      return meet_formula(x, y);
    case testing::Mutation::kLateralInfLatticeMeet:
      return inf(x, y);
    default:
      break;
  }
  if (x.space().is_atomic()) {
    return combine_atoms(x, y, [](const Scalar& a, const Scalar& b) { return a == b ? a : Scalar(0); });
  }
  const std::vector<Breakpoint> pts = with_zero_crossings(x);
  std::vector<Component> keep;
  for (const auto& c : components_of(pts)) {
    if (agree_on(x, y, c)) keep.push_back(c);
  }
  return restrict_to(pts, keep);
}

std::vector<Component> support_components(const Element& x) {
  return components_of(with_zero_crossings(x));
}

FragmentEnumeration::FragmentEnumeration(Element base, Mode mode, std::size_t level, std::vector<Element> pieces)
    : base_(std::move(base)), mode_(mode), level_(level), pieces_(std::move(pieces)) {}

std::uint64_t FragmentEnumeration::size() const {
  check_piece_count(pieces_);
  return std::uint64_t{1} << pieces_.size();
}

Element FragmentEnumeration::at(std::uint64_t mask) const {
  if (mask >= size()) throw DomainError("fragment index out of range");
  Element out = zero(base_.space());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (mask >> i & 1U) out = out + pieces_[i];
  }
  return out;
}

std::vector<Element> FragmentEnumeration::materialize() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint64_t m = 0; m < size(); ++m) out.push_back(at(m));
  return out;
}

bool has_finite_fragments(const Element& e) {
  return e.space().kind() != SpaceKind::kEventuallyConstant || e.tail().is_zero();
}

FragmentEnumeration enumerate_fragments(const Element& e) {
  if (!has_finite_fragments(e)) {
    throw PreconditionError("enumerate_fragments: " + e.str() +
                            " has infinitely many fragments; use a truncation level");
  }
  if (e.space().kind() == SpaceKind::kPiecewiseLinear) {
    const std::vector<Breakpoint> pts = with_zero_crossings(e);
    std::vector<Element> pieces;
    for (const auto& c : components_of(pts)) pieces.push_back(restrict_to(pts, std::span(&c, 1)));
    return FragmentEnumeration(e, FragmentEnumeration::Mode::kExact, 0, std::move(pieces));
  }
  const std::size_t prefix_atoms =
      e.space().kind() == SpaceKind::kEventuallyConstant ? e.prefix().size() : 0;
  return FragmentEnumeration(e, FragmentEnumeration::Mode::kExact, 0, atomic_pieces(e, prefix_atoms, false));
}

FragmentEnumeration fragment_iter(const Element& e, std::size_t level) {
  if (e.space().kind() != SpaceKind::kEventuallyConstant) {
    throw PreconditionError("fragment_iter needs an eventually constant element, got " + e.space().str());
  }
  if (level < e.prefix().size()) {
    throw PreconditionError("fragment_iter: level " + std::to_string(level) + " is below the prefix length " +
                            std::to_string(e.prefix().size()) + " of " + e.str());
  }
  return FragmentEnumeration(e, FragmentEnumeration::Mode::kTruncated, level, atomic_pieces(e, level, true));
}

FragmentEnumeration fragments(const Element& e, std::optional<std::size_t> level) {
  if (level && e.space().kind() == SpaceKind::kEventuallyConstant) return fragment_iter(e, *level);
  return enumerate_fragments(e);
}

Decomposition decomposition_at(const FragmentEnumeration& fragments, std::uint64_t mask) {
  Element left = fragments.at(mask);
  Element right = fragments.base() - left;
  return {fragments.base(), std::move(left), std::move(right)};
}

std::vector<Decomposition> enumerate_decompositions(const Element& x, std::optional<std::size_t> level) {
  const FragmentEnumeration frags = fragments(x, level);
  std::vector<Decomposition> out;
  out.reserve(frags.size());
  for (std::uint64_t m = 0; m < frags.size(); ++m) out.push_back(decomposition_at(frags, m));
  return out;
}

PlievGrid pliev_grid(std::span<const Element> us, std::span<const Element> vs) {
  if (us.empty() || vs.empty()) throw PreconditionError("pliev_grid needs nonempty splittings");
  auto check_disjoint = [](std::span<const Element> xs, const char* name) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (!is_disjoint(xs[i], xs[j])) {
          throw PreconditionError(std::string("pliev_grid: ") + name + "[" + std::to_string(i) + "] = " +
                                  xs[i].str() + " and " + name + "[" + std::to_string(j) + "] = " +
                                  xs[j].str() + " are not disjoint");
        }
      }
    }
  };
  check_disjoint(us, "us");
  check_disjoint(vs, "vs");
  Element su = us[0];
  for (std::size_t i = 1; i < us.size(); ++i) su = su + us[i];
  Element sv = vs[0];
  for (std::size_t k = 1; k < vs.size(); ++k) sv = sv + vs[k];
  if (!(su == sv)) {
    throw PreconditionError("pliev_grid: sum of us " + su.str() + " differs from sum of vs " + sv.str());
  }
  PlievGrid out{{us.begin(), us.end()}, {vs.begin(), vs.end()}, {}};
  out.grid.resize(us.size());
  for (std::size_t i = 0; i < us.size(); ++i) {
    out.grid[i].reserve(vs.size());
    for (const auto& v : vs) out.grid[i].push_back(lateral_inf(us[i], v));
  }
  return out;
}

}  // namespace rieszlab
