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
// The individual checks of the theorem suite. Each runner draws instances
// from its own generator, verifies every instance exactly, and stops at the
// first violation with a witness.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/operator_lattice.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/verify.hpp"
#include "suite_internal.hpp"

namespace rieszlab::suite {
namespace {

// Fragment sets up to this many pieces are walked in full.
constexpr std::size_t kWalkPieces = 8;

std::string ops(const Operator& s, const Operator& t) { return "S = " + s.str() + ", T = " + t.str(); }

// Random element whose fragment algebra is finite; an eventually constant
// tail c is moved into the prefix.
Element finite_element(InstanceGenerator& gen, const Space& space) {
  Element x = gen.element(space);
  if (has_finite_fragments(x)) return x;
  std::vector<Scalar> prefix(x.prefix().begin(), x.prefix().end());
  prefix.push_back(x.tail());
  return Element::eventually_constant(std::move(prefix), Scalar(0));
}

Element small_element(InstanceGenerator& gen, const Space& space) {
  for (;;) {
    Element x = finite_element(gen, space);
    if (enumerate_fragments(x).pieces().size() <= kWalkPieces) return x;
  }
}

Value fold(const std::vector<Value>& values, bool take_sup, bool reverse) {
  std::optional<Value> acc;
  auto step = [&](const Value& v) { acc = !acc ? v : (take_sup ? value_sup(*acc, v) : value_inf(*acc, v)); };
  if (reverse) {
    for (auto it = values.rbegin(); it != values.rend(); ++it) step(*it);
  } else {
    for (const auto& v : values) step(v);
  }
  if (!acc) throw PreconditionError("fold over an empty set");
  return *acc;
}

std::vector<Value> images(const Operator& t, const std::vector<Element>& xs) {
  std::vector<Value> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(apply(t, x));
  return out;
}

// Conjunction of two possibly undecided comparisons.
std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
  if (a == false || b == false) return false;
  if (!a || !b) return std::nullopt;
  return true;
}

// ---------------------------------------------------------------- Riesz laws

std::optional<std::string> binary_laws(const Element& x, const Element& y) {
  if (!(x == pos(x) - neg(x))) return "x = x+ - x-";
  if (!(abs(x) == pos(x) + neg(x))) return "|x| = x+ + x-";
  if (!inf(pos(x), neg(x)).is_zero()) return "x+ /\\ x- = 0";
  if (!(sup(x, y) == sup(y, x)) || !(inf(x, y) == inf(y, x))) return "commutativity";
  if (!(sup(x, inf(x, y)) == x) || !(inf(x, sup(x, y)) == x)) return "absorption";
  if (!(sup(x, y) + inf(x, y) == x + y)) return "x \\/ y + x /\\ y = x + y";
  const bool d = is_disjoint(x, y);
  if (d != inf(abs(x), abs(y)).is_zero() || d != (abs(x + y) == abs(x - y))) return "disjointness characterizations";
  return std::nullopt;
}

std::optional<std::string> ternary_laws(const Element& x, const Element& y, const Element& z) {
  if (!(sup(sup(x, y), z) == sup(x, sup(y, z)))) return "associativity of \\/";
  if (!(inf(inf(x, y), z) == inf(x, inf(y, z)))) return "associativity of /\\";
  if (!(sup(x + z, y + z) == sup(x, y) + z)) return "translation invariance";
  return std::nullopt;
}

std::optional<std::string> scaling_law(const Scalar& c, const Element& x) {
  if (!(abs(c * x) == c.abs() * abs(x))) return "|c x| = |c| |x|";
  return std::nullopt;
}

std::vector<Element> coordinate_grid(std::size_t dimension, std::int64_t radius) {
  std::vector<Element> out;
  std::vector<std::int64_t> v(dimension, -radius);
  for (;;) {
    std::vector<Scalar> values(v.begin(), v.end());
    out.push_back(Element::coordinate(std::move(values)));
    std::size_t i = 0;
    while (i < dimension && v[i] == radius) v[i++] = -radius;
    if (i == dimension) break;
    ++v[i];
  }
  return out;
}

void riesz_laws(Ctx& c) {
  const auto radius = static_cast<std::int64_t>(c.option("radius", 2, 0, 3));
  const auto triple_radius = static_cast<std::int64_t>(c.option("triple_radius", 2, 0, 2));
  const auto grid = coordinate_grid(3, radius);
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      c.instance();
      const auto bad = binary_laws(x, y);
      if (!c.expect(!bad, [&] { return Failure{{x, y}, *bad}; })) return;
    }
    for (const Scalar& k : {Scalar(-2), Scalar(-1, 2), Scalar(0), Scalar(3, 2)}) {
      const auto bad = scaling_law(k, x);
      if (!c.expect(!bad, [&] { return Failure{{x}, *bad + " with c = " + k.str()}; })) return;
    }
  }
  // Pairwise sup, inf and sum are tabulated once so each triple costs six
  // lattice operations instead of thirteen.
  const auto small = coordinate_grid(3, triple_radius);
  const std::size_t m = small.size();
  std::vector<Element> sups, infs, sums;
  sups.reserve(m * m);
  infs.reserve(m * m);
  sums.reserve(m * m);
  for (const auto& x : small) {
    for (const auto& y : small) {
      sups.push_back(sup(x, y));
      infs.push_back(inf(x, y));
      sums.push_back(x + y);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        c.instance();
        const Element& x = small[i];
        const Element& y = small[j];
        const Element& z = small[k];
        std::optional<std::string> bad;
        if (!(sup(sups[i * m + j], z) == sup(x, sups[j * m + k]))) {
          bad = "associativity of \\/";
        } else if (!(inf(infs[i * m + j], z) == inf(x, infs[j * m + k]))) {
          bad = "associativity of /\\";
        } else if (!(sup(sums[i * m + k], sums[j * m + k]) == sups[i * m + j] + z)) {
          bad = "translation invariance";
        }
        if (!c.expect(!bad, [&] { return Failure{{x, y, z}, *bad}; })) return;
      }
    }
  }
  for (SpaceKind kind : {SpaceKind::kSimpleFunction, SpaceKind::kFinSupport, SpaceKind::kEventuallyConstant,
                         SpaceKind::kPiecewiseLinear}) {
    for (std::size_t i = 0; i < c.samples; ++i) {
      c.instance();
      const Space space = c.gen.space_of(kind);
      const Element x = c.gen.element(space);
      const Element y = c.gen.element(space);
      const Element z = c.gen.element(space);
      const Scalar k = c.gen.scalar();
      auto bad = binary_laws(x, y);
      if (!bad) bad = ternary_laws(x, y, z);
      if (!bad) bad = scaling_law(k, x);
      if (!c.expect(!bad, [&] { return Failure{{x, y, z}, *bad + " (c = " + k.str() + ")"}; })) return;
    }
  }
  c.report.notes = "coord(3) pairs over the radius-" + std::to_string(radius) + " grid and triples over radius " +
                   std::to_string(triple_radius) + " exhaustively; " + std::to_string(c.samples) +
                   " random triples per other model";
}

// ------------------------------------------------------ fragment algebra

Element coordinate_fragment(const Element& e, std::uint64_t mask) {
  std::vector<Scalar> values(e.dense_values().begin(), e.dense_values().end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(mask >> i & 1U)) values[i] = Scalar(0);
  }
  return Element::coordinate(std::move(values));
}

Element full_support_coordinate(InstanceGenerator& gen, std::size_t n) {
  std::vector<Scalar> values;
  for (std::size_t i = 0; i < n; ++i) values.push_back(gen.nonzero_scalar());
  // A negative atom makes sign mistakes in the lateral operations visible.
  if (std::none_of(values.begin(), values.end(), [](const Scalar& v) { return v.sign() < 0; })) {
    Scalar& v = values[gen.rng().below(n)];
    v = -v;
  }
  return Element::coordinate(std::move(values));
}

bool fragment_instance(Ctx& c, const Element& e, bool exhaustive, std::size_t pair_samples) {
  const std::size_t n = e.dense_values().size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const FragmentEnumeration frags = enumerate_fragments(e);
  if (!c.expect(frags.size() == full + 1, [&] {
        return Failure{{e}, "fragment count " + std::to_string(frags.size()) + " differs from 2^" + std::to_string(n)};
      })) {
    return false;
  }
  auto pair = [&](std::uint64_t a, std::uint64_t b) {
    const Element x = coordinate_fragment(e, a);
    const Element y = coordinate_fragment(e, b);
    return c.expect(frags.at(a) == x && is_fragment(x, e), [&] { return Failure{{e, x}, "fragment indexing"}; }) &&
           c.expect(lateral_sup(x, y) == coordinate_fragment(e, a | b),
                    [&] { return Failure{{e, x, y}, "x lsup y is not the fragment on the union of supports"}; }) &&
           c.expect(lateral_inf(x, y) == coordinate_fragment(e, a & b),
                    [&] { return Failure{{e, x, y}, "x linf y is not the fragment on the intersection of supports"}; }) &&
           c.expect(e - x == coordinate_fragment(e, full & ~a),
                    [&] { return Failure{{e, x}, "e - x is not the complementary fragment"}; });
  };
  if (!exhaustive) {
    for (std::size_t i = 0; i < pair_samples; ++i) {
      if (!pair(c.gen.rng().next() & full, c.gen.rng().next() & full)) return false;
    }
    return true;
  }
  std::vector<Element> items;
  for (std::uint64_t a = 0; a <= full; ++a) {
    for (std::uint64_t b = 0; b <= full; ++b) {
      if (!pair(a, b)) return false;
    }
    items.push_back(coordinate_fragment(e, a));
  }
  const Element zero_e = zero(e.space());
  for (const auto& x : items) {
    const Element xc = e - x;
    if (!c.expect(lateral_sup(x, xc) == e && lateral_inf(x, xc) == zero_e && lateral_sup(x, zero_e) == x &&
                      lateral_inf(x, e) == x,
                  [&] { return Failure{{e, x}, "complement or bound laws"}; })) {
      return false;
    }
    for (const auto& y : items) {
      const Element s = lateral_sup(x, y);
      const Element m = lateral_inf(x, y);
      if (!c.expect(lateral_sup(x, m) == x && lateral_inf(x, s) == x,
                    [&] { return Failure{{e, x, y}, "absorption in the fragment algebra"}; })) {
        return false;
      }
      for (const auto& z : items) {
        const bool ok = lateral_inf(x, lateral_sup(y, z)) == lateral_sup(m, lateral_inf(x, z)) &&
                        lateral_sup(x, lateral_inf(y, z)) == lateral_inf(s, lateral_sup(x, z)) &&
                        lateral_sup(s, z) == lateral_sup(x, lateral_sup(y, z)) &&
                        lateral_inf(m, z) == lateral_inf(x, lateral_inf(y, z));
        if (!c.expect(ok, [&] { return Failure{{e, x, y, z}, "distributivity or associativity"}; })) return false;
      }
    }
  }
  return true;
}

void fragment_algebra(Ctx& c) {
  const std::size_t n_max = c.option("n", 12, 1, 16);
  const std::size_t exhaustive_n = c.option("exhaustive_n", 6, 0, 7);
  for (std::size_t n = 1; n <= exhaustive_n; ++n) {
    c.instance();
    if (!fragment_instance(c, full_support_coordinate(c.gen, n), true, 0)) return;
  }
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto n = static_cast<std::size_t>(c.gen.rng().range(1, static_cast<std::int64_t>(n_max)));
    if (!fragment_instance(c, full_support_coordinate(c.gen, n), false, 16)) return;
  }
  c.report.notes = "Boolean laws exhaustive for n <= " + std::to_string(exhaustive_n) + "; " +
                   std::to_string(c.samples) + " random full-support elements with n <= " + std::to_string(n_max);
}

void lateral_order(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space space = c.gen.space();
    const Element e = finite_element(c.gen, space);
    const Element x = c.gen.fragment(e);
    const Element y = c.gen.fragment(e);
    const Element z = c.gen.fragment(e);
    const Element xy = lateral_sup(x, y);
    const Element m = lateral_inf(x, y);
    const bool xy_le = is_fragment(x, y);
    const bool ok = is_fragment(x, x) && is_fragment(zero(space), x) && is_fragment(x, e) &&
                    (!(xy_le && is_fragment(y, x)) || x == y) &&
                    (!(xy_le && is_fragment(y, z)) || is_fragment(x, z)) && is_fragment(x, xy) &&
                    is_fragment(y, xy) && is_fragment(m, x) && is_fragment(m, y) && xy_le == (m == x) &&
                    xy_le == (xy == y) && is_fragment(xy, e);
    if (!c.expect(ok, [&] { return Failure{{e, x, y, z}, "lateral order law violated among fragments of e"}; })) {
      return;
    }
  }
}

// --------------------------------------------------- pointwise operator lattice

struct PairInstance {
  Operator s;
  Operator t;
  Element x;
};

PairInstance pair_instance(Ctx& c) {
  const Space space = c.gen.space();
  auto [s, t] = c.gen.operator_pair(space);
  return {std::move(s), std::move(t), small_element(c.gen, space)};
}

std::vector<Value> decomposition_values(const Operator& s, const Operator& t, const Element& x, bool subtract) {
  std::vector<Value> out;
  for (const auto& d : enumerate_decompositions(x)) {
    out.push_back(subtract ? apply(s, d.left) - apply(t, d.right) : apply(s, d.left) + apply(t, d.right));
  }
  return out;
}

Operator zero_operator(const Operator& t) { return Scalar(0) * t; }

void join_formula(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto [s, t, x] = pair_instance(c);
    const auto r = join_at(s, t, x);
    const auto values = decomposition_values(s, t, x, false);
    const auto fail = [&](const std::string& what) {
      return [&, what] { return Failure{{x}, what + " at x with " + ops(s, t)}; };
    };
    for (const auto& v : values) {
      if (!c.expect(value_leq(v, r.value), fail("S(u) + T(v) above the join value"))) return;
    }
    if (!c.expect(values_equal(r.value, fold(values, true, true)), fail("join value is not the least upper bound"))) {
      return;
    }
    if (!c.expect(values_equal(r.value, join_at(s, t, x, std::nullopt, ScanMethod::kPieceAdditive).value),
                  fail("piece-additive join disagrees with enumeration"))) {
      return;
    }
    for (const auto& d : r.attained_at) {
      if (!c.expect(values_equal(apply(s, d.left) + apply(t, d.right), r.value), fail("attained decomposition"))) {
        return;
      }
    }
  }
}

void meet_formula(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto [s, t, x] = pair_instance(c);
    const auto r = meet_at(s, t, x);
    const auto values = decomposition_values(s, t, x, false);
    const auto fail = [&](const std::string& what) {
      return [&, what] { return Failure{{x}, what + " at x with " + ops(s, t)}; };
    };
    for (const auto& v : values) {
      if (!c.expect(value_leq(r.value, v), fail("S(u) + T(v) below the meet value"))) return;
    }
    if (!c.expect(values_equal(r.value, fold(values, false, true)), fail("meet value is not the greatest lower bound")) ||
        !c.expect(values_equal(r.value, -join_at(-s, -t, x).value), fail("meet differs from -((-S) join (-T))"))) {
      return;
    }
  }
}

void positive_part_formula(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto [s, t, x] = pair_instance(c);
    const auto p = pos_part_at(t, x).value;
    const auto values = images(t, enumerate_fragments(x).materialize());
    const auto fail = [&](const std::string& what) {
      return [&, what] { return Failure{{x}, what + " at x with T = " + t.str()}; };
    };
    if (!c.expect(values_equal(p, fold(values, true, true)), fail("T+(x) is not sup T(u) over u fragment of x")) ||
        !c.expect(value_leq(apply(t, x), p), fail("T(x) above T+(x)")) ||
        !c.expect(value_leq(zero_value(t), p), fail("T+(x) negative")) ||
        !c.expect(values_equal(p, join_at(t, zero_operator(t), x).value), fail("T+ differs from T join 0"))) {
      return;
    }
  }
}

void negative_part_formula(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto [s, t, x] = pair_instance(c);
    const auto p = pos_part_at(t, x).value;
    const auto n = neg_part_at(t, x).value;
    const auto values = images(t, enumerate_fragments(x).materialize());
    const auto fail = [&](const std::string& what) {
      return [&, what] { return Failure{{x}, what + " at x with T = " + t.str()}; };
    };
    if (!c.expect(values_equal(n, -fold(values, false, true)), fail("T-(x) is not -inf T(u) over u fragment of x")) ||
        !c.expect(values_equal(apply(t, x), p - n), fail("T(x) differs from T+(x) - T-(x)")) ||
        !c.expect(values_equal(n, join_at(-t, zero_operator(t), x).value), fail("T- differs from (-T) join 0"))) {
      return;
    }
  }
}

void modulus_formula(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto [s, t, x] = pair_instance(c);
    const auto m = modulus_at(t, x).value;
    const auto fail = [&](const std::string& what) {
      return [&, what] { return Failure{{x}, what + " at x with T = " + t.str()}; };
    };
    if (!c.expect(value_leq(value_abs(apply(t, x)), m), fail("|T(x)| above |T|(x)")) ||
        !c.expect(values_equal(m, fold(decomposition_values(t, t, x, true), true, true)),
                  fail("|T|(x) is not sup T(u) - T(v)")) ||
        !c.expect(values_equal(m, pos_part_at(t, x).value + neg_part_at(t, x).value),
                  fail("|T|(x) differs from T+(x) + T-(x)"))) {
      return;
    }
  }
}

// Orthogonal additivity of a pointwise lattice operator plus its comparison
// with the operators it is built from.
void lattice_operator_is_oao(Ctx& c, PointwiseKind kind) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space space = c.gen.space();
    const auto [s, t] = c.gen.operator_pair(space);
    const Element e = small_element(c.gen, space);
    const Element u = c.gen.fragment(e);
    const Element v = e - u;
    auto r = [&](const Element& w) { return pointwise_at(kind, s, t, w).value; };
    const std::string name(to_string(kind));
    const auto fail = [&](const std::string& what) {
      return [&, what] { return Failure{{u, v}, name + ": " + what + " with " + ops(s, t)}; };
    };
    const Value re = r(e);
    if (!c.expect(values_equal(re, r(u) + r(v)), fail("R(u + v) differs from R(u) + R(v) for disjoint u, v"))) return;
    for (const Element& w : {u, v, e}) {
      const Value rw = r(w);
      const Value sw = apply(s, w);
      const Value tw = apply(t, w);
      std::optional<bool> ok = true;
      switch (kind) {
        case PointwiseKind::kJoin:
          ok = both(value_leq(sw, rw), value_leq(tw, rw));
          break;
        case PointwiseKind::kMeet:
          ok = both(value_leq(rw, sw), value_leq(rw, tw));
          break;
        case PointwiseKind::kPos:
          ok = both(value_leq(tw, rw), value_leq(zero_value(t), rw));
          break;
        case PointwiseKind::kNeg:
          ok = both(value_leq(-tw, rw), value_leq(zero_value(t), rw));
          break;
        case PointwiseKind::kModulus:
          ok = both(value_leq(tw, rw), value_leq(-tw, rw));
          break;
      }
      if (!c.expect(ok, fail("R is not above/below its arguments"))) return;
    }
  }
}

// Bounds of R over 𝔉_e derived from the bounds of S and T over 𝔉_e.
void lattice_operator_in_p(Ctx& c, PointwiseKind kind) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space space = c.gen.space();
    const auto [s, t] = c.gen.operator_pair(space);
    const Element e = small_element(c.gen, space);
    const auto bs = lateral_bound_scan(s, e).levels.front();
    const auto bt = lateral_bound_scan(t, e).levels.front();
    std::optional<Value> lo;
    std::optional<Value> hi;
    switch (kind) {
      case PointwiseKind::kJoin:
      case PointwiseKind::kMeet:
        lo = bs.min + bt.min;
        hi = bs.max + bt.max;
        break;
      case PointwiseKind::kPos:
        lo = zero_value(t);
        hi = bt.max;
        break;
      case PointwiseKind::kNeg:
        lo = zero_value(t);
        hi = -bt.min;
        break;
      case PointwiseKind::kModulus:
        lo = bt.min - bt.max;
        hi = bt.max - bt.min;
        break;
    }
    for (const Element& u : enumerate_fragments(e).materialize()) {
      const Value r = pointwise_at(kind, s, t, u).value;
      if (!c.expect(both(value_leq(*lo, r), value_leq(r, *hi)), [&] {
            return Failure{{e, u}, std::string(to_string(kind)) + " at a fragment u of e escapes [" + lo->str() +
                                       ", " + hi->str() + "] with " + ops(s, t)};
          })) {
        return;
      }
    }
  }
}

// Sampled points under an order bound, closed under fragments; R is kept
// inside the sum of the hulls of S and T on that set.
void join_preserves_order_bounded(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space space = c.gen.space();
    const auto [s, t] = c.gen.operator_pair(space);
    const Element b = abs(finite_element(c.gen, space));
    std::vector<Element> probes;
    for (int k = 0; k < 4; ++k) {
      const Element z = sup(inf(small_element(c.gen, space), b), -b);
      for (Element& w : enumerate_fragments(z).materialize()) probes.push_back(std::move(w));
    }
    const auto sv = images(s, probes);
    const auto tv = images(t, probes);
    const Value hi = fold(sv, true, false) + fold(tv, true, false);
    const Value lo = fold(sv, false, false) + fold(tv, false, false);
    for (const auto& w : probes) {
      if (!c.expect(leq(abs(w), b), [&] { return Failure{{w, b}, "probe escapes the order interval"}; })) return;
      const Value r = join_at(s, t, w).value;
      if (!c.expect(value_leq(r, hi), [&] { return Failure{{w, b}, "join above the hull bound with " + ops(s, t)}; }) ||
          !c.expect(value_leq(lo, r), [&] { return Failure{{w, b}, "join below the hull bound with " + ops(s, t)}; })) {
        return;
      }
    }
  }
}

// ------------------------------------------------- lateral-to-order bounds

void series_growth(Ctx& c) {
  const std::size_t level = c.option("level", 62, 2, 400);
  const Operator series = named_example("plram_series");
  const Space ec = Space::eventually_constant();
  const Element e = one(ec);
  const Value two = RealInterval::point(Scalar(2));
  const BoundScan scan = lateral_bound_scan(series, e, level, two);
  c.report.exhaustive = true;
  c.report.samples_used = scan.levels.size();
  Scalar harmonic(0);
  for (const auto& row : scan.levels) {
    c.artifacts.push_back("level=" + std::to_string(row.level) + " max=" + row.max.str() + " min=" + row.min.str());
    if (row.level % 2 == 0 && row.level > 0) {
      harmonic += Scalar(1, static_cast<long>(row.level / 2));
      const Value expected = RealInterval::point(harmonic / Scalar(2));
      if (!c.expect(values_equal(row.max, expected), [&] {
            return Failure{{}, "level " + std::to_string(row.level) + " maximum " + row.max.str() + " differs from " +
                                   expected.str()};
          })) {
        return;
      }
    }
  }
  if (!c.expect(scan.monotone, [&] { return Failure{{}, "level maxima are not monotone"}; })) return;
  if (level >= 62) {
    if (!c.expect(scan.growth_level.has_value() && scan.report.failed(),
                  [&] { return Failure{{}, "no fragment with value above 2 by level " + std::to_string(level)}; })) {
      return;
    }
    c.artifacts.push_back("growth_level=" + std::to_string(*scan.growth_level));
    c.artifacts.push_back("witness=" + scan.report.witness.front().str());
  }
  const Value at_one = apply(series, e);
  const RealInterval ln2 = ln2_enclosure(Scalar::pow10_inverse(12));
  const RealInterval& iv = at_one.interval();
  if (!c.expect(iv.width() <= Scalar::pow10_inverse(9) && iv.lower <= -ln2.lower && -ln2.upper <= iv.upper,
                [&] { return Failure{{e}, "T(1) = " + iv.str() + " does not bracket -ln 2 within 1e-9"}; })) {
    return;
  }
  c.artifacts.push_back("value_at_one=" + iv.str());
  const Element evens = Element::eventually_constant(
      {Scalar(0), Scalar(1), Scalar(0), Scalar(1), Scalar(0), Scalar(1)}, Scalar(0));
  c.expect(apply(series, evens) == Value(RealInterval::point(Scalar(11, 12))),
           [&] { return Failure{{evens}, "finite-support value differs from 11/12"}; });
}

void linear_growth(Ctx& c) {
  const std::size_t level = c.option("level", 12, 1, 62);
  const Space ec = Space::eventually_constant();
  std::vector<Element> targets{one(ec)};
  for (std::size_t i = 0; i < c.samples; ++i) {
    Element f = abs(c.gen.element(ec));
    if (!f.is_zero()) targets.push_back(std::move(f));
  }
  c.report.exhaustive = false;
  for (const auto& f : targets) {
    c.instance();
    const Operator t = named_example("knbdbj", f);
    const BoundScan scan = lateral_bound_scan(t, one(ec), level, std::nullopt, ScanMethod::kPieceAdditive);
    for (const auto& row : scan.levels) {
      const auto n = static_cast<long>(row.level);
      const Value expected = Scalar(n * (n + 1) / 2) * f;
      if (&f == &targets.front()) {
        c.artifacts.push_back("level=" + std::to_string(row.level) + " max=" + row.max.str());
      }
      if (!c.expect(row.max == expected, [&] {
            return Failure{{f}, "level " + std::to_string(row.level) + " maximum " + row.max.str() + " differs from " +
                                    expected.str()};
          })) {
        return;
      }
      std::vector<Scalar> prefix(row.level, Scalar(1));
      const Element indicator = Element::eventually_constant(std::move(prefix), Scalar(0));
      if (!c.expect(apply(t, indicator) == expected,
                    [&] { return Failure{{f, indicator}, "the prefix indicator does not attain the level maximum"}; })) {
        return;
      }
    }
    if (!c.expect(scan.monotone, [&] { return Failure{{f}, "level maxima are not monotone"}; })) return;
  }
}

void bounded_on_finite_algebras(Ctx& c, const std::vector<SpaceKind>& kinds) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space space = c.gen.space_of(c.gen.rng().pick(kinds));
    const Operator t = c.gen.operator_on(space);
    const Element e = small_element(c.gen, space);
    const BoundScan scan = lateral_bound_scan(t, e);
    if (!c.expect(scan.report.verdict == Verdict::kHolds && scan.levels.size() == 1, [&] {
          return Failure{{e}, "bound scan did not settle: " + scan.report.notes + " with T = " + t.str()};
        })) {
      return;
    }
    const Value& lo = scan.levels.front().min;
    const Value& hi = scan.levels.front().max;
    const auto frags = enumerate_fragments(e);
    if (!c.expect(frags.size() == (std::uint64_t{1} << frags.pieces().size()),
                  [&] { return Failure{{e}, "fragment count is not a power of two"}; })) {
      return;
    }
    const auto values = images(t, frags.materialize());
    if (!c.expect(both(values_equal(hi, fold(values, true, false)), values_equal(lo, fold(values, false, false))), [&] {
          return Failure{{e}, "reported bounds [" + lo.str() + ", " + hi.str() + "] are not the extrema of T over F_e, T = " +
                                  t.str()};
        })) {
      return;
    }
  }
}

void converse_bounded(Ctx& c) {
  bounded_on_finite_algebras(c, {SpaceKind::kFinSupport, SpaceKind::kCoordinate, SpaceKind::kSimpleFunction,
                                 SpaceKind::kPiecewiseLinear});
}

void c00_bounded(Ctx& c) { bounded_on_finite_algebras(c, {SpaceKind::kFinSupport}); }

void positive_linear_is_zero(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Operator t = c.gen.nonzero_linear();
    SamplingPlan plan;
    plan.seed = c.gen.rng().next();
    plan.samples = 40;
    const CheckReport r = verify_positive(t, plan);
    const bool shaped = r.verdict == Verdict::kFails && r.witness.size() == 2 && r.witness[1] == -r.witness[0];
    if (!c.expect(shaped, [&] {
          return Failure{r.witness, "nonzero linear operator not refuted as positive with an (x, -x) pair: T = " +
                                        t.str() + "; " + r.notes};
        })) {
      return;
    }
    const Value zero_v = zero_value(t);
    const bool replay = value_leq(zero_v, apply(t, r.witness[0])) == false ||
                        value_leq(zero_v, apply(t, r.witness[1])) == false;
    if (!c.expect(replay, [&] { return Failure{r.witness, "witness does not replay for T = " + t.str()}; })) return;
  }
}

// f(t) = c t^2 + (b t for t >= 0, -a t for t < 0) with a, b, c >= 0.
PiecewisePolynomial nonnegative_function(InstanceGenerator& gen) {
  auto weight = [&] { return gen.scalar().abs(); };
  const Scalar quad = weight();
  Polynomial left({Scalar(0), -weight(), quad});
  Polynomial right({Scalar(0), weight(), quad});
  return PiecewisePolynomial({Scalar(0)}, {left, right});
}

void positive_in_p(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space domain = c.gen.atomic_space();
    const Space codomain = c.gen.atomic_space();
    Kernel k;
    const std::size_t sources = domain.is_dense() ? domain.atom_count() : c.gen.bounds.max_length;
    const std::size_t targets = codomain.is_dense() ? codomain.atom_count() : c.gen.bounds.max_length;
    for (std::uint64_t s = 1; s <= sources; ++s) {
      k.terms.push_back({s, 1 + c.gen.rng().below(targets), nonnegative_function(c.gen)});
    }
    const Operator t = make_kernel(domain, codomain, std::move(k));
    SamplingPlan plan;
    plan.seed = c.gen.rng().next();
    plan.samples = 40;
    const CheckReport positive = verify_positive(t, plan);
    if (!c.expect(!positive.failed(), [&] { return Failure{positive.witness, "positive kernel refuted: " + t.str()}; })) {
      return;
    }
    const Element e = small_element(c.gen, domain);
    const Value te = apply(t, e);
    const BoundScan scan = lateral_bound_scan(t, e);
    if (!c.expect(scan.levels.front().max == te && scan.levels.front().min == zero_value(t),
                  [&] { return Failure{{e}, "T(F_e) is not [0, T(e)] for positive T = " + t.str()}; })) {
      return;
    }
    for (const Element& u : enumerate_fragments(e).materialize()) {
      const Value tu = apply(t, u);
      if (!c.expect(value_leq(zero_value(t), tu) == true && value_leq(tu, te) == true,
                    [&] { return Failure{{e, u}, "0 <= T(u) <= T(e) fails for positive T = " + t.str()}; })) {
        return;
      }
    }
  }
}

// ---------------------------------------------------------- refinement grid

void refinement_grid(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space space = c.gen.space();
    const Element e = finite_element(c.gen, space);
    const auto frags = enumerate_fragments(e);
    const auto pieces = frags.pieces();
    const auto m = static_cast<std::size_t>(c.gen.rng().range(1, 4));
    const auto n = static_cast<std::size_t>(c.gen.rng().range(1, 4));
    std::vector<std::size_t> row_of(pieces.size());
    std::vector<std::size_t> col_of(pieces.size());
    std::vector<Element> us(m, zero(space));
    std::vector<Element> vs(n, zero(space));
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      row_of[p] = c.gen.rng().below(m);
      col_of[p] = c.gen.rng().below(n);
      us[row_of[p]] = us[row_of[p]] + pieces[p];
      vs[col_of[p]] = vs[col_of[p]] + pieces[p];
    }
    const PlievGrid g = pliev_grid(us, vs);
    auto witness = [&] {
      std::vector<Element> w = us;
      w.insert(w.end(), vs.begin(), vs.end());
      return w;
    };
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        Element expected = zero(space);
        for (std::size_t p = 0; p < pieces.size(); ++p) {
          if (row_of[p] == r && col_of[p] == k) expected = expected + pieces[p];
        }
        if (!c.expect(g.grid[r][k] == expected, [&] {
              return Failure{witness(), "cell (" + std::to_string(r) + "," + std::to_string(k) + ") = " +
                                            g.grid[r][k].str() + ", expected " + expected.str()};
            })) {
          return;
        }
      }
    }
    for (std::size_t r = 0; r < m; ++r) {
      Element sum = zero(space);
      Element lsup = zero(space);
      for (std::size_t k = 0; k < n; ++k) {
        sum = sum + g.grid[r][k];
        lsup = lateral_sup(lsup, g.grid[r][k]);
      }
      if (!c.expect(sum == us[r] && lsup == us[r],
                    [&] { return Failure{witness(), "row " + std::to_string(r) + " does not rebuild u"}; })) {
        return;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      Element sum = zero(space);
      Element lsup = zero(space);
      for (std::size_t r = 0; r < m; ++r) {
        sum = sum + g.grid[r][k];
        lsup = lateral_sup(lsup, g.grid[r][k]);
      }
      if (!c.expect(sum == vs[k] && lsup == vs[k],
                    [&] { return Failure{witness(), "column " + std::to_string(k) + " does not rebuild v"}; })) {
        return;
      }
    }
    for (std::size_t a = 0; a < m * n; ++a) {
      for (std::size_t b = a + 1; b < m * n; ++b) {
        const Element& wa = g.grid[a / n][a % n];
        const Element& wb = g.grid[b / n][b % n];
        if (!c.expect(is_disjoint(wa, wb), [&] { return Failure{{wa, wb}, "grid cells are not disjoint"}; })) return;
      }
    }
  }
}

// -------------------------------------------------- disjointness preserving

struct DpInstance {
  Operator t;
  CheckReport report;
  Element e;
};

std::optional<DpInstance> dp_instance(Ctx& c) {
  const Space space = c.gen.space();
  Operator t = c.gen.dp_operator(space);
  SamplingPlan plan;
  plan.seed = c.gen.rng().next();
  plan.samples = 40;
  CheckReport report = verify_disjointness_preserving(t, plan);
  if (!c.expect(!report.failed(), [&] {
        return Failure{report.witness, "generated operator does not preserve disjointness: " + t.str()};
      })) {
    return std::nullopt;
  }
  return DpInstance{std::move(t), std::move(report), small_element(c.gen, space)};
}

void dp_in_p(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto inst = dp_instance(c);
    if (!inst) return;
    const Value bound = value_abs(apply(inst->t, inst->e));
    for (const Element& u : enumerate_fragments(inst->e).materialize()) {
      if (!c.expect(value_leq(value_abs(apply(inst->t, u)), bound),
                    [&] { return Failure{{inst->e, u}, "|T(u)| above |T(e)| for T = " + inst->t.str()}; })) {
        return;
      }
    }
  }
}

void dp_modulus(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto inst = dp_instance(c);
    if (!inst) return;
    const Value bound = value_abs(apply(inst->t, inst->e));
    for (const Element& u : enumerate_fragments(inst->e).materialize()) {
      const Value m = modulus_at(inst->t, u).value;
      const Value direct = value_abs(apply(inst->t, u));
      const bool ok = m == direct && dp_fast(DpKind::kModulus, inst->t, u, inst->report).value == direct &&
                      value_leq(m, bound) != false;
      if (!c.expect(ok, [&] {
            return Failure{{u}, "|T|(u) = " + m.str() + " but |T(u)| = " + direct.str() + " for T = " + inst->t.str()};
          })) {
        return;
      }
    }
  }
}

void dp_parts(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto inst = dp_instance(c);
    if (!inst) return;
    const Operator& t = inst->t;
    const Element& e = inst->e;
    const Value te = apply(t, e);
    const bool parts = pos_part_at(t, e).value == value_pos(te) && neg_part_at(t, e).value == value_neg(te) &&
                       dp_fast(DpKind::kPos, t, e, inst->report).value == value_pos(te) &&
                       dp_fast(DpKind::kNeg, t, e, inst->report).value == value_neg(te);
    if (!c.expect(parts, [&] { return Failure{{e}, "T+(e) or T-(e) differs from (T(e))+ or (T(e))-: " + t.str()}; })) {
      return;
    }
    const Element u = c.gen.fragment(e);
    const Element v = e - u;
    const Value tu = apply(t, u);
    const Value tv = apply(t, v);
    const bool split = value_pos(te) == value_pos(tu) + value_pos(tv) && value_neg(te) == value_neg(tu) + value_neg(tv) &&
                       value_disjoint(value_pos(tu), value_pos(tv)) != false &&
                       value_disjoint(value_neg(tu), value_neg(tv)) != false;
    if (!c.expect(split, [&] { return Failure{{u, v}, "x -> (T(x))+ is not a disjointness preserving OAO: " + t.str()}; })) {
      return;
    }
  }
}

void dp_meyer(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto inst = dp_instance(c);
    if (!inst) return;
    const Element x = c.gen.fragment(inst->e);
    const Element y = c.gen.fragment(inst->e);
    const MeyerResult r = meyer_pair(inst->t, x, y, inst->e, inst->report);
    if (!c.expect(r.value.is_zero() && r.theorematic, [&] {
          return Failure{{x, y, inst->e}, "(T(x))+ /\\ (T(y))- = " + r.value.str() + " for T = " + inst->t.str()};
        })) {
      return;
    }
  }
}

void dp_fragments(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const auto inst = dp_instance(c);
    if (!inst) return;
    const Value te = apply(inst->t, inst->e);
    for (const Element& u : enumerate_fragments(inst->e).materialize()) {
      if (!c.expect(value_fragment(apply(inst->t, u), te),
                    [&] { return Failure{{inst->e, u}, "T(u) is not a fragment of T(e) for T = " + inst->t.str()}; })) {
        return;
      }
    }
  }
}

void fragment_parts(Ctx& c) {
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Space space = c.gen.space();
    const Element y = small_element(c.gen, space);
    for (const Element& x : enumerate_fragments(y).materialize()) {
      const bool ok = is_fragment(pos(x), pos(y)) && is_fragment(neg(x), neg(y)) && is_fragment(abs(x), abs(y)) &&
                      leq(abs(x), abs(y));
      if (!c.expect(ok, [&] { return Failure{{x, y}, "x fragment of y but the parts are not"}; })) return;
    }
    const Element z = c.gen.element(space);
    if (!c.expect(!is_fragment(abs(z), abs(y)) || leq(abs(z), abs(y)),
                  [&] { return Failure{{z, y}, "|z| fragment of |y| without |z| <= |y|"}; })) {
      return;
    }
  }
}

// ------------------------------------------------------------ counterexamples

void table_counterexample(Ctx& c) {
  c.report.exhaustive = true;
  const Operator t = named_example("meyer_pl");
  const Space pl = Space::piecewise_linear();
  const Element u = one(pl);
  const Element u2 = Scalar(2) * u;
  c.instance();
  const CheckReport oao = verify_oao(t);
  const CheckReport dp = verify_disjointness_preserving(t);
  if (!c.expect(oao.verdict == Verdict::kHolds && dp.verdict == Verdict::kHolds,
                [&] { return Failure{{}, "table operator: oao " + oao.serialize() + "; dp " + dp.serialize()}; })) {
    return;
  }
  const auto decomps = enumerate_decompositions(u);
  const bool trivial = decomps.size() == 2 && decomps[0].left.is_zero() && decomps[0].right == u &&
                       decomps[1].left == u && decomps[1].right.is_zero();
  if (!c.expect(trivial, [&] { return Failure{{u}, "decompositions of 1 are not exactly (0, 1) and (1, 0)"}; })) return;
  const MeyerResult r = meyer_pair_unsafe(t, u, u2);
  c.artifacts.push_back("meyer_unsafe=" + r.value.str());
  if (!c.expect(r.value == Value(u) && !r.theorematic, [&] { return Failure{{u, u2}, "unsafe value " + r.value.str()}; })) {
    return;
  }
  bool refused = false;
  try {
    (void)meyer_pair(t, u, u2, u2, dp);
  } catch (const PreconditionError&) {
    refused = true;
  }
  c.expect(refused, [&] { return Failure{{u, u2}, "meyer_pair accepted a pair that is not laterally bounded"}; });
}

void lateral_meet_counterexample(Ctx& c) {
  const Operator s = named_example("lateral_meet");
  const Space space = default_simple_space();
  const Element u = one(space);
  const Element u2 = Scalar(2) * u;
  c.instance();
  const bool values = apply(s, u) == Value(u) && apply(s, u2) == Value(-u2);
  if (!c.expect(values, [&] {
        return Failure{{u, u2}, "S(1) = " + apply(s, u).str() + ", S(2*1) = " + apply(s, u2).str()};
      })) {
    return;
  }
  const MeyerResult r = meyer_pair_unsafe(s, u, u2);
  c.artifacts.push_back("meyer_unsafe=" + r.value.str());
  if (!c.expect(r.value == Value(u) && !r.theorematic, [&] { return Failure{{u, u2}, "unsafe value " + r.value.str()}; })) {
    return;
  }
  SamplingPlan plan;
  plan.seed = c.gen.rng().next();
  plan.samples = c.samples;
  const CheckReport oao = verify_oao(s, plan);
  const CheckReport dp = verify_disjointness_preserving(s, plan);
  if (!c.expect(!oao.failed() && !dp.failed(),
                [&] { return Failure{{}, "lateral meet operator: oao " + oao.serialize() + "; dp " + dp.serialize()}; })) {
    return;
  }
  for (std::size_t i = 0; i < c.samples; ++i) {
    c.instance();
    const Element x = c.gen.element(space);
    const Value sx = apply(s, x);
    if (!c.expect(leq(abs(sx.element()), abs(x)), [&] { return Failure{{x}, "|S(x)| above |x|"}; })) return;
  }
}

void run_join_oao(Ctx& c) { lattice_operator_is_oao(c, PointwiseKind::kJoin); }
void run_join_in_p(Ctx& c) { lattice_operator_in_p(c, PointwiseKind::kJoin); }
void run_meet(Ctx& c) {
  meet_formula(c);
  if (!c.failed()) lattice_operator_is_oao(c, PointwiseKind::kMeet);
  if (!c.failed()) lattice_operator_in_p(c, PointwiseKind::kMeet);
}
void run_pos(Ctx& c) {
  lattice_operator_is_oao(c, PointwiseKind::kPos);
  if (!c.failed()) lattice_operator_in_p(c, PointwiseKind::kPos);
}
void run_neg(Ctx& c) {
  lattice_operator_is_oao(c, PointwiseKind::kNeg);
  if (!c.failed()) lattice_operator_in_p(c, PointwiseKind::kNeg);
}
void run_mod(Ctx& c) { lattice_operator_is_oao(c, PointwiseKind::kModulus); }
void run_mod_in_p(Ctx& c) { lattice_operator_in_p(c, PointwiseKind::kModulus); }

}  // namespace

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"riesz-laws", "The lattice identities of a vector lattice hold in every model.", {"radius", "triple_radius"}},
       riesz_laws},
      {{"frag-ba",
        "The fragments of e form a Boolean algebra under lateral sup and inf, isomorphic to the subsets of its support.",
        {"n", "exhaustive_n"}},
       fragment_algebra},
      {{"lat-order", "The lateral order is a partial order whose lattice operations are lateral sup and inf.", {}},
       lateral_order},
      {{"thm-1.1-a", "(S join T)(x) is the supremum of S(u) + T(v) over disjoint decompositions x = u + v.", {}},
       join_formula},
      {{"thm-1.1-b", "(S meet T)(x) is the infimum of S(u) + T(v) over disjoint decompositions x = u + v.", {}},
       meet_formula},
      {{"thm-1.1-c", "T+(x) is the supremum of T(u) over the fragments u of x.", {}}, positive_part_formula},
      {{"thm-1.1-d", "T-(x) is minus the infimum of T(u) over the fragments u of x.", {}}, negative_part_formula},
      {{"thm-1.1-e", "|T(x)| <= |T|(x), with |T|(x) the supremum of T(u) - T(v) over decompositions.", {}},
       modulus_formula},
      {{"rem-pos-linear", "The only linear operator that is positive as an orthogonally additive operator is zero.", {}},
       positive_linear_is_zero},
      {{"rem-pos-in-P", "Every positive orthogonally additive operator is laterally-to-order bounded.", {}},
       positive_in_p},
      {{"ex-2.2",
        "The alternating series x -> sum (-1)^n |x_n| / n is orthogonally additive but unbounded on the fragments of 1.",
        {"level"}},
       series_growth},
      {{"thm-2.3-forward",
        "On the eventually constant sequences the linear operator e_n -> n f is unbounded on the fragments of 1.",
        {"level"}},
       linear_growth},
      {{"thm-2.3-converse", "When every fragment algebra is finite, every orthogonally additive operator is bounded on them.",
        {}},
       converse_bounded},
      {{"rem-c00", "On the finitely supported sequences every orthogonally additive operator is laterally-to-order bounded.",
        {}},
       c00_bounded},
      {{"lem-3.1", "Two disjoint splittings of one element have a common disjoint refinement grid.", {}}, refinement_grid},
      {{"thm-3.2", "The pointwise join formula defines an orthogonally additive operator above S and T.", {}}, run_join_oao},
      {{"thm-3.2-pres-P", "The join of two laterally-to-order bounded operators is laterally-to-order bounded.", {}},
       run_join_in_p},
      {{"thm-3.2-pres-U", "The join of two order bounded operators is order bounded.", {}}, join_preserves_order_bounded},
      {{"cor-3.3", "The pointwise meet formula defines an orthogonally additive operator below S and T.", {}}, run_meet},
      {{"cor-3.4", "The positive-part formula defines an orthogonally additive operator above T and 0.", {}}, run_pos},
      {{"cor-3.5", "The negative-part formula defines an orthogonally additive operator above -T and 0.", {}}, run_neg},
      {{"cor-3.6", "The modulus formula defines an orthogonally additive operator above T and -T.", {}}, run_mod},
      {{"cor-3.6-pres-P", "The modulus of a laterally-to-order bounded operator is laterally-to-order bounded.", {}},
       run_mod_in_p},
      {{"thm-4.2-1", "A disjointness preserving operator is laterally-to-order bounded.", {}}, dp_in_p},
      {{"thm-4.2-2", "A disjointness preserving T has |T|(x) = |T(x)|.", {}}, dp_modulus},
      {{"thm-4.2-3", "A disjointness preserving T has T+(x) = (T(x))+ and T-(x) = (T(x))-, both disjointness preserving.",
        {}},
       dp_parts},
      {{"thm-4.2-4", "For disjointness preserving T and x, y fragments of one e, (T(x))+ meet (T(y))- = 0.", {}}, dp_meyer},
      {{"lem-4.4", "A disjointness preserving T maps fragments of e to fragments of T(e).", {}}, dp_fragments},
      {{"lem-4.5", "Fragments have fragment positive parts, negative parts and moduli, and |x| fragment of |y| gives |x| <= |y|.",
        {}},
       fragment_parts},
      {{"ex-4.3-pl",
        "The table 1 -> 1, 2*1 -> -1 on continuous functions preserves disjointness yet (T(1))+ meet (T(2*1))- = 1.", {}},
       table_counterexample},
      {{"ex-4.3-latmeet",
        "x -> x linf 1 - x linf 2*1 preserves disjointness yet (S(1))+ meet (S(2*1))- = 1.", {}},
       lateral_meet_counterexample},
  };
  return table;
}

}  // namespace rieszlab::suite
