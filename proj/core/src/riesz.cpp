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

#include "rieszlab/riesz.hpp"

#include <algorithm>
#include <utility>

#include "rieszlab/error.hpp"

namespace rieszlab {
namespace {

// Samples a piecewise linear element at the sorted abscissae `ts`, all of
// which lie in [0,1].
std::vector<Scalar> sample(std::span<const Breakpoint> points, std::span<const Scalar> ts) {
  std::vector<Scalar> out;
  out.reserve(ts.size());
  std::size_t seg = 0;
  for (const Scalar& t : ts) {
    while (seg + 1 < points.size() && points[seg + 1].t < t) ++seg;
    if (points[seg].t == t) {
      out.push_back(points[seg].value);
    } else if (seg + 1 < points.size() && points[seg + 1].t == t) {
      out.push_back(points[seg + 1].value);
    } else {
      out.push_back(interpolate(points[seg], points[seg + 1], t));
    }
  }
  return out;
}

std::vector<Scalar> merged_abscissae(std::span<const Breakpoint> a, std::span<const Breakpoint> b) {
  std::vector<Scalar> ts;
  ts.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].t < b[j].t)) {
      ts.push_back(a[i++].t);
    } else if (i == a.size() || b[j].t < a[i].t) {
      ts.push_back(b[j++].t);
    } else {
      ts.push_back(a[i].t);
      ++i;
      ++j;
    }
  }
  return ts;
}

// Pointwise combination f(x, y). `f(0, 0)` must be 0. With `crossings` the
// piecewise linear branch refines the grid at strict sign changes of x - y,
// which is what makes pointwise max/min piecewise linear on the result grid.
template <class F>
Element combine(const Element& x, const Element& y, F f, bool crossings, const char* what) {
  require_same_space(x.space(), y.space(), what);
  const Space& space = x.space();
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      auto xs = x.dense_values();
      auto ys = y.dense_values();
      std::vector<Scalar> out;
      out.reserve(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) out.push_back(f(xs[i], ys[i]));
      return Element::dense(space, std::move(out));
    }
    case SpaceKind::kFinSupport: {
      auto xs = x.entries();
      auto ys = y.entries();
      std::vector<SparseEntry> out;
      const Scalar zero_value(0);
      std::size_t i = 0, j = 0;
      while (i < xs.size() || j < ys.size()) {
        if (j == ys.size() || (i < xs.size() && xs[i].index < ys[j].index)) {
          out.push_back({xs[i].index, f(xs[i].value, zero_value)});
          ++i;
        } else if (i == xs.size() || ys[j].index < xs[i].index) {
          out.push_back({ys[j].index, f(zero_value, ys[j].value)});
          ++j;
        } else {
          out.push_back({xs[i].index, f(xs[i].value, ys[j].value)});
          ++i;
          ++j;
        }
      }
      return Element::fin_support(std::move(out));
    }
    case SpaceKind::kEventuallyConstant: {
      const std::size_t k = std::max(x.prefix().size(), y.prefix().size());
      std::vector<Scalar> out;
      out.reserve(k);
      for (std::size_t n = 1; n <= k; ++n) out.push_back(f(x.atom(n), y.atom(n)));
      return Element::eventually_constant(std::move(out), f(x.tail(), y.tail()));
    }
    case SpaceKind::kPiecewiseLinear: {
      std::vector<Scalar> ts = merged_abscissae(x.points(), y.points());
      std::vector<Scalar> xs = sample(x.points(), ts);
      std::vector<Scalar> ys = sample(y.points(), ts);
      std::vector<Breakpoint> out;
      out.reserve(ts.size() * 2);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (crossings && i > 0) {
          const Scalar d0 = xs[i - 1] - ys[i - 1];
          const Scalar d1 = xs[i] - ys[i];
          if (d0.sign() * d1.sign() < 0) {
            const Scalar tc = ts[i - 1] + (ts[i] - ts[i - 1]) * d0 / (d0 - d1);
            const Scalar vc = interpolate({ts[i - 1], xs[i - 1]}, {ts[i], xs[i]}, tc);
            out.push_back({tc, f(vc, vc)});
          }
        }
        out.push_back({ts[i], f(xs[i], ys[i])});
      }
      return Element::piecewise_linear(std::move(out));
    }
  }
  throw DomainError("unknown space");
}

template <class F>
Element map_linear(const Element& x, F f) {
  const Space& space = x.space();
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      std::vector<Scalar> out;
      for (const auto& v : x.dense_values()) out.push_back(f(v));
      return Element::dense(space, std::move(out));
    }
    case SpaceKind::kFinSupport: {
      std::vector<SparseEntry> out;
      for (const auto& e : x.entries()) out.push_back({e.index, f(e.value)});
      return Element::fin_support(std::move(out));
    }
    case SpaceKind::kEventuallyConstant: {
      std::vector<Scalar> out;
      for (const auto& v : x.prefix()) out.push_back(f(v));
      return Element::eventually_constant(std::move(out), f(x.tail()));
    }
    case SpaceKind::kPiecewiseLinear: {
      std::vector<Breakpoint> out;
      for (const auto& p : x.points()) out.push_back({p.t, f(p.value)});
      return Element::piecewise_linear(std::move(out));
    }
  }
  throw DomainError("unknown space");
}

}  // namespace

Element add(const Element& x, const Element& y) {
  return combine(x, y, [](const Scalar& a, const Scalar& b) { return a + b; }, false, "add");
}

Element subtract(const Element& x, const Element& y) {
  return combine(x, y, [](const Scalar& a, const Scalar& b) { return a - b; }, false, "subtract");
}

Element scale(const Scalar& c, const Element& x) {
  return map_linear(x, [&c](const Scalar& v) { return c * v; });
}

Element negate(const Element& x) {
  return map_linear(x, [](const Scalar& v) { return -v; });
}

Element lattice_binary(LatticeKind kind, const Element& x, const Element& y) {
  if (kind == LatticeKind::kSup) {
    return combine(x, y, [](const Scalar& a, const Scalar& b) { return max(a, b); }, true, "sup");
  }
  return combine(x, y, [](const Scalar& a, const Scalar& b) { return min(a, b); }, true, "inf");
}

Element lattice_unary(UnaryKind kind, const Element& x) {
  switch (kind) {
    case UnaryKind::kPos:
      return sup(x, zero(x.space()));
    case UnaryKind::kNeg:
      return sup(negate(x), zero(x.space()));
    case UnaryKind::kAbs:
      return sup(x, negate(x));
  }
  throw DomainError("unknown unary lattice operation");
}

bool is_positive(const Element& x) {
  auto nonneg = [](const Scalar& s) { return s.sign() >= 0; };
  switch (x.space().kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      auto v = x.dense_values();
      return std::all_of(v.begin(), v.end(), nonneg);
    }
    case SpaceKind::kFinSupport: {
      auto v = x.entries();
      return std::all_of(v.begin(), v.end(), [&](const SparseEntry& e) { return nonneg(e.value); });
    }
    case SpaceKind::kEventuallyConstant: {
      auto v = x.prefix();
      return nonneg(x.tail()) && std::all_of(v.begin(), v.end(), nonneg);
    }
    case SpaceKind::kPiecewiseLinear: {
      auto v = x.points();
      return std::all_of(v.begin(), v.end(), [&](const Breakpoint& p) { return nonneg(p.value); });
    }
  }
  return false;
}

bool leq(const Element& x, const Element& y) {
  require_same_space(x.space(), y.space(), "leq");
  return is_positive(subtract(y, x));
}

bool is_disjoint(const Element& x, const Element& y) {
  require_same_space(x.space(), y.space(), "is_disjoint");
  return inf(abs(x), abs(y)).is_zero();
}

Element combine_atoms(const Element& x, const Element& y,
                      const std::function<Scalar(const Scalar&, const Scalar&)>& f) {
  if (!x.space().is_atomic()) throw DomainError("combine_atoms needs an atomic space");
  return combine(x, y, f, false, "combine_atoms");
}

Element constant(const Space& space, ConstantKind which) {
  const Scalar c(which == ConstantKind::kOne ? 1 : 0);
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction:
      return Element::dense(space, std::vector<Scalar>(space.atom_count(), c));
    case SpaceKind::kFinSupport:
      if (which == ConstantKind::kOne) {
        throw UnsupportedError("the finitely supported sequences have no order unit");
      }
      return Element::fin_support({});
    case SpaceKind::kEventuallyConstant:
      return Element::eventually_constant({}, c);
    case SpaceKind::kPiecewiseLinear:
      return Element::piecewise_linear({{Scalar(0), c}, {Scalar(1), c}});
  }
  throw DomainError("unknown space");
}

}  // namespace rieszlab
