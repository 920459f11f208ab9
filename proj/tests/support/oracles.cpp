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

#include "support/oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

using rieszlab::SpaceKind;

std::vector<Scalar> positions(std::initializer_list<const Element*> xs) {
  const Element& first = **xs.begin();
  if (first.space().kind() != SpaceKind::kPiecewiseLinear) {
    std::size_t n = 0;
    for (const Element* x : xs) {
      switch (x->space().kind()) {
        case SpaceKind::kCoordinate:
        case SpaceKind::kSimpleFunction:
          n = std::max(n, x->dense_values().size());
          break;
        case SpaceKind::kFinSupport:
          if (!x->entries().empty()) n = std::max<std::size_t>(n, x->entries().back().index + 2);
          break;
        case SpaceKind::kEventuallyConstant:
          n = std::max(n, x->prefix().size() + 2);
          break;
        default:
          break;
      }
    }
    if (first.space().is_dense()) n = first.space().atom_count();
    std::vector<Scalar> out;
    for (std::size_t i = 1; i <= n; ++i) out.emplace_back(static_cast<long>(i));
    return out;
  }
  std::set<Scalar> ts;
  for (const Element* x : xs) {
    for (const auto& p : x->points()) ts.insert(p.t);
  }
  std::vector<Scalar> sorted(ts.begin(), ts.end());
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.push_back(sorted[i]);
    if (i + 1 < sorted.size()) out.push_back((sorted[i] + sorted[i + 1]) / Scalar(2));
  }
  return out;
}

Scalar value_at(const Element& x, const Scalar& position) {
  if (x.space().kind() != SpaceKind::kPiecewiseLinear) {
    const auto i = static_cast<std::uint64_t>(position.numerator_int());
    switch (x.space().kind()) {
      case SpaceKind::kFinSupport:
        for (const auto& e : x.entries()) {
          if (e.index == i) return e.value;
        }
        return Scalar(0);
      case SpaceKind::kEventuallyConstant:
        return i <= x.prefix().size() ? x.prefix()[i - 1] : x.tail();
      default:
        return x.dense_values()[i - 1];
    }
  }
  const auto pts = x.points();
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k].t <= position && position <= pts[k + 1].t) {
      const Scalar w = (position - pts[k].t) / (pts[k + 1].t - pts[k].t);
      return pts[k].value + w * (pts[k + 1].value - pts[k].value);
    }
  }
  return pts.back().value;
}

bool pointwise_matches(const Element& z, const Element& x, const Element& y,
                       const std::function<Scalar(const Scalar&, const Scalar&)>& f) {
  for (const Scalar& p : positions({&z, &x, &y})) {
    if (value_at(z, p) != f(value_at(x, p), value_at(y, p))) return false;
  }
  return true;
}

bool pointwise_matches(const Element& z, const Element& x, const std::function<Scalar(const Scalar&)>& f) {
  for (const Scalar& p : positions({&z, &x})) {
    if (value_at(z, p) != f(value_at(x, p))) return false;
  }
  return true;
}

Scalar harmonic(unsigned n) {
  Scalar h(0);
  for (unsigned k = 1; k <= n; ++k) h += Scalar(1, static_cast<long>(k));
  return h;
}

std::vector<Element> dense_restrictions(const Element& x) {
  const auto v = x.dense_values();
  std::vector<Element> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
    std::vector<Scalar> w;
    for (std::size_t i = 0; i < v.size(); ++i) w.push_back((mask >> i) & 1 ? v[i] : Scalar(0));
    out.push_back(Element::dense(x.space(), std::move(w)));
  }
  return out;
}

Scalar summed_closed_form(const std::vector<rieszlab::PiecewisePolynomial>& f,
                          const std::vector<rieszlab::PiecewisePolynomial>& g, const Element& x,
                          const std::function<Scalar(const Scalar&, const Scalar&)>& op) {
  Scalar total(0);
  const auto v = x.dense_values();
  for (std::size_t i = 0; i < v.size(); ++i) total += op(f[i](v[i]), g[i](v[i]));
  return total;
}

}  // namespace oracle
