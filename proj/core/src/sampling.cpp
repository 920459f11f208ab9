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

#include "rieszlab/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/riesz.hpp"

namespace rieszlab {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

bool table_friendly(const Space& space) {
  return space.kind() == SpaceKind::kPiecewiseLinear || (space.is_dense() && space.atom_count() == 1);
}

// Distinct rationals strictly inside (0, 1) with small denominators, sorted.
std::vector<Scalar> interior_points(Rng& rng, std::size_t count) {
  std::set<Scalar> points;
  for (int tries = 0; points.size() < count && tries < 200; ++tries) {
    const std::int64_t q = rng.range(2, 8);
    const std::int64_t p = rng.range(1, q - 1);
    points.insert(Scalar(p, q));
  }
  return {points.begin(), points.end()};
}

}  // namespace

std::uint64_t Rng::derive(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Rng::below needs a positive bound");
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("Rng::range with hi < lo");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(below(span));
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed)
    : space_menu{SpaceKind::kCoordinate, SpaceKind::kSimpleFunction, SpaceKind::kFinSupport,
                 SpaceKind::kEventuallyConstant, SpaceKind::kPiecewiseLinear},
      weights{{OperatorVariant::kKernel, 4},     {OperatorVariant::kLinearKernel, 1},
              {OperatorVariant::kLinearEC, 2},   {OperatorVariant::kMatchTable, 1},
              {OperatorVariant::kLateralMeet, 2}, {OperatorVariant::kSum, 1}},
      rng_(seed) {}

Scalar InstanceGenerator::scalar() {
  if (rng_.chance(bounds.zero_percent)) return Scalar(0);
  return nonzero_scalar();
}

Scalar InstanceGenerator::nonzero_scalar() {
  std::int64_t p = rng_.range(1, bounds.numerator);
  if (rng_.chance(50)) p = -p;
  return Scalar(p, rng_.range(1, bounds.denominator));
}

Space InstanceGenerator::space() { return space_of(rng_.pick(space_menu)); }

Space InstanceGenerator::space_of(SpaceKind kind) {
  const auto dim = static_cast<std::size_t>(rng_.range(1, static_cast<std::int64_t>(bounds.max_dimension)));
  switch (kind) {
    case SpaceKind::kCoordinate:
      return Space::coordinate(dim);
    case SpaceKind::kSimpleFunction: {
      std::vector<Scalar> endpoints{Scalar(0)};
      for (Scalar& t : interior_points(rng_, dim - 1)) endpoints.push_back(std::move(t));
      endpoints.emplace_back(1);
      return Space::simple_function(std::move(endpoints));
    }
    case SpaceKind::kFinSupport:
      return Space::fin_support();
    case SpaceKind::kEventuallyConstant:
      return Space::eventually_constant();
    case SpaceKind::kPiecewiseLinear:
      return Space::piecewise_linear();
  }
  throw UnsupportedError("unknown space kind");
}

Space InstanceGenerator::atomic_space() {
  std::vector<SpaceKind> atomic;
  for (SpaceKind k : space_menu) {
    if (k != SpaceKind::kPiecewiseLinear) atomic.push_back(k);
  }
  if (atomic.empty()) atomic.push_back(SpaceKind::kCoordinate);
  return space_of(rng_.pick(atomic));
}

Element InstanceGenerator::element(const Space& space) {
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      std::vector<Scalar> values;
      for (std::size_t i = 0; i < space.atom_count(); ++i) values.push_back(scalar());
      return Element::dense(space, std::move(values));
    }
    case SpaceKind::kFinSupport: {
      const auto count = static_cast<std::size_t>(rng_.range(0, static_cast<std::int64_t>(bounds.max_length)));
      std::vector<std::uint64_t> indices(bounds.max_length + 2);
      std::iota(indices.begin(), indices.end(), 1);
      std::vector<SparseEntry> entries;
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng_.below(indices.size() - i);
        std::swap(indices[i], indices[j]);
        entries.push_back({indices[i], nonzero_scalar()});
      }
      return Element::fin_support(std::move(entries));
    }
    case SpaceKind::kEventuallyConstant: {
      const auto length = static_cast<std::size_t>(rng_.range(0, static_cast<std::int64_t>(bounds.max_length)));
      std::vector<Scalar> prefix;
      for (std::size_t i = 0; i < length; ++i) prefix.push_back(scalar());
      return Element::eventually_constant(std::move(prefix), scalar());
    }
    case SpaceKind::kPiecewiseLinear: {
      const auto count = static_cast<std::size_t>(rng_.range(0, static_cast<std::int64_t>(bounds.max_breakpoints)));
      std::vector<Breakpoint> points{{Scalar(0), scalar()}};
      for (Scalar& t : interior_points(rng_, count)) points.push_back({std::move(t), scalar()});
      points.push_back({Scalar(1), scalar()});
      return Element::piecewise_linear(std::move(points));
    }
  }
  throw UnsupportedError("unknown space kind");
}

Element InstanceGenerator::full_support_element(const Space& space) {
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      std::vector<Scalar> values;
      for (std::size_t i = 0; i < space.atom_count(); ++i) values.push_back(nonzero_scalar());
      return Element::dense(space, std::move(values));
    }
    case SpaceKind::kFinSupport:
      throw UnsupportedError("fin has no element with full support");
    case SpaceKind::kEventuallyConstant: {
      const auto length = static_cast<std::size_t>(rng_.range(0, static_cast<std::int64_t>(bounds.max_length)));
      std::vector<Scalar> prefix;
      for (std::size_t i = 0; i < length; ++i) prefix.push_back(nonzero_scalar());
      return Element::eventually_constant(std::move(prefix), nonzero_scalar());
    }
    case SpaceKind::kPiecewiseLinear: {
      const int sign = rng_.chance(50) ? 1 : -1;
      auto value = [&] { return Scalar(sign) * nonzero_scalar().abs(); };
      const auto count = static_cast<std::size_t>(rng_.range(0, static_cast<std::int64_t>(bounds.max_breakpoints)));
      std::vector<Breakpoint> points{{Scalar(0), value()}};
      for (Scalar& t : interior_points(rng_, count)) points.push_back({std::move(t), value()});
      points.push_back({Scalar(1), value()});
      return Element::piecewise_linear(std::move(points));
    }
  }
  throw UnsupportedError("unknown space kind");
}

Element InstanceGenerator::fragment(const Element& e) {
  std::optional<std::size_t> level;
  if (!has_finite_fragments(e)) level = e.prefix().size() + static_cast<std::size_t>(rng_.range(0, 2));
  const FragmentEnumeration frags = fragments(e, level);
  return frags.at(rng_.below(frags.size()));
}

std::pair<Element, Element> InstanceGenerator::disjoint_pair(const Space& space) {
  Element e = element(space);
  Element u = fragment(e);
  Element v = e - u;
  if (rng_.chance(50)) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

PiecewisePolynomial InstanceGenerator::function(bool linear) {
  if (linear) return Polynomial({Scalar(0), nonzero_scalar()});
  switch (rng_.below(4)) {
    case 0:
      return Polynomial({Scalar(0), scalar(), nonzero_scalar()});
    case 1:
      return Polynomial({Scalar(0), nonzero_scalar()});
    case 2:
      return Polynomial({Scalar(0), scalar(), Scalar(0), nonzero_scalar()});
    default: {
      const Scalar b = nonzero_scalar();
      Polynomial through_zero({Scalar(0), scalar(), scalar()});
      Polynomial other({nonzero_scalar(), scalar()});
      // The piece that covers t = 0 must vanish there.
      if (b > Scalar(0)) return PiecewisePolynomial({b}, {through_zero, other});
      return PiecewisePolynomial({b}, {other, through_zero});
    }
  }
}

Operator InstanceGenerator::kernel(const Space& domain, const Space& codomain, bool linear, bool diagonal_only,
                                   bool summing) {
  if (!domain.is_atomic() || !codomain.is_atomic()) throw DomainError("kernel needs atomic spaces");
  const std::size_t sources = domain.is_dense() ? domain.atom_count()
                                                : static_cast<std::size_t>(rng_.range(1, static_cast<std::int64_t>(bounds.max_length)));
  const std::size_t targets = codomain.is_dense() ? codomain.atom_count() : bounds.max_length + 1;
  const bool diagonal_ok =
      domain.is_dense() == codomain.is_dense() && (!domain.is_dense() || domain.atom_count() <= codomain.atom_count()) &&
      (domain.kind() != SpaceKind::kEventuallyConstant || codomain.kind() == SpaceKind::kEventuallyConstant);
  Kernel k;
  if (summing) {
    for (std::uint64_t s = 1; s <= sources; ++s) k.terms.push_back({s, 1, function(linear)});
    return make_kernel(domain, codomain, std::move(k));
  }
  if (diagonal_only) {
    if (diagonal_ok && rng_.chance(50)) {
      k.diagonal = function(linear);
      return make_kernel(domain, codomain, std::move(k));
    }
    std::vector<std::uint64_t> free(targets);
    std::iota(free.begin(), free.end(), 1);
    for (std::uint64_t s = 1; s <= sources && !free.empty(); ++s) {
      const std::size_t j = rng_.below(free.size());
      k.terms.push_back({s, free[j], function(linear)});
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return make_kernel(domain, codomain, std::move(k));
  }
  if (diagonal_ok && rng_.chance(30)) k.diagonal = function(linear);
  for (std::uint64_t s = 1; s <= sources; ++s) {
    if (k.diagonal && rng_.chance(50)) continue;
    k.terms.push_back({s, 1 + rng_.below(targets), function(linear)});
  }
  return make_kernel(domain, codomain, std::move(k));
}

Operator InstanceGenerator::linear_ec(const Space& codomain) {
  CoefficientRule rule;
  const auto count = rng_.range(1, 3);
  for (std::int64_t i = 0; i < count; ++i) rule.table[1 + rng_.below(5)] = scalar();
  rule.extrapolate = rng_.chance(50);
  return make_linear_ec(std::move(rule), element(codomain), element(codomain));
}

Operator InstanceGenerator::match_table(const Space& space) {
  if (!table_friendly(space)) throw UnsupportedError("match tables are generated on pl or one-atom spaces");
  std::vector<std::pair<Element, Element>> entries;
  const auto count = rng_.range(1, 3);
  for (std::int64_t i = 0; i < count; ++i) {
    Element key = full_support_element(space);
    const bool fresh = std::none_of(entries.begin(), entries.end(), [&](const auto& e) { return e.first == key; });
    if (fresh) entries.emplace_back(std::move(key), element(space));
  }
  return make_match_table(space, space, std::move(entries));
}

Operator InstanceGenerator::lateral_meet(const Space& space) {
  Element a = element(space);
  Element b = element(space);
  switch (rng_.below(3)) {
    case 0:
      b = fragment(a);
      break;
    case 1:
      b = nonzero_scalar() * a;
      break;
    default:
      break;
  }
  return make_lateral_meet(std::move(a), std::move(b));
}

Operator InstanceGenerator::operator_on(const Space& domain) {
  std::vector<std::pair<OperatorVariant, unsigned>> allowed;
  unsigned total = 0;
  for (const auto& [variant, weight] : weights) {
    bool ok = weight > 0;
    switch (variant) {
      case OperatorVariant::kKernel:
      case OperatorVariant::kLinearKernel:
        ok = ok && domain.is_atomic();
        break;
      case OperatorVariant::kLinearEC:
        ok = ok && domain.kind() == SpaceKind::kEventuallyConstant;
        break;
      case OperatorVariant::kMatchTable:
        ok = ok && table_friendly(domain);
        break;
      case OperatorVariant::kLateralMeet:
      case OperatorVariant::kSum:
        break;
    }
    if (ok) {
      allowed.emplace_back(variant, weight);
      total += weight;
    }
  }
  if (total == 0) return lateral_meet(domain);
  std::uint64_t r = rng_.below(total);
  OperatorVariant chosen = allowed.front().first;
  for (const auto& [variant, weight] : allowed) {
    if (r < weight) {
      chosen = variant;
      break;
    }
    r -= weight;
  }
  switch (chosen) {
    case OperatorVariant::kKernel:
      return kernel(domain, atomic_space());
    case OperatorVariant::kLinearKernel:
      return kernel(domain, atomic_space(), true);
    case OperatorVariant::kLinearEC:
      return linear_ec(space_of(rng_.pick(space_menu)));
    case OperatorVariant::kMatchTable:
      return match_table(domain);
    case OperatorVariant::kLateralMeet:
      return lateral_meet(domain);
    case OperatorVariant::kSum: {
      Operator first = lateral_meet(domain);
      Operator second = domain.is_atomic() ? kernel(domain, domain) : lateral_meet(domain);
      return make_sum({first, nonzero_scalar() * second});
    }
  }
  return lateral_meet(domain);
}

Operator InstanceGenerator::operator_between(const Space& domain, const Space& codomain) {
  std::vector<int> options;
  if (domain.is_atomic() && codomain.is_atomic()) options.insert(options.end(), {0, 0, 1});
  if (domain.kind() == SpaceKind::kEventuallyConstant) options.push_back(2);
  if (domain == codomain) options.push_back(3);
  if (domain == codomain && table_friendly(domain)) options.push_back(4);
  if (options.empty()) {
    throw UnsupportedError("no generated operator maps " + domain.str() + " into " + codomain.str());
  }
  switch (rng_.pick(options)) {
    case 0:
      return kernel(domain, codomain);
    case 1:
      return kernel(domain, codomain, true);
    case 2:
      return linear_ec(codomain);
    case 3:
      return lateral_meet(domain);
    default:
      return match_table(domain);
  }
}

std::pair<Operator, Operator> InstanceGenerator::operator_pair(const Space& domain) {
  Operator s = operator_on(domain);
  if (rng_.chance(10)) return {s, s};
  Operator t = operator_between(domain, s.codomain());
  return {std::move(s), std::move(t)};
}

Operator InstanceGenerator::nonzero_linear() {
  if (rng_.chance(50)) {
    CoefficientRule rule;
    const auto count = rng_.range(1, 3);
    for (std::int64_t i = 0; i < count; ++i) rule.table[1 + rng_.below(5)] = nonzero_scalar();
    rule.extrapolate = rng_.chance(50);
    const Space codomain = space();
    Element target = element(codomain);
    while (target.is_zero()) target = element(codomain);
    return make_linear_ec(std::move(rule), std::move(target), element(codomain));
  }
  return kernel(atomic_space(), atomic_space(), true);
}

Operator InstanceGenerator::dp_operator(const Space& domain) {
  if (domain.is_atomic() && rng_.chance(60)) {
    const Space codomain = rng_.chance(50) ? domain : atomic_space();
    return kernel(domain, codomain, false, true);
  }
  if (table_friendly(domain) && rng_.chance(30)) return match_table(domain);
  return lateral_meet(domain);
}

}  // namespace rieszlab
