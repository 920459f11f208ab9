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

#include "rieszlab/operator.hpp"

#include <algorithm>
#include <set>

#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/riesz.hpp"

namespace rieszlab {

Operator make_operator(OperatorNode node) {
  return Operator(std::make_shared<const OperatorNode>(std::move(node)));
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string kernel_str(const Kernel& k) {
  std::string out = "kernel{";
  bool first = true;
  for (const auto& term : k.terms) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(term.source);
    if (term.source != term.target) out += "->" + std::to_string(term.target);
    out += ": t -> " + term.f.str();
  }
  if (k.diagonal) {
    if (!first) out += ", ";
    out += "*: t -> " + k.diagonal->str();
  }
  return out + "}";
}

std::string linec_str(const LinearEC& l) {
  std::string out = "linec{";
  bool first = true;
  for (const auto& [n, a] : l.coefficients.table) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(n) + ":" + a.str();
  }
  if (l.coefficients.extrapolate) out += ", ...";
  out += "; unit -> " + (l.unit_value.is_zero() ? std::string("0") : l.unit_value.str());
  return out + "; target " + l.target.str() + "}";
}

// Atoms 1..bound that a kernel evaluation must visit explicitly.
std::uint64_t explicit_atom_bound(const Kernel& k, const Element& x) {
  std::uint64_t bound = 0;
  for (const auto& t : k.terms) bound = std::max({bound, t.source, t.target});
  switch (x.space().kind()) {
    case SpaceKind::kEventuallyConstant:
      bound = std::max<std::uint64_t>(bound, x.prefix().size());
      break;
    case SpaceKind::kFinSupport:
      if (!x.entries().empty()) bound = std::max(bound, x.entries().back().index);
      break;
    default:
      bound = std::max<std::uint64_t>(bound, x.space().atom_count());
      break;
  }
  return bound;
}

Element apply_kernel(const Kernel& k, const Space& codomain, const Element& x) {
  const std::uint64_t bound = explicit_atom_bound(k, x);
  std::set<std::uint64_t> listed;
  for (const auto& t : k.terms) listed.insert(t.source);

  std::map<std::uint64_t, Scalar> out;
  for (const auto& t : k.terms) {
    Scalar v = t.f(x.atom(t.source));
    if (!v.is_zero()) out[t.target] += v;
  }
  if (k.diagonal) {
    auto visit = [&](std::uint64_t n, const Scalar& xn) {
      if (listed.count(n)) return;
      Scalar v = (*k.diagonal)(xn);
      if (!v.is_zero()) out[n] += v;
    };
    if (x.space().kind() == SpaceKind::kFinSupport) {
      for (const auto& e : x.entries()) visit(e.index, e.value);
    } else {
      // Past `bound` an ec input is constant and every atom maps to the tail.
      const std::uint64_t last = x.space().is_dense() ? x.space().atom_count() : bound;
      for (std::uint64_t n = 1; n <= last; ++n) visit(n, x.atom(n));
    }
  }

  switch (codomain.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      std::vector<Scalar> values(codomain.atom_count(), Scalar(0));
      for (auto& [n, v] : out) values[n - 1] = std::move(v);
      return Element::dense(codomain, std::move(values));
    }
    case SpaceKind::kFinSupport: {
      std::vector<SparseEntry> entries;
      for (auto& [n, v] : out) entries.push_back({n, std::move(v)});
      return Element::fin_support(std::move(entries));
    }
    case SpaceKind::kEventuallyConstant: {
      Scalar tail(0);
      if (k.diagonal && x.space().kind() == SpaceKind::kEventuallyConstant) tail = (*k.diagonal)(x.tail());
      std::uint64_t len = bound;
      if (!out.empty()) len = std::max(len, out.rbegin()->first);
      std::vector<Scalar> prefix(len, Scalar(0));
      for (auto& [n, v] : out) prefix[n - 1] = std::move(v);
      return Element::eventually_constant(std::move(prefix), std::move(tail));
    }
    case SpaceKind::kPiecewiseLinear:
      break;
  }
  throw DomainError("kernel codomain must be atomic");
}

Value apply_series(const AlternatingSeries& s, const Element& x) {
  Scalar exact(0);
  const std::size_t k = x.prefix().size();
  for (std::size_t n = 1; n <= k; ++n) {
    Scalar term = x.atom(n).abs() / Scalar(static_cast<long>(n));
    if (n % 2 == 1) term = -term;
    exact += term;
  }
  const Scalar c = x.tail().abs();
  if (c.is_zero()) return RealInterval::point(exact);
  // Σ_{n>k} (−1)^n/n = −ln 2 − Σ_{n≤k} (−1)^n/n.
  Scalar head(0);
  for (std::size_t n = 1; n <= k; ++n) {
    Scalar term(1, static_cast<long>(n));
    head += n % 2 == 1 ? -term : term;
  }
  const RealInterval ln2 = ln2_enclosure(s.tolerance / c);
  const Scalar lo = exact + c * (-ln2.upper - head);
  const Scalar hi = exact + c * (-ln2.lower - head);
  return RealInterval{lo, hi};
}

Value apply_linear_ec(const LinearEC& l, const Element& x) {
  const Scalar& c = x.tail();
  Scalar s(0);
  for (std::size_t n = 1; n <= x.prefix().size(); ++n) {
    const Scalar a = l.coefficients.at(n);
    if (!a.is_zero()) s += a * (x.atom(n) - c);
  }
  return s * l.target + c * l.unit_value;
}

void check_function_vanishes(const PiecewisePolynomial& f) {
  if (!f(Scalar(0)).is_zero()) {
    throw PreconditionError("kernel function t -> " + f.str() + " does not vanish at 0");
  }
}

}  // namespace

const Space& Operator::domain() const { return node_->domain; }
const Space& Operator::codomain() const { return node_->codomain; }
bool Operator::real_valued() const { return node_->real_valued; }

std::string Operator::str() const {
  const std::string on = " on " + domain().str() + " -> " + codomain().str();
  return std::visit(
      Overloaded{
          [&](const Kernel& k) { return kernel_str(k) + on; },
          [&](const LinearEC& l) { return linec_str(l); },
          [&](const MatchTable& m) {
            std::string out = "table{";
            for (std::size_t i = 0; i < m.entries.size(); ++i) {
              if (i) out += ", ";
              out += m.entries[i].first.str() + " -> " + m.entries[i].second.str();
            }
            return out + "}" + on;
          },
          [&](const LateralMeet& l) { return "latmeet(" + l.a.str() + ", " + l.b.str() + ")"; },
          [&](const AlternatingSeries& s) {
            if (s.tolerance == Scalar::pow10_inverse(9)) return std::string("series");
            return "series(" + s.tolerance.str() + ")";
          },
          [&](const OperatorSum& s) {
            std::string out = "(";
            for (std::size_t i = 0; i < s.terms.size(); ++i) {
              if (i) out += " + ";
              out += s.terms[i].str();
            }
            return out + ")";
          },
          [&](const OperatorScaled& s) { return "(" + s.factor.str() + " * " + s.inner.str() + ")"; },
      },
      node_->body);
}

Scalar CoefficientRule::at(std::uint64_t n) const {
  auto it = table.find(n);
  if (it != table.end()) return it->second;
  if (!extrapolate || table.empty()) return Scalar(0);
  const auto last = std::prev(table.end());
  if (n < last->first) return Scalar(0);
  Scalar step(0);
  if (table.size() >= 2) step = last->second - std::prev(last)->second;
  return last->second + Scalar(static_cast<long>(n - last->first)) * step;
}

Operator make_kernel(const Space& domain, const Space& codomain, Kernel kernel) {
  if (!domain.is_atomic() || !codomain.is_atomic()) {
    throw DomainError("kernel operators need atomic domain and codomain");
  }
  for (const auto& t : kernel.terms) {
    check_function_vanishes(t.f);
    if (t.source == 0 || t.target == 0) throw StructuralError("kernel atoms are numbered from 1");
    if (domain.is_dense() && t.source > domain.atom_count()) {
      throw DomainError("kernel source atom " + std::to_string(t.source) + " outside " + domain.str());
    }
    if (codomain.is_dense() && t.target > codomain.atom_count()) {
      throw DomainError("kernel target atom " + std::to_string(t.target) + " outside " + codomain.str());
    }
  }
  if (kernel.diagonal) {
    check_function_vanishes(*kernel.diagonal);
    if (domain.is_dense() != codomain.is_dense() ||
        (domain.is_dense() && domain.atom_count() > codomain.atom_count())) {
      throw DomainError("diagonal kernel needs a codomain with at least the atoms of the domain");
    }
    if (domain.kind() == SpaceKind::kEventuallyConstant && codomain.kind() != SpaceKind::kEventuallyConstant) {
      throw DomainError("diagonal kernel on ec needs an ec codomain");
    }
  }
  if (domain.kind() == SpaceKind::kEventuallyConstant && codomain.kind() == SpaceKind::kFinSupport &&
      kernel.diagonal) {
    throw DomainError("diagonal kernel from ec into fin is not well defined");
  }
  return make_operator({domain, codomain, false, std::move(kernel)});
}

Operator make_linear_ec(CoefficientRule coefficients, Element target, Element unit_value) {
  require_same_space(target.space(), unit_value.space(), "linec target/unit");
  for (const auto& [n, a] : coefficients.table) {
    if (n == 0) throw StructuralError("linec coefficients are numbered from 1");
  }
  Space codomain = target.space();
  return make_operator({Space::eventually_constant(), std::move(codomain), false,
                        LinearEC{std::move(coefficients), std::move(target), std::move(unit_value)}});
}

Operator make_match_table(const Space& domain, const Space& codomain,
                          std::vector<std::pair<Element, Element>> entries, std::size_t validation_level) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_same_space(entries[i].first.space(), domain, "table key");
    require_same_space(entries[i].second.space(), codomain, "table value");
    if (entries[i].first.is_zero()) throw PreconditionError("table keys must be nonzero (T(0) = 0)");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[i].first == entries[j].first) {
        throw PreconditionError("duplicate table key " + entries[i].first.str());
      }
    }
  }
  Operator op = make_operator({domain, codomain, false, MatchTable{entries}});
  for (const auto& [key, value] : entries) {
    std::optional<std::size_t> level;
    if (!has_finite_fragments(key)) level = std::max(validation_level, key.prefix().size());
    const FragmentEnumeration frags = fragments(key, level);
    for (std::uint64_t m = 0; m < frags.size(); ++m) {
      const Decomposition d = decomposition_at(frags, m);
      if (d.left.is_zero() || d.right.is_zero()) continue;
      const Value split = apply(op, d.left) + apply(op, d.right);
      if (!(split == Value(value))) {
        throw PreconditionError("table is not additive on the decomposition " + key.str() + " = " + d.left.str() +
                                " ⊔ " + d.right.str());
      }
    }
  }
  return op;
}

Operator make_lateral_meet(Element a, Element b) {
  require_same_space(a.space(), b.space(), "latmeet");
  Space space = a.space();
  return make_operator({space, space, false, LateralMeet{std::move(a), std::move(b)}});
}

Operator make_alternating_series(Scalar tolerance) {
  if (tolerance.sign() <= 0) throw PreconditionError("series tolerance must be positive");
  return make_operator({Space::eventually_constant(), Space::coordinate(1), true, AlternatingSeries{tolerance}});
}

Operator make_sum(std::vector<Operator> terms) {
  if (terms.empty()) throw PreconditionError("empty operator sum");
  bool real = false;
  for (const auto& t : terms) {
    require_same_space(t.domain(), terms.front().domain(), "operator sum domain");
    require_same_space(t.codomain(), terms.front().codomain(), "operator sum codomain");
    real = real || t.real_valued();
  }
  Space domain = terms.front().domain();
  Space codomain = terms.front().codomain();
  return make_operator({std::move(domain), std::move(codomain), real, OperatorSum{std::move(terms)}});
}

Operator make_scaled(Scalar factor, Operator inner) {
  Space domain = inner.domain();
  Space codomain = inner.codomain();
  const bool real = inner.real_valued();
  return make_operator({std::move(domain), std::move(codomain), real, OperatorScaled{std::move(factor), std::move(inner)}});
}

Operator operator+(const Operator& s, const Operator& t) { return make_sum({s, t}); }
Operator operator-(const Operator& t) { return make_scaled(Scalar(-1), t); }
Operator operator-(const Operator& s, const Operator& t) { return make_sum({s, -t}); }
Operator operator*(const Scalar& c, const Operator& t) { return make_scaled(c, t); }

Value apply(const Operator& op, const Element& x) {
  require_same_space(x.space(), op.domain(), "operator application");
  return std::visit(
      Overloaded{
          [&](const Kernel& k) -> Value { return apply_kernel(k, op.codomain(), x); },
          [&](const LinearEC& l) -> Value { return apply_linear_ec(l, x); },
          [&](const MatchTable& m) -> Value {
            for (const auto& [key, value] : m.entries) {
              if (key == x) return value;
            }
            return zero(op.codomain());
          },
          [&](const LateralMeet& l) -> Value { return lateral_inf(x, l.a) - lateral_inf(x, l.b); },
          [&](const AlternatingSeries& s) -> Value { return apply_series(s, x); },
          [&](const OperatorSum& s) -> Value {
            Value acc = apply(s.terms.front(), x);
            for (std::size_t i = 1; i < s.terms.size(); ++i) acc = acc + apply(s.terms[i], x);
            return acc;
          },
          [&](const OperatorScaled& s) -> Value { return s.factor * apply(s.inner, x); },
      },
      op.node().body);
}

bool is_linear(const Operator& op) {
  return std::visit(Overloaded{
                        [](const Kernel& k) {
                          for (const auto& t : k.terms) {
                            if (!t.f.linear_coefficient()) return false;
                          }
                          return !k.diagonal || k.diagonal->linear_coefficient().has_value();
                        },
                        [](const LinearEC&) { return true; },
                        [](const OperatorSum& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(), [](const Operator& t) { return is_linear(t); });
                        },
                        [](const OperatorScaled& s) { return is_linear(s.inner); },
                        [](const auto&) { return false; },
                    },
                    op.node().body);
}

std::vector<Element> distinguished_points(const Operator& op) {
  std::vector<Element> out;
  std::visit(Overloaded{
                 [&](const MatchTable& m) {
                   for (const auto& e : m.entries) out.push_back(e.first);
                 },
                 [&](const LateralMeet& l) {
                   out.push_back(l.a);
                   out.push_back(l.b);
                 },
                 [&](const OperatorSum& s) {
                   for (const auto& t : s.terms) {
                     auto more = distinguished_points(t);
                     out.insert(out.end(), more.begin(), more.end());
                   }
                 },
                 [&](const OperatorScaled& s) { out = distinguished_points(s.inner); },
                 [](const auto&) {},
             },
             op.node().body);
  return out;
}

RealInterval ln2_enclosure(const Scalar& tolerance) {
  // ln 2 = Σ_{j≥1} 1/(j·2^j); the tail after M terms is below 1/((M+1)·2^M).
  Scalar partial(0);
  Scalar power(1);
  for (long j = 1;; ++j) {
    power *= Scalar(2);
    partial += Scalar(1) / (Scalar(j) * power);
    const Scalar remainder = Scalar(1) / (Scalar(j + 1) * power);
    if (remainder <= tolerance) return RealInterval{partial, partial + remainder};
  }
}

Space default_simple_space() { return Space::simple_function({Scalar(0), Scalar(1, 2), Scalar(1)}); }

Operator named_example(std::string_view id, const std::optional<Element>& parameter) {
  if (id == "plram_series") return make_alternating_series();
  if (id == "knbdbj") {
    Element f = parameter ? *parameter : one(Space::eventually_constant());
    CoefficientRule rule{{{1, Scalar(1)}, {2, Scalar(2)}}, true};
    Element unit = zero(f.space());
    return make_linear_ec(std::move(rule), std::move(f), std::move(unit));
  }
  if (id == "meyer_pl") {
    const Space pl = Space::piecewise_linear();
    const Element u = one(pl);
    return make_match_table(pl, pl, {{u, u}, {Scalar(2) * u, -u}});
  }
  if (id == "lateral_meet") {
    const Space space = parameter ? parameter->space() : default_simple_space();
    if (space.kind() != SpaceKind::kSimpleFunction) {
      throw DomainError("lateral_meet example lives on a simple-function space");
    }
    const Element u = one(space);
    return make_lateral_meet(u, Scalar(2) * u);
  }
  throw LookupError("unknown example operator '" + std::string(id) + "'");
}

}  // namespace rieszlab
