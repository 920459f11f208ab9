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

#include "rieszlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <variant>

#include "rieszlab/error.hpp"
#include "rieszlab/riesz.hpp"

namespace rieszlab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

using PairVisitor = std::function<bool(const Element&, const Element&)>;

struct PairStats {
  std::uint64_t visited = 0;
  bool exhaustive = false;
  bool stopped = false;
};

bool grid_applies(const Space& space, const SamplingPlan& plan) {
  return plan.exhaustive && space.is_dense() && space.atom_count() <= plan.grid_dimension;
}

// Calls f on every point of {-r..r}^n until it returns false.
bool for_each_grid_point(const Space& space, std::int64_t r, const std::function<bool(const Element&)>& f) {
  const std::size_t n = space.atom_count();
  std::vector<std::int64_t> digits(n, -r);
  for (;;) {
    std::vector<Scalar> values(digits.begin(), digits.end());
    if (!f(Element::dense(space, std::move(values)))) return false;
    std::size_t i = 0;
    while (i < n && digits[i] == r) digits[i++] = -r;
    if (i == n) return true;
    ++digits[i];
  }
}

// Splittings of k small enough to walk completely.
std::optional<FragmentEnumeration> small_fragments(const Element& k, std::size_t max_pieces = 10) {
  std::optional<std::size_t> level;
  if (!has_finite_fragments(k)) level = k.prefix().size() + 1;
  try {
    FragmentEnumeration frags = fragments(k, level);
    if (frags.pieces().size() > max_pieces) return std::nullopt;
    return frags;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

PairStats for_each_disjoint_pair(const Operator& op, const SamplingPlan& plan, const PairVisitor& visit) {
  PairStats stats;
  auto step = [&](const Element& u, const Element& v) {
    ++stats.visited;
    if (!visit(u, v)) {
      stats.stopped = true;
      return false;
    }
    return true;
  };
  for (const Element& k : distinguished_points(op)) {
    if (!(k.space() == op.domain())) continue;
    if (auto frags = small_fragments(k)) {
      for (std::uint64_t m = 0; m < frags->size(); ++m) {
        const Decomposition d = decomposition_at(*frags, m);
        if (!step(d.left, d.right)) return stats;
      }
    }
    if (auto probe = disjoint_probe(k)) {
      if (!step(k, *probe) || !step(*probe, k)) return stats;
    }
  }
  if (grid_applies(op.domain(), plan)) {
    stats.exhaustive = true;
    const bool finished = for_each_grid_point(op.domain(), plan.grid_radius, [&](const Element& x) {
      const FragmentEnumeration frags = enumerate_fragments(x);
      for (std::uint64_t m = 0; m < frags.size(); ++m) {
        const Decomposition d = decomposition_at(frags, m);
        if (!step(d.left, d.right)) return false;
      }
      return true;
    });
    if (!finished) return stats;
  }
  InstanceGenerator gen(plan.seed);
  for (std::size_t i = 0; i < plan.samples; ++i) {
    const auto [u, v] = gen.disjoint_pair(op.domain());
    if (!step(u, v)) return stats;
  }
  return stats;
}

Element unit_at(const Space& space, std::uint64_t index) {
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      std::vector<Scalar> values(space.atom_count(), Scalar(0));
      values[index - 1] = Scalar(1);
      return Element::dense(space, std::move(values));
    }
    case SpaceKind::kFinSupport:
      return Element::fin_support({{index, Scalar(1)}});
    case SpaceKind::kEventuallyConstant: {
      std::vector<Scalar> prefix(index, Scalar(0));
      prefix.back() = Scalar(1);
      return Element::eventually_constant(std::move(prefix), Scalar(0));
    }
    case SpaceKind::kPiecewiseLinear:
      break;
  }
  throw DomainError("no atoms in " + space.str());
}

Element pl_bump(const Scalar& a, const Scalar& b) {
  std::vector<Breakpoint> points;
  if (a > Scalar(0)) points.push_back({Scalar(0), Scalar(0)});
  points.push_back({a, Scalar(0)});
  points.push_back({(a + b) / Scalar(2), Scalar(1)});
  points.push_back({b, Scalar(0)});
  if (b < Scalar(1)) points.push_back({Scalar(1), Scalar(0)});
  return Element::piecewise_linear(std::move(points));
}

std::vector<Element> positivity_probes(const Operator& op) {
  const Space& space = op.domain();
  std::vector<Element> probes = distinguished_points(op);
  if (space.is_dense()) {
    for (std::uint64_t i = 1; i <= std::min<std::size_t>(space.atom_count(), 8); ++i) probes.push_back(unit_at(space, i));
  } else if (space.is_sequence()) {
    for (std::uint64_t i = 1; i <= 8; ++i) probes.push_back(unit_at(space, i));
    if (space.kind() == SpaceKind::kEventuallyConstant) {
      probes.push_back(Element::eventually_constant({Scalar(0)}, Scalar(1)));
    }
  } else {
    probes.push_back(pl_bump(Scalar(0), Scalar(1)));
    probes.push_back(Element::piecewise_linear({{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(1)}}));
  }
  if (space.has_unit()) probes.push_back(one(space));
  return probes;
}

bool is_kernel_dp(const Kernel& k, const Space& domain) {
  std::set<std::uint64_t> sources;
  std::set<std::uint64_t> targets;
  for (const auto& t : k.terms) {
    if (!sources.insert(t.source).second) return false;
    if (!targets.insert(t.target).second) return false;
  }
  if (!k.diagonal) return true;
  // Atoms outside `sources` land on their own index; term targets must avoid them.
  for (std::uint64_t t : targets) {
    if (sources.count(t) == 0 && (!domain.is_dense() || t <= domain.atom_count())) return false;
  }
  return true;
}

bool table_by_construction(const MatchTable& m) {
  return std::all_of(m.entries.begin(), m.entries.end(),
                     [](const auto& e) { return has_full_support(e.first) && has_finite_fragments(e.first); });
}

bool oao_by_construction(const Operator& op) {
  return std::visit(Overloaded{
                        [](const MatchTable& m) { return table_by_construction(m); },
                        [](const OperatorSum& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(),
                                             [](const Operator& t) { return oao_by_construction(t); });
                        },
                        [](const OperatorScaled& s) { return oao_by_construction(s.inner); },
                        [](const auto&) { return true; },
                    },
                    op.node().body);
}

bool dp_by_construction(const Operator& op) {
  return std::visit(Overloaded{
                        [&](const Kernel& k) { return is_kernel_dp(k, op.domain()); },
                        [](const MatchTable& m) { return table_by_construction(m); },
                        [](const LateralMeet&) { return true; },
                        [](const OperatorScaled& s) { return dp_by_construction(s.inner); },
                        [](const auto&) { return false; },
                    },
                    op.node().body);
}

std::string grid_note(const Operator& op, const SamplingPlan& plan) {
  std::ostringstream os;
  os << "grid {" << -plan.grid_radius << ".." << plan.grid_radius << "}^" << op.domain().atom_count();
  return os.str();
}

}  // namespace

bool has_full_support(const Element& x) {
  switch (x.space().kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      const auto v = x.dense_values();
      return std::none_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
    }
    case SpaceKind::kFinSupport:
      return false;
    case SpaceKind::kEventuallyConstant: {
      const auto p = x.prefix();
      return !x.tail().is_zero() && std::none_of(p.begin(), p.end(), [](const Scalar& s) { return s.is_zero(); });
    }
    case SpaceKind::kPiecewiseLinear:
      return !disjoint_probe(x).has_value();
  }
  return false;
}

std::optional<Element> disjoint_probe(const Element& x) {
  const Space& space = x.space();
  switch (space.kind()) {
    case SpaceKind::kCoordinate:
    case SpaceKind::kSimpleFunction: {
      const auto v = x.dense_values();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) return unit_at(space, i + 1);
      }
      return std::nullopt;
    }
    case SpaceKind::kFinSupport: {
      const auto e = x.entries();
      return unit_at(space, e.empty() ? 1 : e.back().index + 1);
    }
    case SpaceKind::kEventuallyConstant: {
      const auto p = x.prefix();
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) return unit_at(space, i + 1);
      }
      if (x.tail().is_zero()) return unit_at(space, p.size() + 1);
      return std::nullopt;
    }
    case SpaceKind::kPiecewiseLinear: {
      const auto pts = x.points();
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i].value.is_zero() && pts[i + 1].value.is_zero()) return pl_bump(pts[i].t, pts[i + 1].t);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<bool> values_equal(const Value& a, const Value& b) {
  if (a.is_element() && b.is_element()) return a.element() == b.element();
  const RealInterval x = a.as_interval();
  const RealInterval y = b.as_interval();
  if (x.upper < y.lower || y.upper < x.lower) return false;
  if (x.is_point() && y.is_point()) return true;
  return std::nullopt;
}

Value zero_value(const Operator& op) {
  if (op.real_valued()) return RealInterval::point(Scalar(0));
  return zero(op.codomain());
}

CheckReport verify_oao(const Operator& op, const SamplingPlan& plan) {
  CheckReport report;
  report.property = "oao";
  report.seed = plan.seed;
  std::uint64_t undecided = 0;
  const PairStats stats = for_each_disjoint_pair(op, plan, [&](const Element& u, const Element& v) {
    const Value whole = apply(op, u + v);
    const Value parts = apply(op, u) + apply(op, v);
    const std::optional<bool> eq = values_equal(whole, parts);
    if (!eq) {
      ++undecided;
      return true;
    }
    if (*eq) return true;
    report.verdict = Verdict::kFails;
    report.witness = {u, v};
    report.notes = "T(u+v) = " + whole.str() + " but T(u)+T(v) = " + parts.str();
    return false;
  });
  report.samples_used = stats.visited;
  report.exhaustive = stats.exhaustive;
  if (report.failed()) return report;
  std::string notes;
  if (stats.exhaustive) {
    report.verdict = Verdict::kHolds;
    notes = "exhaustive over " + grid_note(op, plan);
  } else if (plan.symbolic && oao_by_construction(op)) {
    report.verdict = Verdict::kHolds;
    notes = "additive on disjoint pairs by construction";
  } else {
    report.verdict = Verdict::kInconclusive;
    notes = "no violation among sampled pairs";
  }
  if (undecided) notes += "; " + std::to_string(undecided) + " interval comparisons undecided";
  report.notes = notes;
  return report;
}

CheckReport verify_positive(const Operator& op, const SamplingPlan& plan) {
  CheckReport report;
  report.property = "positive";
  report.seed = plan.seed;
  const Value zero_v = zero_value(op);
  const bool linear = is_linear(op);
  std::uint64_t undecided = 0;
  auto check = [&](const Element& x) {
    ++report.samples_used;
    const Value image = apply(op, x);
    const std::optional<bool> ok = value_leq(zero_v, image);
    if (!ok) {
      ++undecided;
      return true;
    }
    if (*ok) return true;
    report.verdict = Verdict::kFails;
    report.notes = "T(x) = " + image.str() + " is not >= 0";
    report.witness = {x};
    if (linear) {
      report.witness.push_back(-x);
      report.notes += "; T is linear, so T(-x) = " + apply(op, -x).str() + " and T(x) = -T(-x)";
    }
    return false;
  };
  for (const Element& p : positivity_probes(op)) {
    if (!(p.space() == op.domain())) continue;
    if (!check(p) || !check(-p)) return report;
  }
  if (grid_applies(op.domain(), plan)) {
    report.exhaustive = true;
    if (!for_each_grid_point(op.domain(), plan.grid_radius, check)) return report;
  }
  InstanceGenerator gen(plan.seed);
  for (std::size_t i = 0; i < plan.samples; ++i) {
    if (!check(gen.element(op.domain()))) return report;
  }
  report.verdict = report.exhaustive ? Verdict::kHolds : Verdict::kInconclusive;
  report.notes = report.exhaustive ? "exhaustive over " + grid_note(op, plan) : "no negative image among samples";
  if (undecided) report.notes += "; " + std::to_string(undecided) + " interval comparisons undecided";
  return report;
}

CheckReport verify_disjointness_preserving(const Operator& op, const SamplingPlan& plan) {
  CheckReport report;
  report.property = "disjointness_preserving";
  report.seed = plan.seed;
  std::uint64_t undecided = 0;
  const PairStats stats = for_each_disjoint_pair(op, plan, [&](const Element& u, const Element& v) {
    const Value tu = apply(op, u);
    const Value tv = apply(op, v);
    const std::optional<bool> ok = value_disjoint(tu, tv);
    if (!ok) {
      ++undecided;
      return true;
    }
    if (*ok) return true;
    report.verdict = Verdict::kFails;
    report.witness = {u, v};
    report.notes = "T(u) = " + tu.str() + " and T(v) = " + tv.str() + " are not disjoint";
    return false;
  });
  report.samples_used = stats.visited;
  report.exhaustive = stats.exhaustive;
  if (report.failed()) return report;
  std::string notes;
  if (stats.exhaustive) {
    report.verdict = Verdict::kHolds;
    notes = "exhaustive over " + grid_note(op, plan);
  } else if (plan.symbolic && dp_by_construction(op)) {
    report.verdict = Verdict::kHolds;
    notes = "disjointness preserving by construction";
  } else {
    report.verdict = Verdict::kInconclusive;
    notes = "no violation among sampled pairs";
  }
  if (undecided) notes += "; " + std::to_string(undecided) + " interval comparisons undecided";
  report.notes = notes;
  return report;
}

namespace {

LevelBounds bounds_over(const Operator& op, const FragmentEnumeration& frags, bool enumerate) {
  const Value zero_v = zero_value(op);
  LevelBounds out{frags.level(), zero_v, zero_v};
  if (enumerate) {
    for (std::uint64_t m = 0; m < frags.size(); ++m) {
      const Value image = apply(op, frags.at(m));
      out.max = value_sup(out.max, image);
      out.min = value_inf(out.min, image);
    }
    return out;
  }
  for (const Element& p : frags.pieces()) {
    const Value image = apply(op, p);
    out.max = out.max + value_pos(image);
    out.min = out.min - value_neg(image);
  }
  return out;
}

bool use_enumeration(ScanMethod method, const FragmentEnumeration& frags) {
  if (method == ScanMethod::kEnumerate) return true;
  if (method == ScanMethod::kPieceAdditive) return false;
  return frags.pieces().size() <= 12;
}

}  // namespace

BoundScan lateral_bound_scan(const Operator& op, const Element& e, std::optional<std::size_t> level,
                             const std::optional<Value>& growth_bound, ScanMethod method) {
  require_same_space(op.domain(), e.space(), "lateral_bound_scan");
  BoundScan scan;
  scan.report.property = "lateral_bound";
  if (has_finite_fragments(e)) {
    const FragmentEnumeration frags = enumerate_fragments(e);
    const bool enumerate = use_enumeration(method, frags);
    scan.levels.push_back(bounds_over(op, frags, enumerate));
    scan.report.verdict = Verdict::kHolds;
    scan.report.exhaustive = true;
    scan.report.samples_used = enumerate ? frags.size() : frags.pieces().size();
    scan.report.notes = "bounded: T over " + std::to_string(frags.size()) + " fragments lies in [" +
                        scan.levels[0].min.str() + ", " + scan.levels[0].max.str() + "]";
    return scan;
  }
  if (!level) throw PreconditionError("infinitely many fragments: lateral_bound_scan needs a level");
  const std::size_t start = e.prefix().size();
  if (*level < start) {
    throw PreconditionError("level " + std::to_string(*level) + " is below the prefix length " +
                            std::to_string(start));
  }
  scan.mode = FragmentEnumeration::Mode::kTruncated;
  std::optional<Element> witness;
  for (std::size_t l = start; l <= *level; ++l) {
    const FragmentEnumeration frags = fragment_iter(e, l);
    const bool enumerate = use_enumeration(method, frags);
    scan.levels.push_back(bounds_over(op, frags, enumerate));
    scan.report.samples_used += enumerate ? frags.size() : frags.pieces().size();
    const LevelBounds& cur = scan.levels.back();
    if (scan.levels.size() > 1) {
      const LevelBounds& prev = scan.levels[scan.levels.size() - 2];
      if (value_leq(prev.max, cur.max) != true || value_leq(cur.min, prev.min) != true) scan.monotone = false;
    }
    if (growth_bound && !scan.growth_level && value_leq(cur.max, *growth_bound) == false) {
      scan.growth_level = l;
      // The fragment collecting every piece with a positive image attains
      // the maximum whenever the codomain is totally ordered.
      Element u = zero(e.space());
      for (const Element& p : frags.pieces()) {
        if (value_leq(apply(op, p), zero_value(op)) == false) u = u + p;
      }
      if (value_leq(apply(op, u), *growth_bound) == false) witness = u;
    }
  }
  std::ostringstream notes;
  notes << "levels " << start << ".." << *level << (scan.monotone ? ", monotone" : ", monotonicity not certified")
        << "; level " << *level << " max " << scan.levels.back().max.str();
  if (scan.growth_level) {
    notes << "; exceeds " << growth_bound->str() << " from level " << *scan.growth_level;
    if (witness) {
      scan.report.verdict = Verdict::kFails;
      scan.report.witness = {*witness};
    } else {
      notes << " (no single witness fragment found)";
    }
  }
  scan.report.notes = notes.str();
  return scan;
}

OrderScan order_bound_scan(const Operator& op, const Element& bound, const SamplingPlan& plan,
                           const std::optional<Value>& candidate) {
  require_same_space(op.domain(), bound.space(), "order_bound_scan");
  if (!is_positive(bound)) throw PreconditionError("order_bound_scan needs bound >= 0");
  OrderScan scan;
  scan.report.property = "order_bound";
  scan.report.seed = plan.seed;
  auto visit = [&](const Element& x) {
    ++scan.report.samples_used;
    const Value image = apply(op, x);
    scan.hull_max = scan.hull_max ? value_sup(*scan.hull_max, image) : image;
    scan.hull_min = scan.hull_min ? value_inf(*scan.hull_min, image) : image;
    if (candidate && (value_leq(image, *candidate) == false || value_leq(-*candidate, image) == false)) {
      scan.report.verdict = Verdict::kFails;
      scan.report.witness = {x};
      scan.report.notes = "T(x) = " + image.str() + " escapes +-" + candidate->str();
      return false;
    }
    return true;
  };
  std::vector<Element> probes{zero(bound.space()), bound, -bound, Scalar(1, 2) * bound, Scalar(-1, 2) * bound};
  if (auto frags = small_fragments(bound)) {
    for (const Element& f : frags->materialize()) {
      probes.push_back(f);
      probes.push_back(-f);
    }
  }
  for (const Element& d : distinguished_points(op)) {
    if (d.space() == bound.space() && leq(abs(d), bound)) probes.push_back(d);
  }
  for (const Element& p : probes) {
    if (!visit(p)) return scan;
  }
  InstanceGenerator gen(plan.seed);
  for (std::size_t i = 0; i < plan.samples; ++i) {
    Element x = (i % 2 == 0) ? sup(inf(gen.element(bound.space()), bound), -bound)
                             : Scalar(gen.rng().range(-4, 4), 4) * bound;
    if (!visit(x)) return scan;
  }
  scan.report.verdict = Verdict::kInconclusive;
  scan.report.notes = "observed hull [" + scan.hull_min->str() + ", " + scan.hull_max->str() + "]";
  return scan;
}

}  // namespace rieszlab
