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

#include <gtest/gtest.h>

#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/sampling.hpp"
#include "rieszlab/verify.hpp"
#include "support/oracles.hpp"

namespace rieszlab {
namespace {

Element C(std::initializer_list<long> v) {
  std::vector<Scalar> s;
  for (long x : v) s.emplace_back(x);
  return Element::coordinate(std::move(s));
}

Element EC(std::initializer_list<long> prefix, long tail) {
  std::vector<Scalar> s;
  for (long x : prefix) s.emplace_back(x);
  return Element::eventually_constant(std::move(s), Scalar(tail));
}

Polynomial t_pow(unsigned k, long c = 1) { return Polynomial::constant(Scalar(c)) * Polynomial::identity().pow(k); }

Operator diagonal_kernel(std::size_t n, PiecewisePolynomial f) {
  return make_kernel(Space::coordinate(n), Space::coordinate(n), Kernel{{}, std::move(f)});
}

// Alternating harmonic partial sums straddle the limit -ln 2.
std::pair<Scalar, Scalar> alternating_bracket(unsigned k) {
  Scalar s(0);
  for (unsigned n = 1; n <= 2 * k + 1; ++n) {
    s += Scalar(n % 2 ? -1 : 1) / Scalar(static_cast<long>(n));
  }
  const Scalar odd = s;
  const Scalar even = s + Scalar(1) / Scalar(static_cast<long>(2 * k + 1));
  return {odd, even};
}

TEST(ApplyTest, AlternatingSeriesAtOne) {
  const Operator series = named_example("plram_series");
  const Value v = apply(series, one(Space::eventually_constant()));
  ASSERT_TRUE(v.is_interval());
  const RealInterval r = v.interval();
  EXPECT_LE(r.width(), Scalar::pow10_inverse(9));
  const auto [lo, hi] = alternating_bracket(2000);
  EXPECT_TRUE(r.upper >= lo && r.lower <= hi);
  const Scalar minus_ln2 = Scalar::parse("-6931471805599453/10000000000000000");
  EXPECT_LE((r.lower - minus_ln2).abs(), Scalar::pow10_inverse(9));
  EXPECT_LE((r.upper - minus_ln2).abs(), Scalar::pow10_inverse(9));
}

TEST(ApplyTest, AlternatingSeriesFiniteSupportIsExact) {
  const Operator series = named_example("plram_series");
  const Value v = apply(series, EC({0, 1, 0, 1, 0, 1}, 0));
  ASSERT_TRUE(v.is_exact());
  EXPECT_EQ(v.exact(), C({0}) + Element::coordinate({Scalar(11, 12)}));
}

TEST(ApplyTest, SeriesWidthShrinksWithTolerance) {
  Scalar previous(1);
  for (unsigned d = 2; d <= 12; d += 2) {
    const Operator s = make_alternating_series(Scalar::pow10_inverse(d));
    const RealInterval r = apply(s, EC({3, -1}, 2)).interval();
    EXPECT_LE(r.width(), Scalar::pow10_inverse(d));
    EXPECT_LE(r.width(), previous);
    previous = r.width();
  }
}

TEST(ApplyTest, ExampleOperators) {
  const Operator k = named_example("knbdbj");
  EXPECT_EQ(apply(k, EC({0, 0, 1}, 0)).element(), EC({}, 3));
  EXPECT_TRUE(apply(k, one(Space::eventually_constant())).is_zero());
  // x = (x - c·1) + c·1: only the prefix deviation contributes.
  EXPECT_EQ(apply(k, EC({2, 5}, 1)).element(), EC({}, 1 * 1 + 2 * 4));
  const Operator m = named_example("meyer_pl");
  const Element u = one(Space::piecewise_linear());
  EXPECT_EQ(apply(m, Scalar(2) * u).element(), -u);
  EXPECT_EQ(apply(m, u).element(), u);
  EXPECT_TRUE(apply(m, Scalar(3) * u).is_zero());
  const Operator s = named_example("lateral_meet");
  EXPECT_EQ(apply(s, one(default_simple_space())).element(), one(default_simple_space()));
  EXPECT_THROW(named_example("nosuch"), LookupError);
  EXPECT_THROW(apply(m, C({1})), DomainError);
}

TEST(ApplyTest, KernelWithAtomMap) {
  Kernel kernel;
  kernel.terms.push_back({1, 2, t_pow(2)});
  kernel.terms.push_back({2, 2, t_pow(1, -1)});
  const Operator op = make_kernel(Space::coordinate(2), Space::coordinate(2), kernel);
  EXPECT_EQ(apply(op, C({3, 1})).element(), C({0, 8}));
  EXPECT_THROW(make_kernel(Space::coordinate(2), Space::coordinate(2),
                           Kernel{{{1, 1, Polynomial({Scalar(1), Scalar(1)})}}, std::nullopt}),
               Error);
}

TEST(ApplyTest, DiagonalIntoLargerCodomain) {
  Kernel k{{{1, 3, t_pow(1, 5)}}, PiecewisePolynomial(t_pow(1, 2))};
  const Operator op = make_kernel(Space::coordinate(2), Space::coordinate(3), k);
  EXPECT_EQ(apply(op, C({1, 1})).element(), C({0, 2, 5}));
  // ec -> ec: term target past the prefix still sees the diagonal tail.
  const Operator e = make_kernel(Space::eventually_constant(), Space::eventually_constant(),
                                 Kernel{{{1, 4, t_pow(1)}}, PiecewisePolynomial(t_pow(2))});
  EXPECT_EQ(apply(e, EC({3}, 2)).element(), EC({0, 4, 4, 7}, 4));
}

TEST(ApplyTest, ZeroMapsToZero) {
  InstanceGenerator gen(21);
  for (int i = 0; i < 200; ++i) {
    const Space s = gen.space();
    const Operator op = gen.operator_on(s);
    EXPECT_TRUE(apply(op, zero(s)).is_zero()) << op.str();
  }
}

TEST(MatchTableTest, ValidatesKeys) {
  const Space c2 = Space::coordinate(2);
  EXPECT_THROW(make_match_table(c2, c2, {{C({0, 0}), C({1, 1})}}), PreconditionError);
  EXPECT_THROW(make_match_table(c2, c2, {{C({1, 0}), C({1, 1})}, {C({1, 0}), C({0, 1})}}), PreconditionError);
  // (1,1) splits as (1,0) + (0,1), neither of which is mapped consistently.
  EXPECT_THROW(make_match_table(c2, c2, {{C({1, 1}), C({1, 1})}}), PreconditionError);
  EXPECT_NO_THROW(make_match_table(c2, c2, {{C({1, 1}), C({1, 1})}, {C({1, 0}), C({1, 0})}, {C({0, 1}), C({0, 1})}}));
}

TEST(VerifyOaoTest, Examples) {
  const Operator sq = diagonal_kernel(3, t_pow(2));
  const CheckReport r = verify_oao(sq);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(verify_oao(named_example("meyer_pl")).verdict, Verdict::kHolds);
  const Space c2 = Space::coordinate(2);
  const CheckReport bad = verify_oao(make_match_table(c2, c2, {{C({1, 0}), C({1, 0})}}));
  ASSERT_EQ(bad.verdict, Verdict::kFails);
  ASSERT_EQ(bad.witness.size(), 2u);
  EXPECT_EQ(bad.witness[0], C({1, 0}));
  EXPECT_EQ(bad.witness[1], C({0, 1}));
}

TEST(VerifyOaoTest, WitnessesReplay) {
  const Space pl = Space::piecewise_linear();
  const Element u = one(pl);
  const Element bump = Element::piecewise_linear({{Scalar(0), Scalar(0)}, {Scalar(1, 2), Scalar(1)}, {Scalar(1), Scalar(0)}});
  // bump vanishes only at the ends, so it has full support and the table is additive.
  EXPECT_NE(verify_oao(make_match_table(pl, pl, {{bump, u}})).verdict, Verdict::kFails);
  const Element half = Element::piecewise_linear({{Scalar(0), Scalar(0)}, {Scalar(1, 2), Scalar(0)}, {Scalar(1), Scalar(1)}});
  const Operator op = make_match_table(pl, pl, {{half, u}});
  const CheckReport r = verify_oao(op);
  ASSERT_EQ(r.verdict, Verdict::kFails);
  const Element& a = r.witness[0];
  const Element& b = r.witness[1];
  EXPECT_TRUE(is_disjoint(a, b));
  EXPECT_NE(apply(op, a + b), apply(op, a) + apply(op, b));
}

TEST(VerifyOaoTest, GeneratedOperatorsPass) {
  InstanceGenerator gen(23);
  SamplingPlan plan;
  plan.samples = 500;
  for (int i = 0; i < 40; ++i) {
    const Space s = gen.space();
    const Operator op = gen.operator_on(s);
    plan.seed = 100 + i;
    const CheckReport r = verify_oao(op, plan);
    EXPECT_NE(r.verdict, Verdict::kFails) << op.str() << "\n" << r.serialize();
    if (s.is_dense() && s.atom_count() <= 4) EXPECT_TRUE(r.exhaustive);
  }
}

TEST(VerifyPositiveTest, Examples) {
  EXPECT_EQ(verify_positive(diagonal_kernel(2, t_pow(2))).verdict, Verdict::kHolds);
  const CheckReport r = verify_positive(diagonal_kernel(1, t_pow(1)));
  ASSERT_EQ(r.verdict, Verdict::kFails);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_EQ(r.witness[0], C({-1}));
  EXPECT_EQ(r.witness[1], C({1}));
  const CheckReport k = verify_positive(named_example("knbdbj"));
  ASSERT_EQ(k.verdict, Verdict::kFails);
  EXPECT_EQ(k.witness[1], -k.witness[0]);
}

TEST(VerifyDpTest, Examples) {
  EXPECT_EQ(verify_disjointness_preserving(diagonal_kernel(3, t_pow(1))).verdict, Verdict::kHolds);
  EXPECT_NE(verify_disjointness_preserving(named_example("lateral_meet")).verdict, Verdict::kFails);
  Kernel both;
  both.terms.push_back({1, 1, t_pow(1)});
  both.terms.push_back({2, 1, t_pow(1)});
  const CheckReport r =
      verify_disjointness_preserving(make_kernel(Space::coordinate(2), Space::coordinate(1), both));
  ASSERT_EQ(r.verdict, Verdict::kFails);
  const Operator op = make_kernel(Space::coordinate(2), Space::coordinate(1), both);
  EXPECT_TRUE(is_disjoint(r.witness[0], r.witness[1]));
  EXPECT_FALSE(is_disjoint(apply(op, r.witness[0]).element(), apply(op, r.witness[1]).element()));
}

TEST(LateralBoundTest, AlternatingSeriesGrowth) {
  const Operator series = named_example("plram_series");
  const BoundScan scan = lateral_bound_scan(series, one(Space::eventually_constant()), 62,
                                            Value(Element::coordinate({Scalar(2)})));
  EXPECT_TRUE(scan.monotone);
  ASSERT_EQ(scan.levels.size(), 63u);
  for (unsigned n = 1; n <= 31; ++n) {
    const RealInterval max_level = scan.levels[2 * n].max.as_interval();
    ASSERT_TRUE(max_level.is_point());
    EXPECT_EQ(max_level.lower, oracle::harmonic(n) / Scalar(2));
  }
  // At odd levels the tail block Σ_{n>2N+1} (-1)^n/n is positive and joins
  // the maximum, so 2 is first exceeded at level 61 (H_30/2 + tail).
  EXPECT_TRUE(value_leq(scan.levels[60].max, Value(Element::coordinate({Scalar(2)}))) == true);
  ASSERT_TRUE(scan.growth_level.has_value());
  EXPECT_EQ(*scan.growth_level, 61u);
  EXPECT_GT(oracle::harmonic(31) / Scalar(2), Scalar(2));
  ASSERT_EQ(scan.report.verdict, Verdict::kFails);
  EXPECT_TRUE(value_leq(apply(series, scan.report.witness[0]), Value(Element::coordinate({Scalar(2)}))) == false);
}

TEST(LateralBoundTest, LinearConstructionGrowth) {
  const Operator k = named_example("knbdbj");
  const Element u = one(Space::eventually_constant());
  for (ScanMethod m : {ScanMethod::kEnumerate, ScanMethod::kPieceAdditive}) {
    const BoundScan scan = lateral_bound_scan(k, u, 10, std::nullopt, m);
    ASSERT_EQ(scan.levels.size(), 11u);
    for (std::size_t n = 0; n <= 10; ++n) {
      EXPECT_EQ(scan.levels[n].max.element(), EC({}, static_cast<long>(n * (n + 1) / 2)));
    }
    EXPECT_TRUE(scan.monotone);
  }
}

TEST(LateralBoundTest, FinSupportIsBounded) {
  InstanceGenerator gen(31);
  const Space fin = Space::fin_support();
  for (int i = 0; i < 50; ++i) {
    const Operator op = gen.kernel(fin, gen.atomic_space());
    const Element e = gen.element(fin);
    const BoundScan scan = lateral_bound_scan(op, e);
    ASSERT_EQ(scan.report.verdict, Verdict::kHolds);
    for (const Element& f : enumerate_fragments(e).materialize()) {
      const Value v = apply(op, f);
      ASSERT_TRUE(value_leq(v, scan.levels[0].max) == true);
      ASSERT_TRUE(value_leq(scan.levels[0].min, v) == true);
    }
  }
}

TEST(OrderBoundTest, Examples) {
  const Operator id = diagonal_kernel(2, t_pow(1));
  const OrderScan a = order_bound_scan(id, C({3, 3}));
  EXPECT_EQ(a.report.verdict, Verdict::kInconclusive);
  EXPECT_TRUE(leq(a.hull_max->element(), C({3, 3})));
  EXPECT_TRUE(leq(C({-3, -3}), a.hull_min->element()));
  const Operator m = named_example("meyer_pl");
  const Element u = one(Space::piecewise_linear());
  const OrderScan b = order_bound_scan(m, Scalar(2) * u);
  EXPECT_EQ(b.hull_max->element(), u);
  EXPECT_EQ(b.hull_min->element(), -u);
  const OrderScan c = order_bound_scan(m, Scalar(2) * u, {}, Value(Scalar(1, 2) * u));
  EXPECT_EQ(c.report.verdict, Verdict::kFails);
  EXPECT_EQ(order_bound_scan(named_example("plram_series"), one(Space::eventually_constant())).report.verdict,
            Verdict::kInconclusive);
}

TEST(PositiveInvariantTest, PositiveOperatorsAreBoundedOnFragments) {
  InstanceGenerator gen(41);
  for (int i = 0; i < 60; ++i) {
    const Space s = gen.space_of(SpaceKind::kCoordinate);
    const Operator op = diagonal_kernel(s.atom_count(), t_pow(2, 1 + i % 3));
    ASSERT_NE(verify_positive(op).verdict, Verdict::kFails);
    const BoundScan scan = lateral_bound_scan(op, gen.element(s));
    EXPECT_EQ(scan.report.verdict, Verdict::kHolds);
    EXPECT_TRUE(value_leq(zero_value(op), scan.levels[0].min) == true);
  }
}

TEST(DpInvariantTest, ImagesOfFragmentsAreFragments) {
  InstanceGenerator gen(43);
  int checked = 0;
  while (checked < 100) {
    const Space s = gen.space();
    const Operator op = gen.dp_operator(s);
    SamplingPlan plan;
    plan.samples = 50;
    if (verify_disjointness_preserving(op, plan).failed()) continue;
    const Element e = gen.element(s);
    if (!has_finite_fragments(e)) continue;
    const Value te = apply(op, e);
    for (const Element& x : enumerate_fragments(e).materialize()) {
      ASSERT_TRUE(value_fragment(apply(op, x), te) == true) << op.str() << " " << x << " " << e;
    }
    ++checked;
  }
}

TEST(ReportTest, RecordRoundTrip) {
  CheckReport r;
  r.property = "oao";
  r.verdict = Verdict::kFails;
  r.witness = {C({1, 0}), C({0, 1})};
  r.notes = "T(u+v) = \"x\" = y";
  const auto fields = parse_record(r.serialize());
  ASSERT_EQ(fields.size(), 7u);
  EXPECT_EQ(fields[1].second, "fails");
  EXPECT_EQ(fields[2].second, "[coord[1,0]; coord[0,1]]");
  EXPECT_EQ(fields[6].second, r.notes);
}

}  // namespace
}  // namespace rieszlab
