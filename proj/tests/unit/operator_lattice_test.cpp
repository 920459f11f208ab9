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

#include <algorithm>

#include "rieszlab/error.hpp"
#include "rieszlab/operator_lattice.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/sampling.hpp"
#include "support/oracles.hpp"

namespace rieszlab {
namespace {

Element C(std::initializer_list<long> v) {
  std::vector<Scalar> s;
  for (long x : v) s.emplace_back(x);
  return Element::coordinate(std::move(s));
}

Polynomial t_times(long c) { return Polynomial({Scalar(0), Scalar(c)}); }

// Kernel from Coordinate(n) into Coordinate(1) that sums f_i(x_i).
Operator summing(std::vector<PiecewisePolynomial> fs) {
  Kernel k;
  for (std::size_t i = 0; i < fs.size(); ++i) k.terms.push_back({i + 1, 1, fs[i]});
  return make_kernel(Space::coordinate(fs.size()), Space::coordinate(1), std::move(k));
}

Element R(long v) { return C({v}); }

TEST(JoinTest, MixedKernelExample) {
  const Operator s = summing({t_times(1), t_times(2)});
  const Operator t = summing({t_times(-1), t_times(3)});
  const PointwiseLatticeResult j = join_at(s, t, C({1, 1}));
  EXPECT_EQ(j.value.element(), R(4));
  ASSERT_EQ(j.attained_at.size(), 1u);
  EXPECT_EQ(j.attained_at[0].left, C({1, 0}));
  EXPECT_EQ(j.attained_at[0].right, C({0, 1}));
  const PointwiseLatticeResult m = meet_at(s, t, C({1, 1}));
  EXPECT_EQ(m.value.element(), R(1));
  ASSERT_EQ(m.attained_at.size(), 1u);
  EXPECT_EQ(m.attained_at[0].left, C({0, 1}));
  EXPECT_EQ(m.attained_at[0].right, C({1, 0}));
}

TEST(JoinTest, SelfJoinIsIdentity) {
  InstanceGenerator gen(1);
  for (int i = 0; i < 50; ++i) {
    const Space s = gen.space();
    const Operator t = gen.operator_on(s);
    const Element x = gen.element(s);
    if (!has_finite_fragments(x)) continue;
    EXPECT_EQ(join_at(t, t, x).value, apply(t, x));
    EXPECT_EQ(meet_at(t, t, x).value, apply(t, x));
  }
}

TEST(JoinTest, TiesReportMinimalSupport) {
  const Operator s = summing({t_times(1), t_times(0)});
  const Operator t = summing({t_times(0), t_times(0)});
  const PointwiseLatticeResult j = join_at(s, t, C({1, 1}));
  EXPECT_EQ(j.value.element(), R(1));
  ASSERT_EQ(j.attained_at.size(), 1u);
  EXPECT_EQ(j.attained_at[0].left, C({1, 0}));
}

TEST(PartsTest, Examples) {
  const Operator id = summing({t_times(1)});
  EXPECT_EQ(pos_part_at(id, R(-3)).value.element(), R(0));
  EXPECT_EQ(neg_part_at(id, R(-3)).value.element(), R(3));
  EXPECT_TRUE(pos_part_at(id, R(0)).value.is_zero());
  const Operator sq = summing({Polynomial::identity().pow(2), Polynomial::identity().pow(2)});
  EXPECT_EQ(pos_part_at(sq, C({2, -1})).value, apply(sq, C({2, -1})));
}

TEST(ModulusTest, Examples) {
  const Operator t = summing({t_times(1), -Polynomial::identity().pow(2)});
  const PointwiseLatticeResult m = modulus_at(t, C({1, 2}));
  EXPECT_EQ(m.value.element(), R(5));
  ASSERT_EQ(m.attained_at.size(), 1u);
  EXPECT_EQ(m.attained_at[0].left, C({1, 0}));
  EXPECT_TRUE(modulus_at(t, C({0, 0})).value.is_zero());
}

TEST(ClosedFormTest, DiagonalKernelsOnRandomInputs) {
  InstanceGenerator gen(2);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + gen.rng().below(6);
    const Space s = Space::coordinate(n);
    std::vector<PiecewisePolynomial> f, g;
    for (std::size_t k = 0; k < n; ++k) {
      f.push_back(gen.function());
      g.push_back(gen.function());
    }
    Kernel kf, kg;
    for (std::size_t k = 0; k < n; ++k) {
      kf.terms.push_back({k + 1, k + 1, f[k]});
      kg.terms.push_back({k + 1, k + 1, g[k]});
    }
    const Operator S = make_kernel(s, s, kf);
    const Operator T = make_kernel(s, s, kg);
    const Element x = gen.element(s);
    auto at = [&](const Element& y, std::size_t k) { return y.dense_values()[k]; };
    const Element join = join_at(S, T, x).value.element();
    const Element meet = meet_at(S, T, x).value.element();
    const Element mod = modulus_at(S, x).value.element();
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar xk = at(x, k);
      EXPECT_EQ(at(join, k), max(f[k](xk), g[k](xk)));
      EXPECT_EQ(at(meet, k), min(f[k](xk), g[k](xk)));
      EXPECT_EQ(at(mod, k), f[k](xk).abs());
    }
    const Operator A = summing(f);
    const Operator B = summing(g);
    auto mx = [](const Scalar& a, const Scalar& b) { return max(a, b); };
    auto mn = [](const Scalar& a, const Scalar& b) { return min(a, b); };
    auto md = [](const Scalar& a, const Scalar&) { return a.abs(); };
    EXPECT_EQ(join_at(A, B, x).value.element(), Element::coordinate({oracle::summed_closed_form(f, g, x, mx)}));
    EXPECT_EQ(meet_at(A, B, x).value.element(), Element::coordinate({oracle::summed_closed_form(f, g, x, mn)}));
    EXPECT_EQ(modulus_at(A, x).value.element(), Element::coordinate({oracle::summed_closed_form(f, f, x, md)}));
  }
}

TEST(MethodsTest, PieceAdditiveAgreesWithEnumeration) {
  InstanceGenerator gen(3);
  for (int i = 0; i < 150; ++i) {
    const Space sp = gen.space();
    const Operator t = gen.operator_on(sp);
    const Operator s = gen.operator_on(sp);
    const Element x = gen.element(sp);
    const std::optional<std::size_t> level =
        has_finite_fragments(x) ? std::nullopt : std::optional<std::size_t>(x.prefix().size() + 2);
    for (PointwiseKind kind :
         {PointwiseKind::kJoin, PointwiseKind::kMeet, PointwiseKind::kPos, PointwiseKind::kNeg, PointwiseKind::kModulus}) {
      const bool binary = kind == PointwiseKind::kJoin || kind == PointwiseKind::kMeet;
      if (binary && !(s.codomain() == t.codomain())) continue;
      const auto a = pointwise_at(kind, s, t, x, level, ScanMethod::kEnumerate);
      const auto b = pointwise_at(kind, s, t, x, level, ScanMethod::kPieceAdditive);
      ASSERT_EQ(a.value, b.value) << to_string(kind) << " " << t.str() << " " << x;
      ASSERT_EQ(a.levels.size(), b.levels.size());
      for (std::size_t k = 0; k < a.levels.size(); ++k) ASSERT_EQ(a.levels[k], b.levels[k]);
      if (!b.attained_at.empty()) {
        ASSERT_EQ(a.attained_at.size(), 1u);
        ASSERT_EQ(a.attained_at[0].left, b.attained_at[0].left);
      }
    }
  }
}

TEST(FoldTest, OrderDoesNotMatter) {
  InstanceGenerator gen(4);
  for (int i = 0; i < 100; ++i) {
    const Space sp = gen.space();
    std::vector<Element> xs;
    for (int k = 0; k < 6; ++k) xs.push_back(gen.element(sp));
    Element forward = xs[0];
    for (std::size_t k = 1; k < xs.size(); ++k) forward = sup(forward, xs[k]);
    std::reverse(xs.begin(), xs.end());
    Element backward = xs[0];
    for (std::size_t k = 1; k < xs.size(); ++k) backward = sup(xs[k], backward);
    ASSERT_EQ(forward, backward);
  }
}

TEST(TruncatedTest, LinearConstructionAgainstZero) {
  const Operator k = named_example("knbdbj");
  const Operator z = 0 * k;
  const Element u = one(Space::eventually_constant());
  const PointwiseLatticeResult j = join_at(k, z, u, 12);
  ASSERT_EQ(j.mode, FragmentEnumeration::Mode::kTruncated);
  ASSERT_EQ(j.levels.size(), 13u);
  for (std::size_t n = 0; n <= 12; ++n) {
    EXPECT_EQ(j.levels[n].element(), Element::eventually_constant({}, Scalar(static_cast<long>(n * (n + 1) / 2))));
  }
  EXPECT_TRUE(j.monotone);
  EXPECT_THROW(join_at(k, z, u), PreconditionError);
  const PointwiseLatticeResult m = meet_at(k, z, u, 6);
  EXPECT_TRUE(m.monotone);
}

TEST(TruncatedTest, SeriesIntervalsAreInconclusiveWhenOverlapping) {
  const Operator series = named_example("plram_series");
  const PointwiseLatticeResult p = pos_part_at(series, one(Space::eventually_constant()), 8);
  EXPECT_TRUE(p.monotone);
  EXPECT_EQ(p.levels.size(), 9u);
}

TEST(DpFastTest, Examples) {
  const Operator id = make_kernel(Space::coordinate(2), Space::coordinate(2), Kernel{{}, PiecewisePolynomial(t_times(1))});
  const CheckReport dp = verify_disjointness_preserving(id);
  EXPECT_EQ(dp_fast(DpKind::kModulus, id, C({1, -2}), dp).value.element(), C({1, 2}));
  EXPECT_EQ(modulus_at(id, C({1, -2})).value.element(), C({1, 2}));
  const Operator s = named_example("lateral_meet");
  const Element u = one(default_simple_space());
  EXPECT_EQ(dp_fast(DpKind::kModulus, s, u, verify_disjointness_preserving(s)).value.element(), u);
  EXPECT_TRUE(dp_fast(DpKind::kPos, s, zero(u.space()), verify_disjointness_preserving(s)).value.is_zero());
  CheckReport failing = dp;
  failing.verdict = Verdict::kFails;
  EXPECT_THROW(dp_fast(DpKind::kModulus, id, C({1, 1}), failing), PreconditionError);
  EXPECT_THROW(dp_fast(DpKind::kModulus, id, C({1, 1}), verify_oao(id)), PreconditionError);
}

TEST(MeyerTest, Examples) {
  const Operator id = make_kernel(Space::coordinate(2), Space::coordinate(2), Kernel{{}, PiecewisePolynomial(t_times(1))});
  const CheckReport dp = verify_disjointness_preserving(id);
  const MeyerResult r = meyer_pair(id, C({1, 0}), C({0, -2}), C({1, -2}), dp);
  EXPECT_TRUE(r.value.is_zero());
  EXPECT_TRUE(r.theorematic);
  const Element pl1 = one(Space::piecewise_linear());
  const Operator m = named_example("meyer_pl");
  const MeyerResult a = meyer_pair_unsafe(m, pl1, Scalar(2) * pl1);
  EXPECT_EQ(a.value.element(), pl1);
  EXPECT_FALSE(a.theorematic);
  EXPECT_THROW(meyer_pair(m, pl1, Scalar(2) * pl1, Scalar(2) * pl1, verify_disjointness_preserving(m)),
               PreconditionError);
  const Operator s = named_example("lateral_meet");
  const Element u = one(default_simple_space());
  EXPECT_EQ(meyer_pair_unsafe(s, u, Scalar(2) * u).value.element(), u);
}

}  // namespace
}  // namespace rieszlab
