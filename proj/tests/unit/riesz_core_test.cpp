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

Element EC(std::initializer_list<long> prefix, long tail) {
  std::vector<Scalar> s;
  for (long x : prefix) s.emplace_back(x);
  return Element::eventually_constant(std::move(s), Scalar(tail));
}

Element PL(std::initializer_list<std::pair<Scalar, Scalar>> pts) {
  std::vector<Breakpoint> b;
  for (const auto& [t, v] : pts) b.push_back({t, v});
  return Element::piecewise_linear(std::move(b));
}

const Scalar kHalf(1, 2);

TEST(ScalarTest, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Scalar::parse("6/4").str(), "3/2");
  EXPECT_EQ(Scalar::parse("-2").str(), "-2");
  EXPECT_THROW(Scalar::parse("4/-2"), StructuralError);
  EXPECT_THROW(Scalar::parse("1/0"), Error);
  EXPECT_THROW(Scalar::parse("x"), StructuralError);
  EXPECT_THROW(Scalar(1) / Scalar(0), DomainError);
  EXPECT_LT(Scalar(1, 3), Scalar(1, 2));
  EXPECT_EQ(Scalar::pow10_inverse(3), Scalar(1, 1000));
}

TEST(SpaceTest, RejectsBadPartitions) {
  EXPECT_THROW(Space::simple_function({Scalar(0), Scalar(1, 2), Scalar(1, 2), Scalar(1)}), StructuralError);
  EXPECT_THROW(Space::simple_function({Scalar(1, 2), Scalar(1)}), StructuralError);
  EXPECT_THROW(Space::coordinate(0), StructuralError);
  EXPECT_EQ(Space::simple_function({Scalar(0), Scalar(1)}).atom_count(), 1u);
  EXPECT_EQ(Space::simple_function({Scalar(0), kHalf, Scalar(1)}).str(), "simple{0,1/2,1}");
}

TEST(NormalizeTest, FinSupportDropsZerosAndSorts) {
  const Element x = Element::fin_support({{3, Scalar(0)}, {1, Scalar(2)}});
  ASSERT_EQ(x.entries().size(), 1u);
  EXPECT_EQ(x.entries()[0].index, 1u);
  EXPECT_EQ(x.entries()[0].value, Scalar(2));
  EXPECT_THROW(Element::fin_support({{1, Scalar(1)}, {1, Scalar(2)}}), StructuralError);
  EXPECT_THROW(Element::fin_support({{0, Scalar(1)}}), StructuralError);
}

TEST(NormalizeTest, EventuallyConstantPrefixIsMinimal) {
  const Element x = EC({1, 5, 5}, 5);
  EXPECT_EQ(x.prefix().size(), 1u);
  EXPECT_EQ(x, EC({1}, 5));
  EXPECT_EQ(EC({0, 0}, 0), EC({}, 0));
}

TEST(NormalizeTest, PiecewiseLinearDropsCollinearPoints) {
  EXPECT_EQ(PL({{0, 0}, {kHalf, kHalf}, {1, 1}}).points().size(), 2u);
  EXPECT_THROW(PL({{0, 0}, {kHalf, 1}}), StructuralError);
  EXPECT_THROW(PL({{0, 0}, {1, 1}, {kHalf, 0}}), StructuralError);
}

TEST(NormalizeTest, IdempotentOnRandomElements) {
  InstanceGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    const Space s = gen.space();
    const Element x = gen.element(s);
    Element again = x;
    switch (s.kind()) {
      case SpaceKind::kFinSupport:
        again = Element::fin_support({x.entries().begin(), x.entries().end()});
        break;
      case SpaceKind::kEventuallyConstant:
        again = Element::eventually_constant({x.prefix().begin(), x.prefix().end()}, x.tail());
        break;
      case SpaceKind::kPiecewiseLinear:
        again = Element::piecewise_linear({x.points().begin(), x.points().end()});
        break;
      default:
        again = Element::dense(s, {x.dense_values().begin(), x.dense_values().end()});
    }
    EXPECT_EQ(again, x) << x;
  }
}

TEST(VectorOpsTest, Examples) {
  EXPECT_EQ(C({1, -2}) + C({0, 3}), C({1, 1}));
  EXPECT_EQ(Scalar(2) * EC({1}, 3), EC({2}, 6));
  EXPECT_EQ(PL({{0, 0}, {1, 1}}) + PL({{0, 1}, {1, 0}}), PL({{0, 1}, {1, 1}}));
  EXPECT_THROW(C({1}) + C({1, 2}), DomainError);
  EXPECT_THROW(C({1}) + EC({}, 1), DomainError);
}

TEST(LatticeTest, Examples) {
  EXPECT_EQ(sup(C({1, -2, 0}), C({0, 3, 0})), C({1, 3, 0}));
  EXPECT_EQ(sup(PL({{0, 0}, {1, 1}}), PL({{0, 1}, {1, 0}})), PL({{0, 1}, {kHalf, kHalf}, {1, 1}}));
  EXPECT_EQ(inf(EC({2}, 0), EC({}, 1)), EC({1}, 0));
  EXPECT_EQ(pos(C({-1, 2})), C({0, 2}));
  EXPECT_EQ(abs(PL({{0, -1}, {1, 1}})), PL({{0, 1}, {kHalf, 0}, {1, 1}}));
  EXPECT_EQ(neg(EC({-3}, 1)), EC({3}, 0));
}

TEST(LatticeTest, TangentialTouchInsertsNothing) {
  // Equal at t = 1/2, which is already a vertex of both.
  const Element x = PL({{0, 0}, {kHalf, 1}, {1, 0}});
  const Element y = PL({{0, 1}, {kHalf, 1}, {1, 1}});
  EXPECT_EQ(sup(x, y), y);
  EXPECT_EQ(inf(x, y), x);
}

TEST(OrderTest, Examples) {
  EXPECT_TRUE(leq(C({0, 0}), C({1, 2})));
  EXPECT_FALSE(leq(C({1, 0}), C({0, 1})));
  EXPECT_TRUE(leq(EC({}, 1), EC({}, 2)));
  EXPECT_TRUE(is_disjoint(C({1, 0}), C({0, -5})));
  EXPECT_FALSE(is_disjoint(C({1, 1}), C({0, 1})));
  EXPECT_TRUE(is_disjoint(PL({{0, 0}, {kHalf, 0}, {1, 1}}), PL({{0, 1}, {kHalf, 0}, {1, 0}})));
}

TEST(ConstantsTest, Examples) {
  EXPECT_EQ(zero(Space::coordinate(3)), C({0, 0, 0}));
  EXPECT_EQ(one(Space::eventually_constant()), EC({}, 1));
  EXPECT_THROW(one(Space::fin_support()), UnsupportedError);
  EXPECT_EQ(one(Space::piecewise_linear()).str(), "pl{(0,1),(1,1)}");
}

// Pointwise oracle over every model, including the random-abscissa check for
// the piecewise linear model.
TEST(LatticeTest, MatchesPointwiseOracle) {
  InstanceGenerator gen(11);
  auto mx = [](const Scalar& a, const Scalar& b) { return max(a, b); };
  auto mn = [](const Scalar& a, const Scalar& b) { return min(a, b); };
  for (SpaceKind kind : gen.space_menu) {
    for (int i = 0; i < 200; ++i) {
      const Space s = gen.space_of(kind);
      const Element x = gen.element(s);
      const Element y = gen.element(s);
      ASSERT_TRUE(oracle::pointwise_matches(sup(x, y), x, y, mx)) << x << " " << y;
      ASSERT_TRUE(oracle::pointwise_matches(inf(x, y), x, y, mn)) << x << " " << y;
      ASSERT_TRUE(oracle::pointwise_matches(x + y, x, y, [](const Scalar& a, const Scalar& b) { return a + b; }));
      ASSERT_TRUE(oracle::pointwise_matches(abs(x), x, [](const Scalar& a) { return a.abs(); }));
      if (kind == SpaceKind::kPiecewiseLinear) {
        const Element z = sup(x, y);
        for (int k = 0; k < 20; ++k) {
          const Scalar t(gen.rng().range(0, 1000), 1000);
          ASSERT_EQ(z.at(t), max(x.at(t), y.at(t)));
        }
      }
    }
  }
}

}  // namespace
}  // namespace rieszlab
