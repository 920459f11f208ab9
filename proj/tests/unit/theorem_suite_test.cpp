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
#include "rieszlab/theorem_suite.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rieszlab/error.hpp"
#include "rieszlab/lateral.hpp"
#include "rieszlab/operator.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/sampling.hpp"
#include "support/oracles.hpp"

namespace rieszlab {
namespace {

using testing::Mutation;
using testing::ScopedMutation;

CheckConfig small(std::size_t samples, std::uint64_t seed = kDefaultSeed) {
  return {{"seed", std::to_string(seed)}, {"samples", std::to_string(samples)}};
}

bool has_artifact(const TheoremCheck& c, const std::string& line) {
  return std::find(c.artifacts.begin(), c.artifacts.end(), line) != c.artifacts.end();
}

TEST(RegistryTest, CoversEveryNumberedClaim) {
  const std::vector<std::string> required{
      "thm-1.1-a", "thm-1.1-b",      "thm-1.1-c",      "thm-1.1-d",      "thm-1.1-e",      "ex-2.2",
      "thm-2.3-forward", "thm-2.3-converse", "rem-c00", "rem-pos-linear", "lem-3.1",   "thm-3.2",
      "thm-3.2-pres-P", "thm-3.2-pres-U", "cor-3.3", "cor-3.4", "cor-3.5", "cor-3.6", "cor-3.6-pres-P",
      "thm-4.2-1", "thm-4.2-2", "thm-4.2-3", "thm-4.2-4", "lem-4.4", "lem-4.5", "ex-4.3-pl", "ex-4.3-latmeet"};
  std::set<std::string> ids;
  for (const auto& info : check_registry()) {
    EXPECT_TRUE(ids.insert(info.id).second) << "duplicate id " << info.id;
    EXPECT_FALSE(info.claim.empty()) << info.id;
  }
  for (const auto& id : required) EXPECT_TRUE(ids.count(id)) << "missing " << id;
}

TEST(RunCheckTest, RejectsUnknownIdsAndConfig) {
  EXPECT_THROW(run_check("nosuch"), LookupError);
  EXPECT_THROW(run_check("lem-3.1", {{"colour", "red"}}), PreconditionError);
  EXPECT_THROW(run_check("lem-3.1", {{"samples", "0"}}), PreconditionError);
  EXPECT_THROW(run_check("lem-3.1", {{"samples", "many"}}), PreconditionError);
  EXPECT_THROW(run_check("ex-2.2", {{"level", "1"}}), PreconditionError);
}

TEST(RunCheckTest, IdenticalConfigReplaysIdentically) {
  for (const char* id : {"lem-3.1", "thm-1.1-a", "thm-4.2-2", "ex-2.2"}) {
    const auto a = run_check(id, small(40, 11));
    const auto b = run_check(id, small(40, 11));
    EXPECT_EQ(a.serialize(), b.serialize()) << id;
  }
  EXPECT_NE(run_check("lem-3.1", small(40, 11)).result.seed, run_check("lem-3.1", small(40, 12)).result.seed);
}

TEST(RunCheckTest, SerializedRecordsParseBack) {
  const auto c = run_check("ex-2.2", small(1));
  std::size_t lines = 0;
  std::size_t start = 0;
  const std::string text = c.serialize();
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    ASSERT_NE(end, std::string::npos);
    const auto fields = parse_record(std::string_view(text).substr(start, end - start));
    ASSERT_FALSE(fields.empty());
    EXPECT_EQ(fields[0].first, "record");
    EXPECT_EQ(fields[1].second, "ex-2.2");
    start = end + 1;
    ++lines;
  }
  EXPECT_EQ(lines, 1 + c.artifacts.size());
}

TEST(RunCheckTest, RefinementGridHoldsOnFiveHundredInstances) {
  const auto c = run_check("lem-3.1", small(500));
  EXPECT_EQ(c.result.verdict, Verdict::kHolds) << c.result.notes;
  EXPECT_EQ(c.result.samples_used, 500U);
  EXPECT_FALSE(c.result.exhaustive);
}

TEST(RunCheckTest, SeriesGrowthTable) {
  const auto c = run_check("ex-2.2", small(1));
  ASSERT_EQ(c.result.verdict, Verdict::kHolds) << c.result.notes;
  // Level 2N carries H_N / 2; H_31 / 2 is the first even-level value above 2.
  for (unsigned n : {1U, 5U, 30U, 31U}) {
    const Scalar h = oracle::harmonic(n) / Scalar(2);
    const std::string prefix = "level=" + std::to_string(2 * n) + " max=" + Value(RealInterval::point(h)).str() + " ";
    const bool found = std::any_of(c.artifacts.begin(), c.artifacts.end(),
                                   [&](const std::string& a) { return a.rfind(prefix, 0) == 0; });
    EXPECT_TRUE(found) << prefix;
  }
  EXPECT_LE(oracle::harmonic(30), Scalar(4));
  EXPECT_GT(oracle::harmonic(31), Scalar(4));
  EXPECT_TRUE(has_artifact(c, "growth_level=61"));
}

TEST(RunCheckTest, TableCounterexampleValue) {
  const auto c = run_check("ex-4.3-pl", small(1));
  EXPECT_EQ(c.result.verdict, Verdict::kHolds) << c.result.notes;
  EXPECT_TRUE(has_artifact(c, "meyer_unsafe=pl{(0,1),(1,1)}"));
  const auto d = run_check("ex-4.3-latmeet", small(50));
  EXPECT_EQ(d.result.verdict, Verdict::kHolds) << d.result.notes;
  EXPECT_TRUE(has_artifact(d, "meyer_unsafe=simple{0,1/2,1}[1,1]"));
}

TEST(MutationTest, MeetFormulaBreaksTheLateralMeetExample) {
  ScopedMutation m(Mutation::kLateralInfMeetFormula);
  const auto c = run_check("ex-4.3-latmeet", small(20));
  EXPECT_EQ(c.result.verdict, Verdict::kFails);
  EXPECT_FALSE(c.result.witness.empty());
}

TEST(MutationTest, SignFlipBreaksFragmentAlgebraAndGrid) {
  ScopedMutation m(Mutation::kLateralSupSignFlip);
  for (const char* id : {"frag-ba", "lem-3.1", "lat-order"}) {
    CheckConfig config = small(200);
    if (std::string(id) == "frag-ba") config["exhaustive_n"] = "0";
    const auto c = run_check(id, config);
    EXPECT_EQ(c.result.verdict, Verdict::kFails) << id;
    EXPECT_FALSE(c.result.witness.empty()) << id;
  }
}

TEST(MutationTest, LatticeMeetBreaksTheGrid) {
  ScopedMutation m(Mutation::kLateralInfLatticeMeet);
  const auto c = run_check("lem-3.1", small(200));
  EXPECT_EQ(c.result.verdict, Verdict::kFails);
  EXPECT_FALSE(c.result.witness.empty());
}

TEST(MutationTest, NoMutationLeaksOut) {
  EXPECT_EQ(testing::active_mutation(), Mutation::kNone);
  EXPECT_EQ(run_check("ex-4.3-latmeet", small(20)).result.verdict, Verdict::kHolds);
}

TEST(RunAllTest, FilterAndThreadingDoNotChangeResults) {
  EXPECT_THROW(run_all(Profile::kQuick, 1, std::vector<std::string>{}), PreconditionError);
  EXPECT_THROW(run_all(Profile::kQuick, 1, std::vector<std::string>{"lem-3.1", "nosuch"}), LookupError);
  const std::vector<std::string> ids{"thm-1.1-e", "lem-3.1", "ex-4.3-pl", "thm-4.2-4"};
  const auto one = run_all(Profile::kQuick, 5, ids, 1);
  const auto many = run_all(Profile::kQuick, 5, ids, 4);
  EXPECT_EQ(one.report(), many.report());
  ASSERT_EQ(one.checks.size(), 4U);
  EXPECT_EQ(one.checks[0].id, "thm-1.1-e");
  EXPECT_EQ(one.checks[1].id, "lem-3.1");
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.holds + one.inconclusive, 4U);
}

TEST(RunAllTest, ProfileNames) {
  EXPECT_EQ(parse_profile("quick"), Profile::kQuick);
  EXPECT_EQ(parse_profile("full"), Profile::kFull);
  EXPECT_THROW(parse_profile("medium"), PreconditionError);
}

Operator diagonal(Polynomial p) {
  Kernel k;
  k.diagonal = PiecewisePolynomial(std::move(p));
  return make_kernel(Space::eventually_constant(), Space::eventually_constant(), std::move(k));
}

Element ec(std::initializer_list<long> prefix, long tail) {
  std::vector<Scalar> s;
  for (long v : prefix) s.emplace_back(v);
  return Element::eventually_constant(std::move(s), Scalar(tail));
}

TEST(SearchTest, EqualOperatorsStabilizeAtOnce) {
  const Operator t = diagonal(Polynomial({Scalar(0), Scalar(2), Scalar(1)}));
  const Element x = ec({1, -1}, 2);
  const auto inst = classify_join_growth(t, t, x, 16, Scalar(1000000));
  EXPECT_EQ(inst.growth, GrowthClass::kStabilized);
  EXPECT_EQ(inst.level, inst.first_level);
  EXPECT_EQ(inst.levels.back(), apply(t, x));
}

TEST(SearchTest, DiagonalKernelsStabilizeOnceThePrefixIsExhausted) {
  const Operator s = diagonal(Polynomial({Scalar(0), Scalar(0), Scalar(1)}));
  const Operator t = diagonal(Polynomial({Scalar(0), Scalar(-1)}));
  const auto inst = classify_join_growth(s, t, ec({1, -2}, 3), 20, Scalar(1000000));
  EXPECT_EQ(inst.growth, GrowthClass::kStabilized);
  EXPECT_EQ(inst.level, 2U);
  // max(t^2, -t) atomwise: 1, 4 and 9 on the tail.
  EXPECT_EQ(inst.levels.back(), Value(ec({1, 4}, 9)));
}

TEST(SearchTest, LinearExampleAgainstZeroGrowsPastTheBound) {
  const Operator t = named_example("knbdbj");
  const auto inst = classify_join_growth(t, Scalar(0) * t, one(Space::eventually_constant()), 64, Scalar(1000));
  std::size_t n = 0;
  while (n * (n + 1) / 2 <= 1000) ++n;
  EXPECT_EQ(inst.growth, GrowthClass::kUnbounded);
  EXPECT_EQ(inst.level, n);
  EXPECT_TRUE(inst.monotone);
}

TEST(SearchTest, ReportsAndRefusesOtherSpaces) {
  SearchConfig cfg;
  cfg.instances = 6;
  cfg.max_level = 24;
  cfg.bound = Scalar(1000);
  const auto report = search_kkhdh(cfg);
  EXPECT_EQ(report.instances.size(), 8U);
  EXPECT_EQ(report.instances[0].growth, GrowthClass::kStabilized);
  EXPECT_NE(report.str().find(std::string(kSearchDisclaimer)), std::string::npos);
  EXPECT_EQ(search_kkhdh(cfg).str(), report.str());
  const Operator lm = named_example("lateral_meet");
  EXPECT_THROW(classify_join_growth(lm, lm, one(default_simple_space()), 8, Scalar(10)), UnsupportedError);
}

}  // namespace
}  // namespace rieszlab
