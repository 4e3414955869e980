// Copyright 2026 The rpcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <vector>

#include "rpcheck/axioms.h"
#include "rpcheck/errors.h"
#include "rpcheck/mechanisms.h"
#include "test_util.h"

namespace rpcheck {
namespace {

using test::Mu;
using test::Pref;
using test::Prof;
using test::Q;

TEST(AxiomNamesTest, RoundTrip) {
  for (AxiomId id : AllRuleAxioms()) {
    EXPECT_EQ(ParseAxiomId(AxiomName(id)), id);
  }
  EXPECT_EQ(ParseAxiomId("ordinality"), AxiomId::kOrdinality);
  EXPECT_THROW(ParseAxiomId("fairness"), ParseError);
}

TEST(ParetoTest, Examples) {
  const auto two = test::Space({"a", "b"});
  const Profile opposed = Prof("a,b;b,a", two);
  EXPECT_FALSE(IsParetoEfficient(Mu("b,a", *two), opposed));
  EXPECT_EQ(FindParetoImprovement(Mu("b,a", *two), opposed), Mu("a,b", *two));
  EXPECT_TRUE(IsParetoEfficient(Mu("a,b,c"), Prof("a,b,c;b,a,c;c,a,b")));
  EXPECT_TRUE(IsParetoEfficient(Mu("a,c,b"), Prof("a,b,c;a,b,c;b,a,c")));
  // Agent 0 holds b while a is unassigned in a two-copy space.
  const auto double_a = test::Space({"a", "b"}, {2, 1});
  EXPECT_FALSE(IsParetoEfficient(Mu("b,a", *double_a),
                                 Prof("a,b;a,b", double_a)));
}

TEST(ParetoTest, ImprovementDominates) {
  const Domain d(fixtures::Abc3Spec());
  for (const auto& profile : d.profiles()) {
    for (const auto& mu : d.assignments()) {
      const auto better = FindParetoImprovement(mu, profile);
      if (!better) continue;
      bool strict = false;
      for (AgentIndex i = 0; i < 3; ++i) {
        ASSERT_FALSE(profile.pref(i).Prefers(mu[i], (*better)[i]));
        strict = strict || profile.pref(i).Prefers((*better)[i], mu[i]);
      }
      ASSERT_TRUE(strict);
    }
  }
}

TEST(ExPostEfficiencyTest, Examples) {
  const auto two = test::Space({"a", "b"});
  const Profile opposed = Prof("a,b;b,a", two);
  EXPECT_TRUE(
      CheckExPostEfficiency(Lottery::Degenerate(Mu("a,b", *two)), opposed)
          .passed);
  const AxiomVerdict v = CheckExPostEfficiency(
      Lottery({{Mu("a,b", *two), Q(2, 3)}, {Mu("b,a", *two), Q(1, 3)}}),
      opposed);
  ASSERT_FALSE(v.passed);
  EXPECT_EQ(v.witness->mu, Mu("b,a", *two));
  EXPECT_EQ(v.witness->mu_prime, Mu("a,b", *two));
}

TEST(EqualTreatmentTest, Examples) {
  const AxiomVerdict vacuous = CheckEqualTreatment(
      Lottery::Degenerate(Mu("a,b,c")), Prof("a,b,c;b,a,c;c,a,b"));
  EXPECT_TRUE(vacuous.passed);
  EXPECT_EQ(vacuous.checked, 0u);

  const Profile same = Prof("a,b,c;a,b,c;a,b,c");
  EXPECT_TRUE(CheckEqualTreatment(RandomPriority(same), same).passed);

  const AxiomVerdict v =
      CheckEqualTreatment(Lottery::Degenerate(Mu("a,b,c")),
                          Prof("a,b,c;a,b,c;b,a,c"));
  ASSERT_FALSE(v.passed);
  EXPECT_EQ(v.witness->agent, 0);
  EXPECT_EQ(v.witness->other_agent, 1);
  EXPECT_EQ(v.witness->mu, Mu("a,b,c"));
  EXPECT_EQ(v.witness->mu_prime, Mu("b,a,c"));
  EXPECT_EQ(v.witness->value, Q(1));
  EXPECT_EQ(v.witness->value_prime, Q(0));
}

TEST(EqualTreatmentTest, MarginalLevel) {
  const Profile r = Prof("a,b,c;a,b,c;c,b,a");
  const Lottery mixed({{Mu("a,b,c"), Q(1, 2)}, {Mu("b,a,c"), Q(1, 2)}});
  EXPECT_TRUE(CheckEqualTreatmentMarginal(mixed, r).passed);
  EXPECT_FALSE(
      CheckEqualTreatmentMarginal(Lottery::Degenerate(Mu("a,b,c")), r).passed);
  // Equal marginals without assignment-level symmetry: agents 0, 1 and 2
  // share a ranking and each pair's transposition is missing.
  const Profile all = Prof("a,b,c;a,b,c;a,b,c");
  const Lottery cyclic({{Mu("a,b,c"), Q(1, 3)},
                        {Mu("b,c,a"), Q(1, 3)},
                        {Mu("c,a,b"), Q(1, 3)}});
  EXPECT_TRUE(CheckEqualTreatmentMarginal(cyclic, all).passed);
  EXPECT_FALSE(CheckEqualTreatment(cyclic, all).passed);
}

TEST(SymmetrizeWithinEqualsTest, Examples) {
  const Profile r = Prof("a,b,c;a,b,c;c,b,a");
  EXPECT_EQ(SymmetrizeWithinEquals(Lottery::Degenerate(Mu("a,b,c")), r),
            Lottery({{Mu("a,b,c"), Q(1, 2)}, {Mu("b,a,c"), Q(1, 2)}}));
  const Profile distinct = Prof("a,b,c;b,a,c;c,b,a");
  const Lottery l({{Mu("a,b,c"), Q(1, 4)}, {Mu("c,b,a"), Q(3, 4)}});
  EXPECT_EQ(SymmetrizeWithinEquals(l, distinct), l);
}

TEST(SymmetrizeWithinEqualsTest, FixedPointOnRandomPriority) {
  const Domain d(fixtures::Abc3Spec());
  for (const auto& profile : d.profiles()) {
    const Lottery rp = RandomPriority(profile);
    ASSERT_EQ(SymmetrizeWithinEquals(rp, profile), rp) << profile.Encode();
  }
}

TEST(SymmetrizeWithinEqualsTest, MultiCopy) {
  const DomainSpec spec = test::MultiCopy();
  const Profile r =
      Prof("a,b,none;a,b,none;b,a,none;b,a,none", spec.space,
           DomainTag::kNullLast);
  const Lottery sym = SymmetrizeWithinEquals(
      Lottery::Degenerate(Mu("a,none,b,a", *spec.space)), r);
  EXPECT_TRUE(CheckEqualTreatment(sym, r).passed);
  EXPECT_EQ(sym.support_size(), 4u);
  EXPECT_EQ(Marginals(sym, 4, *spec.space).at(0, 0), Q(1, 2));
}

TEST(SdDominanceTest, Examples) {
  const Preference p = Pref("a,b,c");
  const std::vector<Rational> row{Q(1, 2), Q(1, 6), Q(1, 3)};
  EXPECT_TRUE(SdDominates(row, row, p));
  const std::vector<Rational> top{Q(1), Q(0), Q(0)};
  EXPECT_TRUE(SdDominates(top, row, p));
  const std::vector<Rational> third{Q(1, 3), Q(1, 3), Q(1, 3)};
  EXPECT_TRUE(SdDominates(row, third, p));
  EXPECT_FALSE(SdDominates(third, row, p));
  // The relation is partial: neither row dominates the other.
  const std::vector<Rational> x{Q(1, 2), Q(0), Q(1, 2)};
  const std::vector<Rational> y{Q(1, 3), Q(2, 3), Q(0)};
  EXPECT_FALSE(SdDominates(x, y, p));
  EXPECT_FALSE(SdDominates(y, x, p));
  EXPECT_THROW(SdDominates(x, std::vector<Rational>{Q(1)}, p), InputError);
}

}  // namespace
}  // namespace rpcheck
