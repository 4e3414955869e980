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

#include "rpcheck/mechanisms.h"

#include <gtest/gtest.h>

#include "rpcheck/errors.h"
#include "test_util.h"

namespace rpcheck {
namespace {

using test::Mu;
using test::Prof;
using test::Q;

Lottery UniformOverBijections() {
  return Lottery({{Mu("a,b,c"), Q(1, 6)},
                  {Mu("a,c,b"), Q(1, 6)},
                  {Mu("b,a,c"), Q(1, 6)},
                  {Mu("b,c,a"), Q(1, 6)},
                  {Mu("c,a,b"), Q(1, 6)},
                  {Mu("c,b,a"), Q(1, 6)}});
}

TEST(SerialDictatorshipTest, Examples) {
  EXPECT_EQ(SerialDictatorship(Prof("a,b,c;a,b,c;a,b,c"),
                               PriorityOrder::Identity(3)),
            Mu("a,b,c"));
  EXPECT_EQ(SerialDictatorship(Prof("a,b,c;a,b,c;b,a,c"),
                               PriorityOrder({2, 0, 1})),
            Mu("a,c,b"));
  const auto double_a = test::Space({"a", "b"}, {2, 1});
  for (const auto& order : {PriorityOrder({0, 1}), PriorityOrder({1, 0})}) {
    EXPECT_EQ(SerialDictatorship(Prof("a,b;a,b", double_a), order),
              Mu("a,a", *double_a));
  }
  EXPECT_THROW(PriorityOrder({0, 0, 1}), InputError);
  EXPECT_THROW(SerialDictatorship(Prof("a,b,c;a,b,c;a,b,c"),
                                  PriorityOrder({1, 0})),
               InputError);
}

TEST(RandomPriorityTest, Examples) {
  EXPECT_EQ(RandomPriority(Prof("a,b,c;a,b,c;a,b,c")),
            UniformOverBijections());
  // Frozen from the independent enumeration of all six orders.
  EXPECT_EQ(RandomPriority(Prof("a,b,c;a,b,c;b,a,c")),
            Lottery({{Mu("a,b,c"), Q(1, 6)},
                     {Mu("a,c,b"), Q(1, 3)},
                     {Mu("b,a,c"), Q(1, 6)},
                     {Mu("c,a,b"), Q(1, 3)}}));
  const auto one = test::Space({"a", "b"});
  EXPECT_EQ(RandomPriority(Prof("b,a", one)),
            Lottery::Degenerate(Mu("b", *one)));
}

TEST(RandomPriorityTest, MarginalsOfAgentWithDistinctRanking) {
  const Lottery rp = RandomPriority(Prof("a,b,c;a,b,c;b,a,c"));
  const auto m = Marginals(rp, 3, *test::Abc());
  EXPECT_EQ(m.at(2, 1), Q(2, 3));
  EXPECT_EQ(m.at(2, 2), Q(1, 3));
  EXPECT_EQ(m.at(2, 0), Q(0));
}

TEST(RandomPriorityTest, FactorialGuard) {
  RpLimits limits;
  limits.max_agents = 2;
  EXPECT_THROW(RandomPriority(Prof("a,b,c;a,b,c;a,b,c"), limits),
               ResourceError);
  EXPECT_THROW(CoreFromRandomEndowments(Prof("a,b,c;a,b,c;a,b,c"), limits),
               ResourceError);
}

TEST(TopTradingCyclesTest, Examples) {
  const auto two = test::Space({"a", "b"});
  EXPECT_EQ(TopTradingCycles(Prof("b,a;a,b", two), Mu("a,b", *two)),
            Mu("b,a", *two));
  EXPECT_EQ(TopTradingCycles(Prof("b,a,c;a,b,c;c,a,b"), Mu("b,a,c")),
            Mu("b,a,c"));
  EXPECT_EQ(TopTradingCycles(Prof("a,b,c;a,b,c;a,b,c"), Mu("a,b,c")),
            Mu("a,b,c"));
  // Three-cycle: 0 wants b (held by 1), 1 wants c, 2 wants a.
  EXPECT_EQ(TopTradingCycles(Prof("b,a,c;c,b,a;a,c,b"), Mu("a,b,c")),
            Mu("b,c,a"));
}

TEST(TopTradingCyclesTest, Errors) {
  EXPECT_THROW(TopTradingCycles(Prof("a,b,c;a,b,c;a,b,c"), Assignment({0, 0, 1})),
               UnsupportedInputError);
  const auto multi = test::Space({"a", "b"}, {2, 1});
  EXPECT_THROW(TopTradingCycles(Prof("a,b;a,b", multi), Mu("a,a", *multi)),
               UnsupportedInputError);
}

TEST(CoreFromRandomEndowmentsTest, Examples) {
  const auto two = test::Space({"a", "b"});
  EXPECT_EQ(CoreFromRandomEndowments(Prof("b,a;a,b", two)),
            Lottery::Degenerate(Mu("b,a", *two)));
  EXPECT_EQ(CoreFromRandomEndowments(Prof("a,b,c;a,b,c;a,b,c")),
            UniformOverBijections());
}

TEST(SymmetrizeTest, ConstantInnerRule) {
  const ProfileRule constant = [](const Profile&) {
    return Lottery::Degenerate(Mu("b,c,a"));
  };
  EXPECT_EQ(Symmetrize(constant, Prof("a,b,c;c,a,b;b,c,a")),
            UniformOverBijections());
}

TEST(SymmetrizeTest, SerialDictatorshipGivesRandomPriority) {
  const ProfileRule sd = [](const Profile& r) {
    return Lottery::Degenerate(SerialDictatorship(r, PriorityOrder({1, 2, 0})));
  };
  const Profile r = Prof("c,a,b;c,b,a;b,a,c");
  EXPECT_EQ(Symmetrize(sd, r), RandomPriority(r));
}

TEST(AgentPermutationTest, ApplyAndUnapplyInvert) {
  const AgentPermutation pi({2, 0, 1});
  const Assignment mu = Mu("a,b,c");
  EXPECT_EQ(pi.Apply(mu), Mu("c,a,b"));
  EXPECT_EQ(pi.Unapply(pi.Apply(mu)), mu);
  EXPECT_EQ(pi.Apply(Prof("a,b,c;b,a,c;c,b,a")), Prof("c,b,a;a,b,c;b,a,c"));
  EXPECT_THROW(AgentPermutation({0, 0, 1}), InputError);
}

TEST(ExampleRuleTest, PrintedOutcomes) {
  EXPECT_EQ(OspExampleRule(Prof("a,b,c;a,b,c;a,b,c")), Mu("a,b,c"));
  EXPECT_EQ(OspExampleRule(Prof("a,c,b;a,b,c;a,b,c")), Mu("a,c,b"));
}

TEST(ExampleRuleTest, SecondClause) {
  // Agent 0 ranks c > a > b; a precedes b alphabetically, so agent 1 picks
  // from {a, b} and takes b.
  EXPECT_EQ(OspExampleRule(Prof("c,a,b;b,a,c;a,b,c")), Mu("c,b,a"));
  // Same ranking for agent 0, but now agent 1 prefers a.
  EXPECT_EQ(OspExampleRule(Prof("c,a,b;a,b,c;b,a,c")), Mu("c,a,b"));
  // b > c > a: c follows a alphabetically, so agent 2 picks first and
  // takes c before agent 1 can.
  EXPECT_EQ(OspExampleRule(Prof("b,c,a;c,a,b;c,a,b")), Mu("b,a,c"));
}

TEST(ExampleRuleTest, WrongDimensions) {
  const auto two = test::Space({"a", "b"});
  EXPECT_THROW(OspExampleRule(Prof("a,b;a,b", two)), UnsupportedInputError);
}

}  // namespace
}  // namespace rpcheck
