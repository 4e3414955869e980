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

#include "rpcheck/errors.h"
#include "rpcheck/model.h"
#include "rpcheck/rational.h"
#include "test_util.h"

namespace rpcheck {
namespace {

using test::Abc;
using test::Mu;
using test::Pref;
using test::Prof;
using test::Q;

const ObjectIndex a = 0, b = 1, c = 2;

TEST(RationalTest, ParsesAndNormalizes) {
  EXPECT_EQ(Rational::Parse("2/4").ToString(), "1/2");
  EXPECT_EQ(Rational::Parse("3").ToString(), "3/1");
  EXPECT_EQ(Rational::Parse("-1/3"), Q(-1, 3));
  EXPECT_EQ(Rational().ToString(), "0/1");
  EXPECT_THROW(Rational::Parse("1/0"), ParseError);
  EXPECT_THROW(Rational::Parse("0.5"), ParseError);
  EXPECT_THROW(Rational::Parse("1/-2"), ParseError);
  EXPECT_THROW(Rational(1, 0), InputError);
}

TEST(RationalTest, ExactArithmetic) {
  EXPECT_EQ(Q(1, 3) + Q(1, 6), Q(1, 2));
  EXPECT_EQ(Q(1, 6) * 6, Q(1));
  EXPECT_LT(Q(1, 3), Q(1, 2));
  EXPECT_EQ(Factorial(5), Q(120));
  EXPECT_EQ(Abs(Q(-2, 7)), Q(2, 7));
  // 1/6 is not representable in binary floating point; six copies still sum
  // to exactly one.
  Rational sum;
  for (int k = 0; k < 6; ++k) sum += Q(1, 6);
  EXPECT_EQ(sum, Q(1));
}

TEST(ObjectSpaceTest, Validation) {
  EXPECT_THROW(ObjectSpace({"a", "a"}, {1, 1}), InputError);
  EXPECT_THROW(ObjectSpace({"a"}, {0}), InputError);
  EXPECT_THROW(ObjectSpace({"a,b"}, {1}), InputError);
  EXPECT_THROW(ObjectSpace({"a", "b"}, {1}), InputError);
  EXPECT_THROW(Abc()->ValidateFor(4), InputError);
  EXPECT_NO_THROW(Abc()->ValidateFor(3));
  EXPECT_THROW(Abc()->IndexOf("d"), InputError);
  const auto multi = test::Space({"a", "b"}, {2, 1}, "none", 4);
  EXPECT_NO_THROW(multi->ValidateFor(4));
  EXPECT_THROW(multi->ValidateFor(5), InputError);  // null quota must be n
}

TEST(PreferenceTest, RejectsNonPermutations) {
  EXPECT_THROW(Preference({0, 0, 1}), InputError);
  EXPECT_THROW(Preference({}), InputError);
}

TEST(ContourTest, UpperContour) {
  const Preference p = Pref("a,b,c");
  EXPECT_TRUE(UpperContour(p, a).empty());
  EXPECT_EQ(UpperContour(p, c), (std::vector<ObjectIndex>{a, b}));
  EXPECT_EQ(UpperContour(p, b), (std::vector<ObjectIndex>{a}));
  EXPECT_THROW(UpperContour(p, 3), InputError);
}

TEST(ContourTest, LowerContour) {
  const Preference p = Pref("a,b,c");
  EXPECT_TRUE(LowerContour(p, c).empty());
  EXPECT_EQ(LowerContour(p, a), (std::vector<ObjectIndex>{b, c}));
  EXPECT_EQ(LowerContour(p, b), (std::vector<ObjectIndex>{c}));
  EXPECT_THROW(LowerContour(p, -1), InputError);
}

TEST(SwapTest, AdjacentSwap) {
  const Preference p = Pref("a,b,c");
  EXPECT_EQ(AdjacentSwap(p, 0), Pref("b,a,c"));
  EXPECT_EQ(AdjacentSwap(p, 1), Pref("a,c,b"));
  EXPECT_EQ(AdjacentSwap(AdjacentSwap(p, 1), 1), p);
  EXPECT_THROW(AdjacentSwap(p, 2), InputError);
  EXPECT_THROW(AdjacentSwap(p, -1), InputError);
}

TEST(SwapTest, Neighborhood) {
  EXPECT_EQ(Neighborhood(Pref("a,b,c")),
            (std::vector<Preference>{Pref("b,a,c"), Pref("a,c,b")}));
  const auto two = test::Space({"a", "b"});
  EXPECT_EQ(Neighborhood(Pref("a,b", *two)),
            (std::vector<Preference>{Pref("b,a", *two)}));
  const auto with_null = test::Space({"a", "b"}, {}, "none", 2);
  EXPECT_EQ(Neighborhood(Pref("a,b,none", *with_null), true),
            (std::vector<Preference>{Pref("b,a,none", *with_null)}));
}

TEST(MonotonicTransformationTest, Examples) {
  const Profile r = Prof("a,b,c;a,b,c;a,b,c");
  EXPECT_TRUE(IsMuMonotonicTransformation(r, r, Mu("a,b,c")));
  // c enters the upper contour of agent 0's object b.
  EXPECT_FALSE(IsMuMonotonicTransformation(r, Prof("a,c,b;a,b,c;a,b,c"),
                                           Mu("b,a,c")));
  // The pair from the three-agent example: agent 0 keeps a at the top.
  EXPECT_TRUE(IsMuMonotonicTransformation(r, Prof("a,c,b;a,b,c;a,b,c"),
                                          Mu("a,b,c")));
  const auto two = test::Space({"a", "b"});
  EXPECT_THROW(IsMuMonotonicTransformation(r, Prof("a,b;a,b", two),
                                           Mu("a,b,c")),
               InputError);
}

TEST(MonotonicTransformationTest, SwapPath) {
  const Profile r = Prof("a,b,c;a,b,c;a,b,c");
  EXPECT_EQ(MonotonicSwapPath(r, r, Mu("a,b,c")), (std::vector<Profile>{r}));
  const Profile r2 = Prof("a,c,b;a,b,c;a,b,c");
  EXPECT_EQ(MonotonicSwapPath(r, r2, Mu("a,b,c")),
            (std::vector<Profile>{r, r2}));
  EXPECT_THROW(MonotonicSwapPath(r, r2, Mu("b,a,c")), ContractError);
}

TEST(MonotonicTransformationTest, LongerPathStepsAreMonotonic) {
  const Profile from = Prof("c,b,a;b,a,c;a,b,c");
  const Profile to = Prof("a,b,c;b,c,a;a,c,b");
  const Assignment mu = Mu("a,b,c");
  ASSERT_TRUE(IsMuMonotonicTransformation(from, to, mu));
  const auto path = MonotonicSwapPath(from, to, mu);
  ASSERT_GE(path.size(), 2u);
  EXPECT_EQ(path.front(), from);
  EXPECT_EQ(path.back(), to);
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    EXPECT_TRUE(IsMuMonotonicTransformation(path[k], path[k + 1], mu));
  }
}

TEST(LotteryTest, Validation) {
  EXPECT_THROW(Lottery({}), InputError);
  EXPECT_THROW(Lottery({{Mu("a,b,c"), Q(1, 2)}}), InputError);
  EXPECT_THROW(Lottery({{Mu("a,b,c"), Q(3, 2)}, {Mu("b,a,c"), Q(-1, 2)}}),
               InputError);
  const Lottery l({{Mu("b,a,c"), Q(1, 2)}, {Mu("a,b,c"), Q(1, 2)}});
  // Entries come back in canonical assignment order.
  EXPECT_EQ(l.entries().front().first, Mu("a,b,c"));
  EXPECT_EQ(l.probability(Mu("c,b,a")), Q(0));
  EXPECT_THROW(l.SoleAssignment(), ContractError);
}

TEST(MarginalsTest, Examples) {
  const auto m = Marginals(Lottery::Degenerate(Mu("b,c,a")), 3, *Abc());
  for (AgentIndex i = 0; i < 3; ++i) {
    for (ObjectIndex x = 0; x < 3; ++x) {
      EXPECT_EQ(m.at(i, x), Q(Mu("b,c,a")[i] == x ? 1 : 0));
    }
  }
  const Lottery l({{Mu("a,b,c"), Q(1, 2)}, {Mu("b,a,c"), Q(1, 2)}});
  const auto half = Marginals(l, 3, *Abc());
  EXPECT_EQ(half.at(0, a), Q(1, 2));
  EXPECT_EQ(half.at(0, b), Q(1, 2));
  EXPECT_EQ(half.at(0, c), Q(0));
}

TEST(InducedProfileTest, Examples) {
  const UtilityProfile u({{Q(3), Q(2), Q(1)}, {Q(1), Q(2), Q(3)}});
  const Profile r = InducedOrdinalProfile(u, Abc());
  EXPECT_EQ(r.pref(0), Pref("a,b,c"));
  EXPECT_EQ(r.pref(1), Pref("c,b,a"));
  EXPECT_THROW(UtilityProfile({{Q(1), Q(1), Q(2)}}), InputError);
}

TEST(AssignmentTest, Enumeration) {
  const auto two = test::Space({"a", "b"});
  EXPECT_EQ(EnumerateAssignments(*two, 2),
            (std::vector<Assignment>{Mu("a,b", *two), Mu("b,a", *two)}));
  EXPECT_EQ(EnumerateAssignments(*Abc(), 3).size(), 6u);
  const auto double_a = test::Space({"a"}, {2});
  EXPECT_EQ(EnumerateAssignments(*double_a, 2),
            (std::vector<Assignment>{Mu("a,a", *double_a)}));
  const auto short_space = test::Space({"a", "b"});
  EXPECT_THROW(EnumerateAssignments(*short_space, 3), InputError);
}

TEST(AssignmentTest, Feasibility) {
  EXPECT_TRUE(Mu("a,b,c").IsFeasible(*Abc()));
  EXPECT_FALSE(Assignment({0, 0, 1}).IsFeasible(*Abc()));
  EXPECT_THROW(Assignment({0, 0, 1}).Validate(*Abc()), InputError);
  EXPECT_EQ(Mu("a,b,c").Transposed(0, 2), Mu("c,b,a"));
  EXPECT_EQ(Mu("a,b,c").ToString(*Abc()), "(a,b,c)");
}

TEST(ProfileTest, NullLastRejectsMisplacedNull) {
  const auto space = test::Space({"a", "b"}, {}, "none", 2);
  EXPECT_NO_THROW(Prof("a,b,none;b,a,none", space, DomainTag::kNullLast));
  EXPECT_THROW(Prof("a,none,b;b,a,none", space, DomainTag::kNullLast),
               InputError);
  EXPECT_THROW(Prof("a,b;a,b", test::Space({"a", "b"}), DomainTag::kNullLast),
               InputError);
}

TEST(ProfileTest, EncodeIsLabelBased) {
  EXPECT_EQ(Prof("a,b,c;c,b,a;b,a,c").Encode(), "a,b,c;c,b,a;b,a,c");
  EXPECT_EQ(Prof("a,b,c;c,b,a;b,a,c").WithPreference(1, Pref("a,c,b")),
            Prof("a,b,c;a,c,b;b,a,c"));
}

}  // namespace
}  // namespace rpcheck
