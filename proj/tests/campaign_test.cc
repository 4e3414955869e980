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

#include "rpcheck/campaign.h"

#include <gtest/gtest.h>

#include <memory>
#include <string>
#include <vector>

#include "rpcheck/errors.h"
#include "rpcheck/json_io.h"
#include "test_util.h"

namespace rpcheck {
namespace {

using test::Mu;
using test::Prof;

RuleHandle Handle(const TableRule& rule) {
  return RuleHandle::Table(std::make_shared<const TableRule>(rule));
}

std::vector<std::pair<std::string, RuleHandle>> Fleet() {
  std::vector<std::pair<std::string, RuleHandle>> fleet = {
      {"rp", RuleHandle::RandomPriority()},
      {"sd", RuleHandle::SerialDictatorship(PriorityOrder::Identity(3))},
      {"ttc", RuleHandle::Ttc(Mu("a,b,c"))},
      {"osp-example", RuleHandle::OspExample()},
  };
  for (const auto& fixture : fixtures::AllFixtureRules()) {
    fleet.emplace_back(fixture.name, Handle(fixture.rule));
  }
  return fleet;
}

TEST(ForwardSuiteTest, RandomPriorityPassesOnEveryAcceptanceDomain) {
  for (const auto& spec :
       {fixtures::Abc3Spec(), test::MultiCopy(), test::TwoByTwo()}) {
    const CampaignReport report = VerifyTheorem1Forward(spec);
    EXPECT_TRUE(report.passed) << report.note;
    EXPECT_EQ(report.status, "pass");
    EXPECT_EQ(report.verdicts.size(), 6u);
    for (const auto& v : report.verdicts) EXPECT_TRUE(v.passed);
  }
}

TEST(ForwardSuiteTest, Totals) {
  const CampaignReport report = VerifyTheorem1Forward(fixtures::Abc3Spec());
  EXPECT_EQ(report.totals.profiles, 216u);
  EXPECT_EQ(report.totals.pairs, 216u * 216u);
  EXPECT_EQ(report.totals.deviations, 216u * 3u * 5u);
}

TEST(ForwardSuiteTest, ExampleRuleFails) {
  const CampaignReport report = VerifyTheorem1Forward(
      fixtures::Abc3Spec(), {}, RuleHandle::OspExample());
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.status, "fail");
}

TEST(SymmetrizedDeterministicTest, DeterministicBenchmarks) {
  for (const auto& inner :
       {RuleHandle::SerialDictatorship(PriorityOrder({1, 2, 0})),
        RuleHandle::Ttc(Mu("a,b,c"))}) {
    const CampaignReport report =
        VerifyCorollary1(inner, fixtures::Abc3Spec());
    EXPECT_TRUE(report.passed) << inner.Describe();
    ASSERT_EQ(report.equivalences.size(), 1u);
    EXPECT_EQ(report.equivalences[0].compared, 216u);
  }
  const CampaignReport small = VerifyCorollary1(
      RuleHandle::SerialDictatorship(PriorityOrder::Identity(2)),
      test::TwoByTwo());
  EXPECT_TRUE(small.passed);
  EXPECT_EQ(small.equivalences[0].compared, 4u);
}

TEST(SymmetrizedDeterministicTest, PreconditionFailures) {
  const CampaignReport example =
      VerifyCorollary1(RuleHandle::OspExample(), fixtures::Abc3Spec());
  EXPECT_FALSE(example.passed);
  EXPECT_EQ(example.status, "precondition_failed");
  EXPECT_TRUE(example.equivalences.empty());

  const CampaignReport random =
      VerifyCorollary1(RuleHandle::RandomPriority(), fixtures::Abc3Spec());
  EXPECT_EQ(random.status, "precondition_failed");
}

TEST(MonotonicityDecompositionTest, GlobalAndLocalAgreeAcrossTheFleet) {
  for (const auto& [name, rule] : Fleet()) {
    const CampaignReport report = VerifyProp2(rule, fixtures::Abc3Spec());
    EXPECT_TRUE(report.passed) << name << ": " << report.note;
  }
}

TEST(SpDecompositionTest, AgreesAcrossTheFleet) {
  for (const auto& [name, rule] : Fleet()) {
    const CampaignReport report =
        VerifySpDecomposition(rule, fixtures::Abc3Spec());
    EXPECT_TRUE(report.passed) << name << ": " << report.note;
  }
}

TEST(RulesEqualTest, Equivalences) {
  const auto spec = fixtures::Abc3Spec();
  EXPECT_TRUE(RulesEqual(RuleHandle::RandomPriority(),
                         RuleHandle::CoreFromRandomEndowments(), spec,
                         EqualityLevel::kDistribution)
                  .passed);
  EXPECT_TRUE(RulesEqual(RuleHandle::RandomPriority(),
                         RuleHandle::Symmetrized(RuleHandle::SerialDictatorship(
                             PriorityOrder::Identity(3))),
                         spec, EqualityLevel::kWelfare)
                  .passed);
}

TEST(RulesEqualTest, MismatchWitness) {
  const Domain d(fixtures::Abc3Spec());
  const EquivalenceResult result =
      CompareRules(RuleHandle::RandomPriority(), RuleHandle::OspExample(), d,
                   EqualityLevel::kDistribution, 3);
  EXPECT_FALSE(result.equal);
  EXPECT_EQ(result.profile, Prof("a,b,c;a,b,c;a,b,c"));
  EXPECT_EQ(result.right_lottery, Lottery::Degenerate(Mu("a,b,c")));
  EXPECT_EQ(result.left_lottery->support_size(), 6u);
}

TEST(RulesEqualTest, WelfareLevelIgnoresCorrelation) {
  const Domain d(fixtures::Abc3Spec());
  // Two lotteries with equal marginals but different supports at the
  // all-identical profile; elsewhere both follow random priority.
  std::vector<Lottery> left;
  std::vector<Lottery> right;
  for (const auto& profile : d.profiles()) {
    left.push_back(RandomPriority(profile));
    right.push_back(RandomPriority(profile));
  }
  right[0] = Lottery({{Mu("a,b,c"), test::Q(1, 3)},
                      {Mu("b,c,a"), test::Q(1, 3)},
                      {Mu("c,a,b"), test::Q(1, 3)}});
  const auto domain = fixtures::Abc3Domain();
  const RuleHandle l = Handle(TableRule(domain, left));
  const RuleHandle r = Handle(TableRule(domain, right));
  EXPECT_FALSE(CompareRules(l, r, d, EqualityLevel::kDistribution).equal);
  EXPECT_TRUE(CompareRules(l, r, d, EqualityLevel::kWelfare).equal);
}

TEST(ReproducibilityTest, ReportsIgnoreWorkerCount) {
  const JsonOptions reproducible{false, true};
  for (const auto& [name, rule] : Fleet()) {
    std::string first;
    for (int workers : {1, 2, 5}) {
      CampaignOptions options;
      options.workers = workers;
      const std::string text = DumpJson(CampaignReportToJson(
          VerifyTheorem1Forward(fixtures::Abc3Spec(), options, rule),
          reproducible));
      if (first.empty()) first = text;
      EXPECT_EQ(text, first) << name << " workers=" << workers;
    }
  }
}

TEST(CampaignGuardsTest, PairScanGuard) {
  CampaignOptions options;
  options.max_pair_profiles = 10;
  EXPECT_THROW(VerifyTheorem1Forward(fixtures::Abc3Spec(), options),
               ResourceError);
  options = {};
  options.max_profiles = 10;
  EXPECT_THROW(VerifyTheorem1Forward(fixtures::Abc3Spec(), options),
               ResourceError);
}

TEST(EqualityLevelTest, Names) {
  EXPECT_EQ(ParseEqualityLevel("welfare"), EqualityLevel::kWelfare);
  EXPECT_EQ(EqualityLevelName(EqualityLevel::kDistribution), "distribution");
  EXPECT_THROW(ParseEqualityLevel("utility"), ParseError);
}

}  // namespace
}  // namespace rpcheck
