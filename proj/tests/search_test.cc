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

#include "rpcheck/search.h"

#include <gtest/gtest.h>

#include <memory>
#include <string>

#include "rpcheck/errors.h"
#include "rpcheck/json_io.h"
#include "test_util.h"

namespace rpcheck {
namespace {

SearchRequest MonotonicityRequest(std::uint64_t seed) {
  SearchRequest request;
  request.satisfy = {AxiomId::kEqualTreatment, AxiomId::kExPostEfficiency};
  request.violate = AxiomId::kProbabilisticMonotonicity;
  request.domain = fixtures::Abc3Spec();
  request.seed = seed;
  return request;
}

SearchRequest NonbossinessRequest(std::uint64_t seed) {
  SearchRequest request;
  request.satisfy = {AxiomId::kEqualTreatment, AxiomId::kExPostEfficiency,
                     AxiomId::kStrategyProofness};
  request.violate = AxiomId::kWeakObjectNonbossiness;
  request.domain = fixtures::Abc3Spec();
  request.seed = seed;
  return request;
}

std::string Reproducible(const CampaignReport& report) {
  return DumpJson(CampaignReportToJson(report, JsonOptions{false, true}));
}

TEST(SearchTest, FindsMonotonicityCounterexample) {
  const SearchResult result = SearchCounterexample(MonotonicityRequest(1));
  ASSERT_TRUE(result.rule.has_value());
  EXPECT_TRUE(result.report.passed);
  EXPECT_EQ(result.report.status, "found");
  EXPECT_TRUE(result.report.search->revalidated);

  // Re-check the returned table from scratch.
  const Tabulation t = Tabulation::FromTable(*result.rule);
  EXPECT_TRUE(CheckRuleAxiom(AxiomId::kEqualTreatment, t).passed);
  EXPECT_TRUE(CheckRuleAxiom(AxiomId::kExPostEfficiency, t).passed);
  const AxiomVerdict v =
      CheckRuleAxiom(AxiomId::kProbabilisticMonotonicity, t);
  ASSERT_FALSE(v.passed);
  EXPECT_TRUE(WitnessIsGenuine(
      v, RuleHandle::Table(std::make_shared<const TableRule>(*result.rule))));
}

TEST(SearchTest, SameSeedSameReport) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_EQ(Reproducible(SearchCounterexample(MonotonicityRequest(seed)).report),
              Reproducible(SearchCounterexample(MonotonicityRequest(seed)).report));
  }
}

TEST(SearchTest, WorkerCountDoesNotChangeTheRun) {
  SearchRequest many = NonbossinessRequest(7);
  many.budget = 40;
  many.options.workers = 4;
  SearchRequest one = NonbossinessRequest(7);
  one.budget = 40;
  EXPECT_EQ(Reproducible(SearchCounterexample(many).report),
            Reproducible(SearchCounterexample(one).report));
}

TEST(SearchTest, ExhaustedBudgetReportsHonestly) {
  SearchRequest request = NonbossinessRequest(7);
  request.budget = 20;
  const SearchResult result = SearchCounterexample(request);
  EXPECT_FALSE(result.rule.has_value());
  EXPECT_FALSE(result.report.passed);
  EXPECT_EQ(result.report.status, "exhausted");
  EXPECT_EQ(result.report.search->steps, 20u);
}

TEST(SearchTest, RejectsContradictoryRequests) {
  SearchRequest request = MonotonicityRequest(1);
  request.violate = AxiomId::kEqualTreatment;
  EXPECT_THROW(SearchCounterexample(request), InputError);
  request.violate = AxiomId::kOrdinality;
  EXPECT_THROW(SearchCounterexample(request), InputError);
}

TEST(SearchTest, FrozenRunsReproduce) {
  const std::string dir = std::string(RPCHECK_FIXTURE_DIR) + "/search/";
  EXPECT_EQ(CampaignReportToJson(SearchCounterexample(MonotonicityRequest(1)).report,
                                 JsonOptions{false, true}),
            ReadJsonFile(dir + "ete_expost_vs_prob_mono_seed1.json"));
  EXPECT_EQ(CampaignReportToJson(SearchCounterexample(NonbossinessRequest(7)).report,
                                 JsonOptions{false, true}),
            ReadJsonFile(dir + "sp_vs_weak_ownb_seed7.json"));
}

}  // namespace
}  // namespace rpcheck
