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

#include "rpcheck/json_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "rpcheck/campaign.h"
#include "rpcheck/errors.h"
#include "rpcheck/mechanisms.h"
#include "test_util.h"

namespace rpcheck {
namespace {

using test::Mu;
using test::Prof;
using test::Q;

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

TEST(ProfileJsonTest, RoundTrip) {
  const Profile r = Prof("a,b,c;c,a,b;b,c,a");
  const Json j = ProfileToJson(r);
  EXPECT_EQ(j["agents"][1], Json({"c", "a", "b"}));
  EXPECT_EQ(ProfileFromJson(j), r);

  const DomainSpec spec = test::MultiCopy();
  const Profile n = Prof("a,b,none;b,a,none;a,b,none;a,b,none", spec.space,
                         DomainTag::kNullLast);
  const Json jn = ProfileToJson(n);
  EXPECT_EQ(jn["null"], "none");
  EXPECT_EQ(jn["domain"], "null_last");
  EXPECT_EQ(ProfileFromJson(jn), n);
}

TEST(ProfileJsonTest, NullAddedWhenNotListed) {
  const Json j = Json::parse(R"({"objects": ["a", "b"], "quotas": [1, 1],
      "null": "none", "domain": "null_last",
      "agents": [["a", "b", "none"], ["b", "a", "none"], ["a", "b", "none"]]})");
  const Profile r = ProfileFromJson(j);
  EXPECT_EQ(r.space().labels(), (std::vector<std::string>{"a", "b", "none"}));
  EXPECT_EQ(r.space().quota(2), 3);
}

TEST(ProfileJsonTest, Errors) {
  EXPECT_THROW(ProfileFromJson(Json::parse(R"({"objects": ["a"]})")),
               ParseError);
  EXPECT_THROW(ProfileFromJson(Json::parse(
                   R"({"objects": ["a", "b"], "agents": [["a", "c"]]})")),
               InputError);
}

TEST(LotteryJsonTest, RoundTripAndDecimal) {
  const Lottery rp = RandomPriority(Prof("a,b,c;a,b,c;b,a,c"));
  const Json exact = LotteryToJson(rp, *test::Abc());
  EXPECT_EQ(exact["entries"][1]["prob"], "1/3");
  EXPECT_FALSE(exact["entries"][1].contains("approx"));
  EXPECT_EQ(LotteryFromJson(exact, *test::Abc()), rp);
  const Json approx = LotteryToJson(rp, *test::Abc(), JsonOptions{true, false});
  EXPECT_DOUBLE_EQ(approx["entries"][0]["approx"].get<double>(), 1.0 / 6);
  // The approximate field is ignored on input.
  EXPECT_EQ(LotteryFromJson(approx, *test::Abc()), rp);
}

TEST(LotteryJsonTest, RejectsFloatsAndBadSums) {
  EXPECT_THROW(LotteryFromJson(Json::parse(R"({"entries": [
      {"assignment": ["a", "b", "c"], "prob": 1.0}]})"),
                               *test::Abc()),
               ParseError);
  EXPECT_THROW(LotteryFromJson(Json::parse(R"({"entries": [
      {"assignment": ["a", "b", "c"], "prob": "1/2"}]})"),
                               *test::Abc()),
               InputError);
}

TEST(MarginalsTest, Csv) {
  const Lottery rp = RandomPriority(Prof("a,b,c;a,b,c;b,a,c"));
  EXPECT_EQ(MarginalsToCsv(Marginals(rp, 3, *test::Abc()), *test::Abc()),
            "agent,a,b,c\n"
            "0,1/2,1/6,1/3\n"
            "1,1/2,1/6,1/3\n"
            "2,0/1,2/3,1/3\n");
}

TEST(DomainSpecJsonTest, RoundTrip) {
  for (const auto& spec : {fixtures::Abc3Spec(), test::MultiCopy(),
                           test::Spec(3, test::Abc(), DomainTag::kFull,
                                      "identical-pair")}) {
    EXPECT_EQ(DomainSpecFromJson(DomainSpecToJson(spec)), spec);
  }
}

TEST(TableJsonTest, RoundTripAndCoverage) {
  const auto domain = std::make_shared<const Domain>(test::MultiCopy());
  const TableRule table =
      TableRule::Tabulate(domain, RuleHandle::RandomPriority().AsFunction());
  Json j = TableRuleToJson(table);
  EXPECT_EQ(j["format"], "rpcheck-table/1");
  EXPECT_EQ(TableRuleFromJson(j), table);

  Json missing = j;
  missing["entries"].erase(domain->profile(3).Encode());
  EXPECT_THROW(TableRuleFromJson(missing), InputError);

  Json extra = j;
  extra["entries"]["b,a,none;b,a,none;b,a,none;none,a,b"] =
      j["entries"][domain->profile(0).Encode()];
  EXPECT_THROW(TableRuleFromJson(extra), Error);

  Json wrong = j;
  wrong["format"] = "other";
  EXPECT_THROW(TableRuleFromJson(wrong), ParseError);
}

TEST(FilesTest, MalformedAndMissing) {
  const std::string path = TempPath("rpcheck_json_io_bad.json");
  WriteTextFile(path, "{not json");
  EXPECT_THROW(ReadJsonFile(path), ParseError);
  EXPECT_THROW(ReadTableRuleFile(path), ParseError);
  std::filesystem::remove(path);
  EXPECT_THROW(ReadJsonFile(TempPath("rpcheck_does_not_exist.json")),
               ParseError);
}

TEST(ReportJsonTest, ReproducibleModeDropsClockFields) {
  const CampaignReport report = VerifyTheorem1Forward(test::TwoByTwo());
  const Json timed = CampaignReportToJson(report);
  EXPECT_TRUE(timed.contains("runtime_ms"));
  EXPECT_TRUE(timed["meta"].contains("generated_at"));
  EXPECT_TRUE(timed["verdicts"][0].contains("runtime_ms"));
  const Json fixed = CampaignReportToJson(report, JsonOptions{false, true});
  EXPECT_FALSE(fixed.contains("runtime_ms"));
  EXPECT_FALSE(fixed.contains("meta"));
  EXPECT_FALSE(fixed["verdicts"][0].contains("runtime_ms"));
}

TEST(ReportJsonTest, WitnessUsesLabelsAndExactValues) {
  const CampaignReport report = VerifyTheorem1Forward(
      fixtures::Abc3Spec(), {}, RuleHandle::OspExample());
  const Json j = CampaignReportToJson(report, JsonOptions{false, true});
  const Json* mono = nullptr;
  for (const auto& v : j["verdicts"]) {
    if (v["axiom"] == "prob-mono") mono = &v;
  }
  ASSERT_NE(mono, nullptr);
  EXPECT_EQ((*mono)["witness"]["profile"], "a,b,c;a,b,c;a,b,c");
  EXPECT_EQ((*mono)["witness"]["profile_prime"], "a,c,b;a,b,c;a,b,c");
  EXPECT_EQ((*mono)["witness"]["mu"], Json({"a", "b", "c"}));
  EXPECT_EQ((*mono)["witness"]["value"], "1/1");
  EXPECT_EQ((*mono)["witness"]["value_prime"], "0/1");
}

}  // namespace
}  // namespace rpcheck
