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

// JSON and CSV formats. Probabilities are always "num/den" strings; the
// optional "approx" floats are for reading only.
//
//   profile   {"objects": [..], "quotas": [..], "null": label?,
//              "domain": "full" | "null_last", "agents": [[labels], ..]}
//   lottery   {"entries": [{"assignment": [labels], "prob": "1/6"}, ..]}
//   domain    {"agents": n, "objects": [..], "quotas": [..], "null": label?,
//              "domain": tag, "filter": ""}
//   table     {"format": "rpcheck-table/1", "domain": {..},
//              "entries": {"<profile encoding>": <lottery>, ..}}
//   verdict   {"axiom", "passed", "checked", "witness": {..} | null,
//              "runtime_ms"}
//   report    see docs/schemas/campaign_report.schema.json
//
// Reproducible mode drops every wall-clock field so that reports compare
// byte for byte.

#ifndef RPCHECK_JSON_IO_H_
#define RPCHECK_JSON_IO_H_

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "rpcheck/axioms.h"
#include "rpcheck/campaign.h"
#include "rpcheck/domain.h"
#include "rpcheck/model.h"
#include "rpcheck/oracle.h"
#include "rpcheck/rule.h"

namespace rpcheck {

using Json = nlohmann::ordered_json;

struct JsonOptions {
  bool decimal = false;       // add "approx" floats next to exact values
  bool reproducible = false;  // omit runtime fields
};

Json ObjectSpaceToJson(const ObjectSpace& space);
// Reads "objects", "quotas" (default all 1) and "null" from `j`. The null
// object is appended with quota `agent_count` if it is not listed.
std::shared_ptr<const ObjectSpace> ObjectSpaceFromJson(const Json& j,
                                                       int agent_count);

Json ProfileToJson(const Profile& profile);
Profile ProfileFromJson(const Json& j);

Json AssignmentToJson(const Assignment& mu, const ObjectSpace& space);
Assignment AssignmentFromJson(const Json& j, const ObjectSpace& space);

Json LotteryToJson(const Lottery& lottery, const ObjectSpace& space,
                   const JsonOptions& options = {});
Lottery LotteryFromJson(const Json& j, const ObjectSpace& space);

Json MarginalsToJson(const MarginalMatrix& m, const ObjectSpace& space,
                     const JsonOptions& options = {});
// Header "agent,<label>,..", one row per agent, exact values.
std::string MarginalsToCsv(const MarginalMatrix& m, const ObjectSpace& space);

Json DomainSpecToJson(const DomainSpec& spec);
DomainSpec DomainSpecFromJson(const Json& j);

Json TableRuleToJson(const TableRule& table);
TableRule TableRuleFromJson(const Json& j);
// Throws ParseError for malformed files and InputError when the entries do
// not cover the declared domain exactly.
TableRule ReadTableRuleFile(const std::string& path);

Json WitnessToJson(const Witness& witness, const ObjectSpace& space);
Json VerdictToJson(const AxiomVerdict& verdict, const ObjectSpace& space,
                   const JsonOptions& options = {});
Json EquivalenceToJson(const EquivalenceResult& result,
                       const ObjectSpace& space,
                       const JsonOptions& options = {});
Json CampaignReportToJson(const CampaignReport& report,
                          const JsonOptions& options = {});

Json ParetoSetToJson(const oracle::ParetoSet& set, const ObjectSpace& space);
Json OracleRecordsToJson(const std::vector<oracle::OracleRecord>& records,
                         const DomainSpec& spec);

// Two-space indentation plus a trailing newline.
std::string DumpJson(const Json& j);
Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace rpcheck

#endif  // RPCHECK_JSON_IO_H_
