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

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>

#include "rpcheck/errors.h"

namespace rpcheck {
namespace {

constexpr const char* kTableFormat = "rpcheck-table/1";

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T As(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + what + "' has the wrong type");
  }
}

Json RationalToJson(const Rational& value) { return value.ToString(); }

Rational RationalFromJson(const Json& j) {
  if (!j.is_string()) {
    throw ParseError("probabilities must be \"num/den\" strings");
  }
  try {
    return Rational::Parse(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

void AddApprox(Json& j, const Rational& value, const JsonOptions& options) {
  if (options.decimal) j["approx"] = value.ToDouble();
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

Json ObjectSpaceToJson(const ObjectSpace& space) {
  Json j;
  j["objects"] = space.labels();
  j["quotas"] = space.quotas();
  if (space.null_index()) j["null"] = space.label(*space.null_index());
  return j;
}

std::shared_ptr<const ObjectSpace> ObjectSpaceFromJson(const Json& j,
                                                       int agent_count) {
  auto labels = As<std::vector<std::string>>(Field(j, "objects"), "objects");
  std::vector<int> quotas(labels.size(), 1);
  if (j.contains("quotas")) {
    quotas = As<std::vector<int>>(j.at("quotas"), "quotas");
    if (quotas.size() != labels.size()) {
      throw ParseError("'quotas' and 'objects' differ in length");
    }
  }
  std::optional<ObjectIndex> null_index;
  if (j.contains("null") && !j.at("null").is_null()) {
    const auto null_label = As<std::string>(j.at("null"), "null");
    auto it = std::find(labels.begin(), labels.end(), null_label);
    if (it == labels.end()) {
      labels.push_back(null_label);
      quotas.push_back(agent_count);
      null_index = static_cast<ObjectIndex>(labels.size() - 1);
    } else {
      null_index = static_cast<ObjectIndex>(it - labels.begin());
    }
  }
  return std::make_shared<const ObjectSpace>(std::move(labels),
                                             std::move(quotas), null_index);
}

Json ProfileToJson(const Profile& profile) {
  Json j = ObjectSpaceToJson(profile.space());
  j["domain"] = std::string(DomainTagName(profile.domain_tag()));
  Json agents = Json::array();
  for (const auto& pref : profile.preferences()) {
    Json ranking = Json::array();
    for (ObjectIndex x : pref.ranking()) ranking.push_back(profile.space().label(x));
    agents.push_back(std::move(ranking));
  }
  j["agents"] = std::move(agents);
  return j;
}

Profile ProfileFromJson(const Json& j) {
  const Json& agents = Field(j, "agents");
  if (!agents.is_array() || agents.empty()) {
    throw ParseError("'agents' must be a non-empty list of rankings");
  }
  const int n = static_cast<int>(agents.size());
  auto space = ObjectSpaceFromJson(j, n);
  const DomainTag tag =
      j.contains("domain")
          ? ParseDomainTag(As<std::string>(j.at("domain"), "domain"))
          : DomainTag::kFull;
  std::vector<Preference> prefs;
  for (const auto& ranking : agents) {
    std::vector<ObjectIndex> order;
    for (const auto& label : As<std::vector<std::string>>(ranking, "agents")) {
      order.push_back(space->IndexOf(label));
    }
    prefs.emplace_back(std::move(order));
  }
  space->ValidateFor(n);
  return Profile(std::move(space), std::move(prefs), tag);
}

Json AssignmentToJson(const Assignment& mu, const ObjectSpace& space) {
  Json j = Json::array();
  for (ObjectIndex x : mu.assigned()) j.push_back(space.label(x));
  return j;
}

Assignment AssignmentFromJson(const Json& j, const ObjectSpace& space) {
  std::vector<ObjectIndex> assigned;
  for (const auto& label : As<std::vector<std::string>>(j, "assignment")) {
    assigned.push_back(space.IndexOf(label));
  }
  return Assignment(std::move(assigned));
}

Json LotteryToJson(const Lottery& lottery, const ObjectSpace& space,
                   const JsonOptions& options) {
  Json entries = Json::array();
  for (const auto& [mu, w] : lottery.entries()) {
    Json e;
    e["assignment"] = AssignmentToJson(mu, space);
    e["prob"] = RationalToJson(w);
    AddApprox(e, w, options);
    entries.push_back(std::move(e));
  }
  Json j;
  j["entries"] = std::move(entries);
  return j;
}

Lottery LotteryFromJson(const Json& j, const ObjectSpace& space) {
  const Json& entries = Field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be a list");
  std::vector<Lottery::Entry> out;
  for (const auto& e : entries) {
    out.emplace_back(AssignmentFromJson(Field(e, "assignment"), space),
                     RationalFromJson(Field(e, "prob")));
  }
  return Lottery(std::move(out));
}

Json MarginalsToJson(const MarginalMatrix& m, const ObjectSpace& space,
                     const JsonOptions& options) {
  Json j;
  j["objects"] = space.labels();
  Json rows = Json::array();
  Json approx = Json::array();
  for (AgentIndex i = 0; i < m.agent_count(); ++i) {
    Json row = Json::array();
    Json approx_row = Json::array();
    for (ObjectIndex x = 0; x < m.object_count(); ++x) {
      row.push_back(RationalToJson(m.at(i, x)));
      approx_row.push_back(m.at(i, x).ToDouble());
    }
    rows.push_back(std::move(row));
    approx.push_back(std::move(approx_row));
  }
  j["rows"] = std::move(rows);
  if (options.decimal) j["approx"] = std::move(approx);
  return j;
}

std::string MarginalsToCsv(const MarginalMatrix& m, const ObjectSpace& space) {
  std::ostringstream out;
  out << "agent";
  for (const auto& label : space.labels()) out << ',' << label;
  out << '\n';
  for (AgentIndex i = 0; i < m.agent_count(); ++i) {
    out << i;
    for (ObjectIndex x = 0; x < m.object_count(); ++x) {
      out << ',' << m.at(i, x).ToString();
    }
    out << '\n';
  }
  return out.str();
}

Json DomainSpecToJson(const DomainSpec& spec) {
  Json j;
  j["agents"] = spec.agent_count;
  Json space = ObjectSpaceToJson(*spec.space);
  for (auto& [key, value] : space.items()) j[key] = value;
  j["domain"] = std::string(DomainTagName(spec.tag));
  j["filter"] = spec.filter;
  return j;
}

DomainSpec DomainSpecFromJson(const Json& j) {
  DomainSpec spec;
  spec.agent_count = As<int>(Field(j, "agents"), "agents");
  if (spec.agent_count <= 0) throw ParseError("'agents' must be positive");
  spec.space = ObjectSpaceFromJson(j, spec.agent_count);
  spec.tag = j.contains("domain")
                 ? ParseDomainTag(As<std::string>(j.at("domain"), "domain"))
                 : DomainTag::kFull;
  if (j.contains("filter")) spec.filter = As<std::string>(j.at("filter"), "filter");
  return spec;
}

Json TableRuleToJson(const TableRule& table) {
  Json j;
  j["format"] = kTableFormat;
  j["domain"] = DomainSpecToJson(table.domain().spec());
  Json entries = Json::object();
  const Domain& domain = table.domain();
  for (std::size_t r = 0; r < domain.size(); ++r) {
    entries[domain.profile(r).Encode()] =
        LotteryToJson(table.at(r), domain.space());
  }
  j["entries"] = std::move(entries);
  return j;
}

TableRule TableRuleFromJson(const Json& j) {
  if (j.contains("format") &&
      As<std::string>(j.at("format"), "format") != kTableFormat) {
    throw ParseError("unsupported table format");
  }
  auto domain = std::make_shared<const Domain>(
      DomainSpecFromJson(Field(j, "domain")));
  const Json& entries = Field(j, "entries");
  if (!entries.is_object()) {
    throw ParseError("'entries' must map profile encodings to lotteries");
  }
  std::vector<Lottery> lotteries;
  lotteries.reserve(domain->size());
  for (const auto& profile : domain->profiles()) {
    const std::string key = profile.Encode();
    if (!entries.contains(key)) {
      throw InputError("table does not cover profile " + key);
    }
    lotteries.push_back(LotteryFromJson(entries.at(key), domain->space()));
  }
  if (entries.size() != domain->size()) {
    throw InputError("table lists profiles outside its declared domain");
  }
  return TableRule(std::move(domain), std::move(lotteries));
}

TableRule ReadTableRuleFile(const std::string& path) {
  return TableRuleFromJson(ReadJsonFile(path));
}

Json WitnessToJson(const Witness& w, const ObjectSpace& space) {
  Json j = Json::object();
  if (w.profile) j["profile"] = w.profile->Encode();
  if (w.profile_prime) j["profile_prime"] = w.profile_prime->Encode();
  if (w.agent) j["agent"] = *w.agent;
  if (w.other_agent) j["other_agent"] = *w.other_agent;
  if (w.swap) {
    j["swap"] = Json::array({space.label(w.swap->first),
                             space.label(w.swap->second)});
  }
  if (w.mu) j["mu"] = AssignmentToJson(*w.mu, space);
  if (w.mu_prime) j["mu_prime"] = AssignmentToJson(*w.mu_prime, space);
  if (w.object) j["object"] = space.label(*w.object);
  if (w.value) j["value"] = RationalToJson(*w.value);
  if (w.value_prime) j["value_prime"] = RationalToJson(*w.value_prime);
  if (!w.component.empty()) j["component"] = w.component;
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

Json VerdictToJson(const AxiomVerdict& verdict, const ObjectSpace& space,
                   const JsonOptions& options) {
  Json j;
  j["axiom"] = std::string(AxiomName(verdict.axiom));
  j["passed"] = verdict.passed;
  j["checked"] = verdict.checked;
  j["witness"] =
      verdict.witness ? WitnessToJson(*verdict.witness, space) : Json(nullptr);
  if (!options.reproducible) j["runtime_ms"] = verdict.runtime_ms;
  return j;
}

Json EquivalenceToJson(const EquivalenceResult& result,
                       const ObjectSpace& space, const JsonOptions& options) {
  Json j;
  j["left"] = result.left;
  j["right"] = result.right;
  j["level"] = std::string(EqualityLevelName(result.level));
  j["equal"] = result.equal;
  j["compared"] = result.compared;
  if (!result.equal) {
    Json w;
    if (result.profile) w["profile"] = result.profile->Encode();
    if (result.left_lottery) {
      w["left"] = LotteryToJson(*result.left_lottery, space, options);
    }
    if (result.right_lottery) {
      w["right"] = LotteryToJson(*result.right_lottery, space, options);
    }
    if (result.left_marginals) {
      w["left"] = MarginalsToJson(*result.left_marginals, space, options);
    }
    if (result.right_marginals) {
      w["right"] = MarginalsToJson(*result.right_marginals, space, options);
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json CampaignReportToJson(const CampaignReport& report,
                          const JsonOptions& options) {
  const ObjectSpace& space = *report.domain.space;
  Json j;
  j["campaign"] = report.campaign;
  j["status"] = report.status;
  j["passed"] = report.passed;
  j["rule"] = report.rule;
  j["domain"] = DomainSpecToJson(report.domain);
  j["totals"] = {{"profiles", report.totals.profiles},
                 {"pairs", report.totals.pairs},
                 {"deviations", report.totals.deviations}};
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back(VerdictToJson(v, space, options));
  }
  j["verdicts"] = std::move(verdicts);
  Json equivalences = Json::array();
  for (const auto& e : report.equivalences) {
    equivalences.push_back(EquivalenceToJson(e, space, options));
  }
  j["equivalences"] = std::move(equivalences);
  if (report.search) {
    const SearchSummary& s = *report.search;
    Json satisfy = Json::array();
    for (AxiomId id : s.satisfy) satisfy.push_back(std::string(AxiomName(id)));
    j["search"] = {{"seed", s.seed},
                   {"budget", s.budget},
                   {"steps", s.steps},
                   {"accepted", s.accepted},
                   {"found", s.found},
                   {"satisfy", satisfy},
                   {"violate", std::string(AxiomName(s.violate))},
                   {"revalidated", s.revalidated}};
  }
  j["note"] = report.note;
  if (!options.reproducible) {
    j["runtime_ms"] = report.runtime_ms;
    j["meta"] = {{"generated_at", UtcTimestamp()}};
  }
  return j;
}

Json ParetoSetToJson(const oracle::ParetoSet& set, const ObjectSpace& space) {
  Json list = Json::array();
  for (const auto& mu : set.assignments) {
    list.push_back(AssignmentToJson(mu, space));
  }
  return list;
}

Json OracleRecordsToJson(const std::vector<oracle::OracleRecord>& records,
                         const DomainSpec& spec) {
  Json j;
  j["domain"] = DomainSpecToJson(spec);
  Json list = Json::array();
  for (const auto& record : records) {
    Json e;
    e["profile"] = record.profile.Encode();
    e["pareto_set"] = ParetoSetToJson(record.pareto, record.profile.space());
    e["rp"] = LotteryToJson(record.rp, record.profile.space());
    list.push_back(std::move(e));
  }
  j["records"] = std::move(list);
  return j;
}

std::string DumpJson(const Json& j) { return j.dump(2) + "\n"; }

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace rpcheck
