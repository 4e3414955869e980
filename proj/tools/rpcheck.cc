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

// rpcheck command-line front end.
//
// Exit codes: 0 all assertions hold, 1 a violation or mismatch was found,
// 2 invalid input or a resource guard refused the request.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rpcheck/axioms.h"
#include "rpcheck/campaign.h"
#include "rpcheck/domain.h"
#include "rpcheck/errors.h"
#include "rpcheck/fixture_rules.h"
#include "rpcheck/json_io.h"
#include "rpcheck/oracle.h"
#include "rpcheck/rule.h"
#include "rpcheck/search.h"

namespace rpcheck {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct DomainArgs {
  int agents = 3;
  std::vector<std::string> objects{"a", "b", "c"};
  std::vector<int> quotas;
  std::optional<std::string> null_label;
  std::string domain;
  std::string filter;
  std::size_t max_profiles = Domain::kDefaultMaxProfiles;
};

struct CommonArgs {
  std::string out;
  int workers = 1;
  bool decimal = false;
  bool reproducible = false;
  std::size_t max_pair_profiles = 1000;
  int max_agents = RpLimits{}.max_agents;
};

void AddDomainOptions(CLI::App* cmd, DomainArgs& args) {
  cmd->add_option("--agents", args.agents, "Number of agents")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--objects", args.objects, "Object labels")
      ->delimiter(',');
  cmd->add_option("--quotas", args.quotas, "Copies per object (default 1)")
      ->delimiter(',');
  cmd->add_option("--null", args.null_label,
                  "Add a null object with one copy per agent")
      ->expected(0, 1)
      ->default_str("none");
  cmd->add_option("--domain", args.domain,
                  "full or null_last (default null_last with --null)");
  cmd->add_option("--filter", args.filter,
                  "Profile filter: identical-pair");
  cmd->add_option("--max-profiles", args.max_profiles,
                  "Refuse larger domains");
}

void AddCommonOptions(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--out", args.out,
                  "Output file (relative paths resolve against "
                  "RPCHECK_OUT_DIR when set; default stdout)");
  cmd->add_option("--workers", args.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--decimal", args.decimal,
                "Add approximate floats next to exact values");
  cmd->add_flag("--reproducible", args.reproducible,
                "Omit timing fields so output compares byte for byte");
  cmd->add_option("--max-pair-profiles", args.max_pair_profiles,
                  "Largest domain for pairwise scans");
  cmd->add_option("--max-agents", args.max_agents,
                  "Factorial guard for random priority and symmetrization");
}

std::shared_ptr<const ObjectSpace> BuildSpace(const DomainArgs& args) {
  std::vector<std::string> labels = args.objects;
  std::vector<int> quotas = args.quotas;
  if (quotas.empty()) quotas.assign(labels.size(), 1);
  if (quotas.size() != labels.size()) {
    throw InputError("--quotas needs one value per object");
  }
  std::optional<ObjectIndex> null_index;
  if (args.null_label) {
    const std::string label =
        args.null_label->empty() ? std::string("none") : *args.null_label;
    labels.push_back(label);
    quotas.push_back(args.agents);
    null_index = static_cast<ObjectIndex>(labels.size() - 1);
  }
  auto space = std::make_shared<const ObjectSpace>(labels, quotas, null_index);
  space->ValidateFor(args.agents);
  return space;
}

DomainSpec BuildSpec(const DomainArgs& args) {
  DomainSpec spec;
  spec.agent_count = args.agents;
  spec.space = BuildSpace(args);
  spec.tag = args.domain.empty()
                 ? (args.null_label ? DomainTag::kNullLast : DomainTag::kFull)
                 : ParseDomainTag(args.domain);
  spec.filter = args.filter;
  return spec;
}

CampaignOptions ToCampaignOptions(const CommonArgs& common,
                                  const DomainArgs& domain) {
  CampaignOptions options;
  options.workers = common.workers;
  options.max_pair_profiles = common.max_pair_profiles;
  options.max_profiles = domain.max_profiles;
  options.limits.max_agents = common.max_agents;
  return options;
}

JsonOptions ToJsonOptions(const CommonArgs& common) {
  return JsonOptions{common.decimal, common.reproducible};
}

std::string ResolveOut(const std::string& out) {
  if (out.empty()) return out;
  std::filesystem::path path(out);
  if (const char* dir = std::getenv("RPCHECK_OUT_DIR");
      dir != nullptr && *dir != '\0' && path.is_relative()) {
    path = std::filesystem::path(dir) / path;
  }
  return path.string();
}

void Emit(const std::string& out, const std::string& text) {
  const std::string path = ResolveOut(out);
  if (path.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(path, text);
  }
}

RuleHandle ParseRule(const std::string& spec, const ObjectSpace& space,
                     const CommonArgs& common) {
  RpLimits limits;
  limits.max_agents = common.max_agents;
  return ParseRuleSpec(spec, space)
      .WithLimits(limits)
      .WithCache(CachePolicy::kNone);
}

std::vector<std::string> SplitOn(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// "a,b,c;b,a,c" -> profile over `space`.
Profile ParsePrefs(const std::string& text,
                   std::shared_ptr<const ObjectSpace> space, DomainTag tag) {
  std::vector<Preference> prefs;
  for (const auto& agent : SplitOn(text, ';')) {
    std::vector<ObjectIndex> ranking;
    for (const auto& label : SplitOn(agent, ',')) {
      ranking.push_back(space->IndexOf(label));
    }
    prefs.emplace_back(std::move(ranking));
  }
  return Profile(std::move(space), std::move(prefs), tag);
}

// --- gen ---------------------------------------------------------------

int RunGen(const DomainArgs& dargs, const CommonArgs& common) {
  const Domain domain(BuildSpec(dargs), dargs.max_profiles);
  std::string text;
  for (const auto& profile : domain.profiles()) {
    text += ProfileToJson(profile).dump() + "\n";
  }
  Emit(common.out, text);
  return kExitOk;
}

// --- eval --------------------------------------------------------------

struct EvalArgs {
  std::string rule = "rp";
  std::string profile_file;
  std::string prefs;
  bool marginals = false;
  std::string marginals_csv;
};

int RunEval(const EvalArgs& args, const DomainArgs& dargs,
            const CommonArgs& common) {
  std::optional<Profile> profile;
  if (!args.profile_file.empty()) {
    profile = ProfileFromJson(ReadJsonFile(args.profile_file));
  } else if (!args.prefs.empty()) {
    const DomainSpec spec = BuildSpec(dargs);
    profile = ParsePrefs(args.prefs, spec.space, spec.tag);
  } else {
    throw InputError("eval needs --profile FILE or --prefs RANKINGS");
  }
  const RuleHandle rule = ParseRule(args.rule, profile->space(), common);
  const Lottery lottery = rule.Evaluate(*profile);
  Json j;
  j["rule"] = rule.Describe();
  j["profile"] = profile->Encode();
  j["lottery"] = LotteryToJson(lottery, profile->space(), ToJsonOptions(common));
  const MarginalMatrix marginals =
      Marginals(lottery, profile->agent_count(), profile->space());
  if (args.marginals) {
    j["marginals"] =
        MarginalsToJson(marginals, profile->space(), ToJsonOptions(common));
  }
  if (!args.marginals_csv.empty()) {
    WriteTextFile(ResolveOut(args.marginals_csv),
                  MarginalsToCsv(marginals, profile->space()));
  }
  Emit(common.out, DumpJson(j));
  return kExitOk;
}

// --- check -------------------------------------------------------------

struct CheckArgs {
  std::string rule = "rp";
  std::vector<std::string> axioms;
};

int RunCheck(const CheckArgs& args, const DomainArgs& dargs,
             const CommonArgs& common) {
  const DomainSpec spec = BuildSpec(dargs);
  const auto domain = std::make_shared<const Domain>(spec, dargs.max_profiles);
  const RuleHandle rule = ParseRule(args.rule, *spec.space, common);
  std::vector<AxiomId> axioms;
  for (const auto& name : args.axioms) axioms.push_back(ParseAxiomId(name));
  CheckOptions options;
  options.workers = common.workers;
  options.max_pair_profiles = common.max_pair_profiles;
  const Tabulation table = Tabulation::Build(rule, domain, common.workers);
  if (axioms.empty()) {
    // Maskin monotonicity only applies to deterministic rules.
    const bool deterministic =
        std::all_of(table.lotteries().begin(), table.lotteries().end(),
                    [](const Lottery& l) { return l.IsDegenerate(); });
    for (AxiomId axiom : AllRuleAxioms()) {
      if (deterministic || axiom != AxiomId::kMaskinMonotonicity) {
        axioms.push_back(axiom);
      }
    }
  }
  Json verdicts = Json::array();
  bool all_passed = true;
  for (AxiomId axiom : axioms) {
    const AxiomVerdict verdict = CheckRuleAxiom(axiom, table, options);
    all_passed = all_passed && verdict.passed;
    verdicts.push_back(
        VerdictToJson(verdict, *spec.space, ToJsonOptions(common)));
  }
  Json j;
  j["rule"] = rule.Describe();
  j["domain"] = DomainSpecToJson(spec);
  j["passed"] = all_passed;
  j["verdicts"] = std::move(verdicts);
  Emit(common.out, DumpJson(j));
  return all_passed ? kExitOk : kExitViolation;
}

// --- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string campaign;
  std::string rule = "rp";
  std::string inner = "sd:0,1,2";
  std::string other = "core-re";
  std::string level = "distribution";
};

int RunVerify(const VerifyArgs& args, const DomainArgs& dargs,
              const CommonArgs& common) {
  const DomainSpec spec = BuildSpec(dargs);
  const CampaignOptions options = ToCampaignOptions(common, dargs);
  CampaignReport report;
  if (args.campaign == "theorem1") {
    report = VerifyTheorem1Forward(spec, options,
                                   ParseRule(args.rule, *spec.space, common));
  } else if (args.campaign == "corollary1") {
    report = VerifyCorollary1(ParseRule(args.inner, *spec.space, common), spec,
                              options);
  } else if (args.campaign == "prop2") {
    report =
        VerifyProp2(ParseRule(args.rule, *spec.space, common), spec, options);
  } else if (args.campaign == "sp-decomposition") {
    report = VerifySpDecomposition(ParseRule(args.rule, *spec.space, common),
                                   spec, options);
  } else if (args.campaign == "equal") {
    report = RulesEqual(ParseRule(args.rule, *spec.space, common),
                        ParseRule(args.other, *spec.space, common), spec,
                        ParseEqualityLevel(args.level), options);
  } else {
    throw InputError("unknown campaign '" + args.campaign +
                     "' (theorem1, corollary1, prop2, sp-decomposition, "
                     "equal)");
  }
  Emit(common.out, DumpJson(CampaignReportToJson(report, ToJsonOptions(common))));
  return report.passed ? kExitOk : kExitViolation;
}

// --- search ------------------------------------------------------------

struct SearchArgs {
  std::vector<std::string> satisfy{"ete", "expost-eff"};
  std::string violate = "prob-mono";
  std::uint64_t budget = 200;
  std::uint64_t seed = 1;
  std::string rule_out;
};

int RunSearch(const SearchArgs& args, const DomainArgs& dargs,
              const CommonArgs& common) {
  SearchRequest request;
  for (const auto& name : args.satisfy) {
    request.satisfy.push_back(ParseAxiomId(name));
  }
  request.violate = ParseAxiomId(args.violate);
  request.domain = BuildSpec(dargs);
  request.budget = args.budget;
  request.seed = args.seed;
  request.options = ToCampaignOptions(common, dargs);
  const SearchResult result = SearchCounterexample(request);
  if (result.rule && !args.rule_out.empty()) {
    WriteTextFile(ResolveOut(args.rule_out),
                  DumpJson(TableRuleToJson(*result.rule)));
  }
  Emit(common.out,
       DumpJson(CampaignReportToJson(result.report, ToJsonOptions(common))));
  return result.report.passed ? kExitOk : kExitViolation;
}

// --- fixtures ----------------------------------------------------------

struct FixtureFile {
  std::string relative_path;
  std::string content;
};

DomainSpec MakeSpec(int agents, std::vector<std::string> labels,
                    std::vector<int> quotas, bool with_null) {
  DomainArgs args;
  args.agents = agents;
  args.objects = std::move(labels);
  args.quotas = std::move(quotas);
  if (with_null) args.null_label = "none";
  return BuildSpec(args);
}

std::vector<FixtureFile> BuildFixtureFiles(bool include_search) {
  std::vector<FixtureFile> files;
  const std::vector<std::pair<std::string, DomainSpec>> oracle_domains = {
      {"oracle/oracle_2x2.json", MakeSpec(2, {"a", "b"}, {}, false)},
      {"oracle/oracle_3x3.json", MakeSpec(3, {"a", "b", "c"}, {}, false)},
      {"oracle/oracle_multicopy.json", MakeSpec(4, {"a", "b"}, {2, 1}, true)},
  };
  for (const auto& [path, spec] : oracle_domains) {
    const Domain domain(spec);
    files.push_back({path, DumpJson(OracleRecordsToJson(
                               oracle::ComputeOracleRecords(domain), spec))});
  }
  for (const auto& fixture : fixtures::AllFixtureRules()) {
    Json j = TableRuleToJson(fixture.rule);
    j["recipe"] = fixture.recipe;
    files.push_back({"rules/" + fixture.name + ".json", DumpJson(j)});
  }
  if (include_search) {
    struct FrozenSearch {
      std::string name;
      std::vector<AxiomId> satisfy;
      AxiomId violate;
      std::uint64_t seed;
    };
    const std::vector<FrozenSearch> runs = {
        {"search/ete_expost_vs_prob_mono_seed1.json",
         {AxiomId::kEqualTreatment, AxiomId::kExPostEfficiency},
         AxiomId::kProbabilisticMonotonicity,
         1},
        {"search/sp_vs_weak_ownb_seed7.json",
         {AxiomId::kEqualTreatment, AxiomId::kExPostEfficiency,
          AxiomId::kStrategyProofness},
         AxiomId::kWeakObjectNonbossiness,
         7},
    };
    for (const auto& run : runs) {
      SearchRequest request;
      request.satisfy = run.satisfy;
      request.violate = run.violate;
      request.domain = fixtures::Abc3Spec();
      request.budget = 200;
      request.seed = run.seed;
      const SearchResult result = SearchCounterexample(request);
      files.push_back({run.name, DumpJson(CampaignReportToJson(
                                     result.report, JsonOptions{false, true}))});
    }
  }
  return files;
}

struct FixturesArgs {
  std::string dir = "tests/fixtures";
  bool skip_search = false;
};

int RunFixtures(bool regenerate, const FixturesArgs& args) {
  const auto files = BuildFixtureFiles(!args.skip_search);
  int mismatches = 0;
  for (const auto& file : files) {
    const std::filesystem::path path =
        std::filesystem::path(args.dir) / file.relative_path;
    if (regenerate) {
      std::filesystem::create_directories(path.parent_path());
      WriteTextFile(path.string(), file.content);
      std::cerr << "wrote " << path.string() << "\n";
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream existing;
    existing << in.rdbuf();
    if (!in || existing.str() != file.content) {
      std::cerr << "mismatch: " << path.string() << "\n";
      ++mismatches;
    } else {
      std::cerr << "ok: " << path.string() << "\n";
    }
  }
  return mismatches == 0 ? kExitOk : kExitViolation;
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact checks of random assignment rules"};
  app.require_subcommand(1);

  DomainArgs dargs;
  CommonArgs common;

  auto* gen = app.add_subcommand("gen", "Write the canonical profiles of a "
                                        "domain as JSON lines");
  AddDomainOptions(gen, dargs);
  AddCommonOptions(gen, common);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate a rule at one profile");
  AddDomainOptions(eval, dargs);
  AddCommonOptions(eval, common);
  eval->add_option("--rule", eval_args.rule, "Rule spec");
  eval->add_option("--profile", eval_args.profile_file, "Profile JSON file");
  eval->add_option("--prefs", eval_args.prefs,
                   "Rankings such as 'a,b,c;a,b,c;b,a,c'");
  eval->add_flag("--marginals", eval_args.marginals,
                 "Include the marginal matrix");
  eval->add_option("--marginals-csv", eval_args.marginals_csv,
                   "Write the marginal matrix as CSV");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check axioms over a domain");
  AddDomainOptions(check, dargs);
  AddCommonOptions(check, common);
  check->add_option("--rule", check_args.rule, "Rule spec");
  check->add_option("--axiom", check_args.axioms,
                    "Axiom ids (default: all rule axioms)")
      ->delimiter(',');

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  AddDomainOptions(verify, dargs);
  AddCommonOptions(verify, common);
  verify
      ->add_option("--campaign", verify_args.campaign,
                   "theorem1, corollary1, prop2, sp-decomposition or equal")
      ->required();
  verify->add_option("--rule", verify_args.rule, "Rule under test");
  verify->add_option("--inner", verify_args.inner,
                     "Deterministic rule for corollary1");
  verify->add_option("--other", verify_args.other,
                     "Second rule for the equal campaign");
  verify->add_option("--level", verify_args.level, "distribution or welfare");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Search for a counterexample "
                                              "table rule");
  AddDomainOptions(search, dargs);
  AddCommonOptions(search, common);
  search->add_option("--satisfy", search_args.satisfy, "Axioms to keep")
      ->delimiter(',');
  search->add_option("--violate", search_args.violate, "Axiom to break");
  search->add_option("--budget", search_args.budget, "Proposed moves");
  search->add_option("--seed", search_args.seed, "Random seed");
  search->add_option("--rule-out", search_args.rule_out,
                     "Write the found table rule here");

  FixturesArgs fixtures_args;
  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "Regenerate or compare frozen fixtures");
  fixtures_cmd->require_subcommand(1);
  auto* regenerate = fixtures_cmd->add_subcommand("regenerate", "Rewrite");
  auto* compare = fixtures_cmd->add_subcommand("compare", "Compare");
  for (auto* sub : {regenerate, compare}) {
    sub->add_option("--dir", fixtures_args.dir, "Fixture directory");
    sub->add_flag("--skip-search", fixtures_args.skip_search,
                  "Leave out the frozen search run");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) return RunGen(dargs, common);
    if (*eval) return RunEval(eval_args, dargs, common);
    if (*check) return RunCheck(check_args, dargs, common);
    if (*verify) return RunVerify(verify_args, dargs, common);
    if (*search) return RunSearch(search_args, dargs, common);
    if (*regenerate) return RunFixtures(true, fixtures_args);
    if (*compare) return RunFixtures(false, fixtures_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace
}  // namespace rpcheck

int main(int argc, char** argv) { return rpcheck::Main(argc, argv); }
