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

#include <algorithm>
#include <chrono>
#include <memory>
#include <string>
#include <utility>

#include "rpcheck/errors.h"
#include "rpcheck/parallel.h"

namespace rpcheck {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

CheckOptions ToCheckOptions(const CampaignOptions& options) {
  CheckOptions check;
  check.workers = options.workers;
  check.max_pair_profiles = options.max_pair_profiles;
  return check;
}

std::shared_ptr<const Domain> MakeDomain(const DomainSpec& spec,
                                         const CampaignOptions& options) {
  return std::make_shared<const Domain>(spec, options.max_profiles);
}

CampaignReport StartReport(std::string campaign, const DomainSpec& spec,
                           const Domain& domain, std::string rule) {
  CampaignReport report;
  report.campaign = std::move(campaign);
  report.domain = spec;
  report.rule = std::move(rule);
  report.totals = CountTotals(domain);
  return report;
}

void Finish(CampaignReport& report, Clock::time_point start) {
  if (report.status == "pass" && !report.passed) report.status = "fail";
  report.runtime_ms = MillisSince(start);
}

}  // namespace

std::string_view EqualityLevelName(EqualityLevel level) {
  return level == EqualityLevel::kDistribution ? "distribution" : "welfare";
}

EqualityLevel ParseEqualityLevel(std::string_view name) {
  if (name == "distribution") return EqualityLevel::kDistribution;
  if (name == "welfare") return EqualityLevel::kWelfare;
  throw ParseError("unknown equality level '" + std::string(name) +
                   "' (expected distribution or welfare)");
}

CampaignTotals CountTotals(const Domain& domain) {
  CampaignTotals totals;
  totals.profiles = domain.size();
  totals.pairs = static_cast<std::uint64_t>(domain.size()) * domain.size();
  for (std::size_t r = 0; r < domain.size(); ++r) {
    for (AgentIndex i = 0; i < domain.agent_count(); ++i) {
      const int k = domain.pref_index(r, i);
      for (int k2 = 0; k2 < domain.pref_count(); ++k2) {
        if (k2 != k && domain.WithPreference(r, i, k2)) ++totals.deviations;
      }
    }
  }
  return totals;
}

CampaignReport VerifyTheorem1Forward(const DomainSpec& spec,
                                     const CampaignOptions& options,
                                     const std::optional<RuleHandle>& rule) {
  const auto start = Clock::now();
  const RuleHandle handle =
      rule ? *rule : RuleHandle::RandomPriority().WithLimits(options.limits);
  const auto domain = MakeDomain(spec, options);
  CampaignReport report =
      StartReport("theorem1", spec, *domain, handle.Describe());
  const Tabulation table = Tabulation::Build(handle, domain, options.workers);
  for (AxiomId axiom :
       {AxiomId::kExPostEfficiency, AxiomId::kEqualTreatment,
        AxiomId::kProbabilisticMonotonicity, AxiomId::kStrategyProofness,
        AxiomId::kWeakObjectNonbossiness, AxiomId::kPairwiseResponsiveness}) {
    report.verdicts.push_back(
        CheckRuleAxiom(axiom, table, ToCheckOptions(options)));
    report.passed = report.passed && report.verdicts.back().passed;
  }
  Finish(report, start);
  return report;
}

CampaignReport VerifyCorollary1(const RuleHandle& inner,
                                const DomainSpec& spec,
                                const CampaignOptions& options) {
  const auto start = Clock::now();
  const auto domain = MakeDomain(spec, options);
  CampaignReport report =
      StartReport("corollary1", spec, *domain, inner.Describe());
  const Tabulation table = Tabulation::Build(inner, domain, options.workers);

  bool deterministic = true;
  for (const auto& lottery : table.lotteries()) {
    deterministic = deterministic && lottery.IsDegenerate();
  }
  if (!deterministic) {
    report.passed = false;
    report.status = "precondition_failed";
    report.note = "inner rule is not deterministic; comparison skipped";
    Finish(report, start);
    return report;
  }
  const CheckOptions check = ToCheckOptions(options);
  report.verdicts.push_back(
      CheckRuleAxiom(AxiomId::kMaskinMonotonicity, table, check));
  report.verdicts.push_back(
      CheckRuleAxiom(AxiomId::kExPostEfficiency, table, check));
  for (const auto& verdict : report.verdicts) {
    if (!verdict.passed) {
      report.passed = false;
      report.status = "precondition_failed";
      report.note = std::string("inner rule fails ") +
                    std::string(AxiomName(verdict.axiom)) +
                    "; comparison skipped";
      Finish(report, start);
      return report;
    }
  }
  const RuleHandle symmetrized =
      RuleHandle::Symmetrized(inner).WithLimits(options.limits);
  const RuleHandle rp =
      RuleHandle::RandomPriority().WithLimits(options.limits);
  report.equivalences.push_back(CompareRules(
      symmetrized, rp, *domain, EqualityLevel::kDistribution, options.workers));
  report.passed = report.equivalences.back().equal;
  Finish(report, start);
  return report;
}

CampaignReport VerifyProp2(const RuleHandle& rule, const DomainSpec& spec,
                           const CampaignOptions& options) {
  const auto start = Clock::now();
  const auto domain = MakeDomain(spec, options);
  CampaignReport report = StartReport("prop2", spec, *domain, rule.Describe());
  const Tabulation table = Tabulation::Build(rule, domain, options.workers);
  const CheckOptions check = ToCheckOptions(options);
  const AxiomVerdict global =
      CheckRuleAxiom(AxiomId::kProbabilisticMonotonicity, table, check);
  bool local = true;
  report.verdicts.push_back(global);
  for (AxiomId part : {AxiomId::kAssignmentSwapMonotonicity,
                       AxiomId::kAssignmentUpperInvariance,
                       AxiomId::kAssignmentLowerInvariance}) {
    report.verdicts.push_back(CheckRuleAxiom(part, table, check));
    local = local && report.verdicts.back().passed;
  }
  report.passed = global.passed == local;
  report.note = std::string("global ") + (global.passed ? "pass" : "fail") +
                ", local " + (local ? "pass" : "fail");
  Finish(report, start);
  return report;
}

CampaignReport VerifySpDecomposition(const RuleHandle& rule,
                                     const DomainSpec& spec,
                                     const CampaignOptions& options) {
  const auto start = Clock::now();
  const auto domain = MakeDomain(spec, options);
  CampaignReport report =
      StartReport("sp-decomposition", spec, *domain, rule.Describe());
  const Tabulation table = Tabulation::Build(rule, domain, options.workers);
  const CheckOptions check = ToCheckOptions(options);
  const AxiomVerdict sp =
      CheckRuleAxiom(AxiomId::kStrategyProofness, table, check);
  report.verdicts.push_back(sp);
  bool parts = true;
  for (AxiomId part : {AxiomId::kSwapMonotonicity, AxiomId::kUpperInvariance,
                       AxiomId::kLowerInvariance}) {
    report.verdicts.push_back(CheckRuleAxiom(part, table, check));
    parts = parts && report.verdicts.back().passed;
  }
  report.passed = sp.passed == parts;
  report.note = std::string("sp ") + (sp.passed ? "pass" : "fail") +
                ", components " + (parts ? "pass" : "fail");
  Finish(report, start);
  return report;
}

EquivalenceResult CompareRules(const RuleHandle& a, const RuleHandle& b,
                               const Domain& domain, EqualityLevel level,
                               int workers) {
  EquivalenceResult result;
  result.left = a.Describe();
  result.right = b.Describe();
  result.level = level;
  // Per-chunk first mismatch; the earliest chunk with a mismatch wins.
  struct ChunkResult {
    std::uint64_t compared = 0;
    std::optional<std::size_t> mismatch;
    std::optional<Lottery> left;
    std::optional<Lottery> right;
  };
  const std::size_t chunks = std::max<std::size_t>(
      1, std::min<std::size_t>(domain.size(),
                               static_cast<std::size_t>(std::max(workers, 1))));
  std::vector<ChunkResult> parts(chunks);
  const int n = domain.agent_count();
  ForEachChunk(domain.size(), static_cast<int>(chunks),
               [&](std::size_t c, std::size_t begin, std::size_t end) {
                 ChunkResult& part = parts[c];
                 for (std::size_t r = begin; r < end; ++r) {
                   const Profile& profile = domain.profile(r);
                   Lottery p = a.Evaluate(profile);
                   Lottery q = b.Evaluate(profile);
                   ++part.compared;
                   const bool same =
                       level == EqualityLevel::kDistribution
                           ? p == q
                           : Marginals(p, n, domain.space()) ==
                                 Marginals(q, n, domain.space());
                   if (!same) {
                     part.mismatch = r;
                     part.left = std::move(p);
                     part.right = std::move(q);
                     return;
                   }
                 }
               });
  for (auto& part : parts) {
    result.compared += part.compared;
    if (part.mismatch) {
      result.equal = false;
      result.profile = domain.profile(*part.mismatch);
      if (level == EqualityLevel::kDistribution) {
        result.left_lottery = std::move(part.left);
        result.right_lottery = std::move(part.right);
      } else {
        result.left_marginals = Marginals(*part.left, n, domain.space());
        result.right_marginals = Marginals(*part.right, n, domain.space());
      }
      break;
    }
  }
  return result;
}

CampaignReport RulesEqual(const RuleHandle& a, const RuleHandle& b,
                          const DomainSpec& spec, EqualityLevel level,
                          const CampaignOptions& options) {
  const auto start = Clock::now();
  const auto domain = MakeDomain(spec, options);
  CampaignReport report = StartReport("equal", spec, *domain,
                                      a.Describe() + " vs " + b.Describe());
  report.equivalences.push_back(
      CompareRules(a, b, *domain, level, options.workers));
  report.passed = report.equivalences.back().equal;
  Finish(report, start);
  return report;
}

}  // namespace rpcheck
