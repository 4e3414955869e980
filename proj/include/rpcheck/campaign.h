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

// Exhaustive verification campaigns over a finite domain.

#ifndef RPCHECK_CAMPAIGN_H_
#define RPCHECK_CAMPAIGN_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpcheck/axioms.h"
#include "rpcheck/domain.h"
#include "rpcheck/rule.h"

namespace rpcheck {

enum class EqualityLevel { kDistribution, kWelfare };

std::string_view EqualityLevelName(EqualityLevel level);  // "distribution"
EqualityLevel ParseEqualityLevel(std::string_view name);

// Exact comparison of two rules over a domain.
struct EquivalenceResult {
  std::string left;   // rule descriptions
  std::string right;
  EqualityLevel level = EqualityLevel::kDistribution;
  bool equal = true;
  std::uint64_t compared = 0;  // profiles compared
  // First mismatching profile with both sides.
  std::optional<Profile> profile;
  std::optional<Lottery> left_lottery;
  std::optional<Lottery> right_lottery;
  std::optional<MarginalMatrix> left_marginals;
  std::optional<MarginalMatrix> right_marginals;
};

struct CampaignTotals {
  std::uint64_t profiles = 0;
  std::uint64_t pairs = 0;       // ordered profile pairs (R, R')
  std::uint64_t deviations = 0;  // unilateral misreports (R, i, R'_i)
};

struct SearchSummary {
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t steps = 0;
  std::uint64_t accepted = 0;
  bool found = false;
  std::vector<AxiomId> satisfy;
  AxiomId violate = AxiomId::kProbabilisticMonotonicity;
  bool revalidated = false;  // found rule's witness re-derived from scratch
};

// Status values: "pass", "fail", "precondition_failed", and for searches
// "found" / "exhausted".
struct CampaignReport {
  std::string campaign;
  DomainSpec domain;
  std::string rule;
  std::vector<AxiomVerdict> verdicts;
  std::vector<EquivalenceResult> equivalences;
  CampaignTotals totals;
  std::optional<SearchSummary> search;
  bool passed = true;
  std::string status = "pass";
  std::string note;
  double runtime_ms = 0;
};

struct CampaignOptions {
  int workers = 1;
  std::size_t max_pair_profiles = 1000;
  std::size_t max_profiles = Domain::kDefaultMaxProfiles;
  RpLimits limits;
};

// Runs ex-post efficiency, equal treatment, probabilistic monotonicity,
// strategy-proofness, weak object-wise non-bossiness and pairwise
// responsiveness for `rule` (random priority by default).
CampaignReport VerifyTheorem1Forward(
    const DomainSpec& spec, const CampaignOptions& options = {},
    const std::optional<RuleHandle>& rule = std::nullopt);

// Checks that `inner` is deterministic, Maskin monotonic and ex-post
// efficient, then compares its symmetrization with random priority. A failed
// precondition skips the comparison and reports "precondition_failed".
CampaignReport VerifyCorollary1(const RuleHandle& inner,
                                const DomainSpec& spec,
                                const CampaignOptions& options = {});

// Passes iff the global probabilistic-monotonicity verdict agrees with the
// conjunction of the three assignment-level components.
CampaignReport VerifyProp2(const RuleHandle& rule, const DomainSpec& spec,
                           const CampaignOptions& options = {});

// Passes iff the strategy-proofness verdict agrees with the conjunction of
// swap monotonicity, upper invariance and lower invariance.
CampaignReport VerifySpDecomposition(const RuleHandle& rule,
                                     const DomainSpec& spec,
                                     const CampaignOptions& options = {});

EquivalenceResult CompareRules(const RuleHandle& a, const RuleHandle& b,
                               const Domain& domain, EqualityLevel level,
                               int workers = 1);
CampaignReport RulesEqual(const RuleHandle& a, const RuleHandle& b,
                          const DomainSpec& spec, EqualityLevel level,
                          const CampaignOptions& options = {});

CampaignTotals CountTotals(const Domain& domain);

}  // namespace rpcheck

#endif  // RPCHECK_CAMPAIGN_H_
