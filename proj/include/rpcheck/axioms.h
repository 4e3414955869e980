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

// Axioms on random assignment rules as exact predicates.
//
// Three granularities are offered: a single lottery at a profile
// (efficiency, equal treatment), and whole rules over a finite Domain (all
// inter-profile axioms). Rule-level checks first tabulate the rule over the
// domain, then scan conditions in canonical order:
//
//   profile R (domain order) -> agent i -> deviation R'_i (swap position or
//   preference index order) -> assignment mu (canonical) / object z
//
// and report the first violation in that order. Probabilistic and Maskin
// monotonicity scan R -> R' -> mu instead.

#ifndef RPCHECK_AXIOMS_H_
#define RPCHECK_AXIOMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpcheck/domain.h"
#include "rpcheck/model.h"
#include "rpcheck/rule.h"

namespace rpcheck {

enum class AxiomId {
  kExPostEfficiency,
  kEqualTreatment,
  kEqualTreatmentMarginal,
  kProbabilisticMonotonicity,
  kProbabilisticMonotonicityLocal,
  kStrategyProofness,
  kSwapMonotonicity,
  kUpperInvariance,
  kLowerInvariance,
  kAssignmentSwapMonotonicity,
  kAssignmentUpperInvariance,
  kAssignmentLowerInvariance,
  kPairwiseResponsiveness,
  kWeakObjectNonbossiness,
  kObjectNonbossiness,
  kMaskinMonotonicity,
  kOrdinality,
};

// Wire identifiers: expost-eff, ete, ete-marginal, prob-mono,
// prob-mono-local, sp, swap-mono, upper-inv, lower-inv, a-swap-mono,
// a-upper-inv, a-lower-inv, pairwise-resp, weak-ownb, ownb, maskin,
// ordinality.
std::string_view AxiomName(AxiomId id);
AxiomId ParseAxiomId(std::string_view name);
const std::vector<AxiomId>& AllRuleAxioms();  // everything but ordinality

// Where an axiom failed. Which fields are set depends on the axiom:
//   profile / profile_prime  R and R' (R' = deviation or transformation)
//   agent, swap              deviating agent, (x, y) with x above y at R
//   other_agent              the second agent of an equal-treatment pair
//   mu / mu_prime            assignment(s) whose probabilities are compared
//   object                   object z of a marginal condition
//   value / value_prime      the compared quantities, at R and at R' (or at
//                            mu and mu_prime for equal treatment)
//   component                failing sub-axiom of a composite check, or the
//                            violated clause ("i" / "ii") of swap
//                            monotonicity
struct Witness {
  std::optional<Profile> profile;
  std::optional<Profile> profile_prime;
  std::optional<AgentIndex> agent;
  std::optional<AgentIndex> other_agent;
  std::optional<std::pair<ObjectIndex, ObjectIndex>> swap;
  std::optional<Assignment> mu;
  std::optional<Assignment> mu_prime;
  std::optional<ObjectIndex> object;
  std::optional<Rational> value;
  std::optional<Rational> value_prime;
  std::string component;
  std::string detail;
};

struct AxiomVerdict {
  AxiomId axiom;
  bool passed = true;
  std::optional<Witness> witness;  // set iff !passed
  std::uint64_t checked = 0;       // quantified conditions evaluated
  double runtime_ms = 0;
};

// --- Single lottery / single profile -------------------------------------

// Decided without enumerating alternatives: mu is efficient iff it wastes no
// object some agent prefers and the "envies the holder of" graph on agents is
// acyclic.
bool IsParetoEfficient(const Assignment& mu, const Profile& profile);
// A feasible assignment that Pareto-dominates mu, if any.
std::optional<Assignment> FindParetoImprovement(const Assignment& mu,
                                                const Profile& profile);

AxiomVerdict CheckExPostEfficiency(const Lottery& lottery,
                                   const Profile& profile);
AxiomVerdict CheckEqualTreatment(const Lottery& lottery,
                                 const Profile& profile);
AxiomVerdict CheckEqualTreatmentMarginal(const Lottery& lottery,
                                         const Profile& profile);

// Averages each support assignment over all permutations within every
// maximal group of identical-preference agents.
Lottery SymmetrizeWithinEquals(const Lottery& lottery, const Profile& profile);

// Prefix sums down `pref` of p are >= those of q. Summing over strict upper
// contour sets for every object compares the same prefixes, except the full
// set, which is 1 on both sides.
bool SdDominates(std::span<const Rational> p, std::span<const Rational> q,
                 const Preference& pref);

// --- Whole rule over a domain -------------------------------------------

// A rule evaluated at every profile of a domain, with a dense probability
// table over the domain's assignments and the marginal matrices.
class Tabulation {
 public:
  static Tabulation Build(const RuleHandle& rule,
                          std::shared_ptr<const Domain> domain,
                          int workers = 1);
  static Tabulation FromTable(const TableRule& table);
  static Tabulation FromLotteries(std::shared_ptr<const Domain> domain,
                                  std::vector<Lottery> lotteries);

  const Domain& domain() const { return *domain_; }
  const std::shared_ptr<const Domain>& domain_ptr() const { return domain_; }
  std::size_t size() const { return lotteries_.size(); }
  const Lottery& lottery(std::size_t r) const { return lotteries_[r]; }
  const std::vector<Lottery>& lotteries() const { return lotteries_; }
  const Rational& prob(std::size_t r, std::size_t m) const {
    return dense_[r * assignment_count_ + m];
  }
  const MarginalMatrix& marginals(std::size_t r) const {
    return marginals_[r];
  }

 private:
  Tabulation(std::shared_ptr<const Domain> domain,
             std::vector<Lottery> lotteries, int workers);

  std::shared_ptr<const Domain> domain_;
  std::vector<Lottery> lotteries_;
  std::size_t assignment_count_ = 0;
  std::vector<Rational> dense_;
  std::vector<MarginalMatrix> marginals_;
};

struct CheckOptions {
  int workers = 1;
  // Pairwise scans (prob-mono, maskin) refuse larger domains.
  std::size_t max_pair_profiles = 1000;
};

// Any axiom except ordinality. Maskin monotonicity throws ContractError if
// some tabulated lottery is not degenerate.
AxiomVerdict CheckRuleAxiom(AxiomId axiom, const Tabulation& table,
                            const CheckOptions& options = {});
AxiomVerdict CheckRuleAxiom(AxiomId axiom, const RuleHandle& rule,
                            std::shared_ptr<const Domain> domain,
                            const CheckOptions& options = {});

inline AxiomVerdict CheckProbabilisticMonotonicity(
    const Tabulation& t, const CheckOptions& o = {}) {
  return CheckRuleAxiom(AxiomId::kProbabilisticMonotonicity, t, o);
}
inline AxiomVerdict CheckProbMonoLocal(const Tabulation& t,
                                       const CheckOptions& o = {}) {
  return CheckRuleAxiom(AxiomId::kProbabilisticMonotonicityLocal, t, o);
}
inline AxiomVerdict CheckStrategyProofness(const Tabulation& t,
                                           const CheckOptions& o = {}) {
  return CheckRuleAxiom(AxiomId::kStrategyProofness, t, o);
}
inline AxiomVerdict CheckMaskinMonotonicity(const Tabulation& t,
                                            const CheckOptions& o = {}) {
  return CheckRuleAxiom(AxiomId::kMaskinMonotonicity, t, o);
}

// Number of violated conditions and the summed magnitude of the violations.
struct ViolationTally {
  std::uint64_t violations = 0;
  Rational slack;
  std::uint64_t checked = 0;
};
ViolationTally CountViolations(AxiomId axiom, const Tabulation& table,
                               const CheckOptions& options = {});

// Re-derives the witnessed condition by evaluating `rule` directly at the
// witness profiles, independent of any tabulation. True iff the recorded
// values match and they violate the axiom.
bool WitnessIsGenuine(const AxiomVerdict& verdict, const RuleHandle& rule);

using UtilityRule = std::function<Lottery(const UtilityProfile&)>;

// Utility profiles with equal induced ordinal profiles must yield equal
// lotteries.
AxiomVerdict CheckOrdinality(const UtilityRule& rule,
                             std::span<const UtilityProfile> samples,
                             std::shared_ptr<const ObjectSpace> space);

}  // namespace rpcheck

#endif  // RPCHECK_AXIOMS_H_
