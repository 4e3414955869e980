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

// Re-derivation of a recorded violation straight from the rule, without the
// tabulation or scan order that produced it.

#include <string>

#include "rpcheck/axioms.h"

namespace rpcheck {
namespace {

Rational MarginalOf(const Lottery& lottery, AgentIndex i, ObjectIndex z) {
  Rational sum;
  for (const auto& [mu, w] : lottery.entries()) {
    if (mu[i] == z) sum += w;
  }
  return sum;
}

// R' is R with agent i's x and y (adjacent, x above y) exchanged.
bool IsSwapDeviation(const Witness& w) {
  if (!w.profile || !w.profile_prime || !w.agent || !w.swap) return false;
  const AgentIndex i = *w.agent;
  const Preference& pref = w.profile->pref(i);
  const auto [x, y] = *w.swap;
  const int pos = pref.rank_of(x);
  if (pos + 1 >= pref.size() || pref.at(pos + 1) != y) return false;
  return *w.profile_prime == w.profile->WithPreference(i, AdjacentSwap(pref, pos));
}

bool IsUnilateralDeviation(const Witness& w) {
  if (!w.profile || !w.profile_prime || !w.agent) return false;
  const AgentIndex i = *w.agent;
  if (w.profile->agent_count() != w.profile_prime->agent_count()) {
    return false;
  }
  for (AgentIndex j = 0; j < w.profile->agent_count(); ++j) {
    if (j != i && !(w.profile->pref(j) == w.profile_prime->pref(j))) {
      return false;
    }
  }
  return !(w.profile->pref(i) == w.profile_prime->pref(i));
}

bool ValuesMatch(const Witness& w, const Rational& a, const Rational& b) {
  return w.value && w.value_prime && *w.value == a && *w.value_prime == b;
}

// Assignment-level equality conditions on a swap deviation.
bool GenuineAssignmentEquality(const Witness& w, const RuleHandle& rule,
                               bool (*selects)(const Preference&, int,
                                               ObjectIndex)) {
  if (!IsSwapDeviation(w) || !w.mu) return false;
  const AgentIndex i = *w.agent;
  const Preference& pref = w.profile->pref(i);
  if (!selects(pref, pref.rank_of(w.swap->first), (*w.mu)[i])) return false;
  const Rational a = rule.Evaluate(*w.profile).probability(*w.mu);
  const Rational b = rule.Evaluate(*w.profile_prime).probability(*w.mu);
  return ValuesMatch(w, a, b) && a != b;
}

bool GenuineMarginalEquality(const Witness& w, const RuleHandle& rule,
                             bool (*selects)(const Preference&, int,
                                             ObjectIndex)) {
  if (!IsSwapDeviation(w) || !w.object) return false;
  const AgentIndex i = *w.agent;
  const Preference& pref = w.profile->pref(i);
  if (!selects(pref, pref.rank_of(w.swap->first), *w.object)) return false;
  const Rational a = MarginalOf(rule.Evaluate(*w.profile), i, *w.object);
  const Rational b = MarginalOf(rule.Evaluate(*w.profile_prime), i, *w.object);
  return ValuesMatch(w, a, b) && a != b;
}

bool AboveSwap(const Preference& pref, int pos, ObjectIndex z) {
  return pref.rank_of(z) < pos;
}
bool BelowSwap(const Preference& pref, int pos, ObjectIndex z) {
  return pref.rank_of(z) > pos + 1;
}
bool OutsideSwap(const Preference& pref, int pos, ObjectIndex z) {
  return z != pref.at(pos) && z != pref.at(pos + 1);
}

bool GenuineAssignmentSwapMonotonicity(const Witness& w,
                                       const RuleHandle& rule) {
  if (!IsSwapDeviation(w) || !w.mu) return false;
  const AgentIndex i = *w.agent;
  const ObjectIndex y = w.swap->second;
  const Lottery p = rule.Evaluate(*w.profile);
  const Lottery q = rule.Evaluate(*w.profile_prime);
  const Rational a = p.probability(*w.mu);
  const Rational b = q.probability(*w.mu);
  if (!ValuesMatch(w, a, b)) return false;
  if (w.component == "i") return (*w.mu)[i] == y && b < a;
  if (w.component != "ii" || a == b) return false;
  for (const auto& lottery : {p, q}) {
    for (const auto& [mu, weight] : lottery.entries()) {
      if (mu[i] == y && p.probability(mu) != q.probability(mu)) return false;
    }
  }
  return true;
}

bool GenuineSwapMonotonicity(const Witness& w, const RuleHandle& rule) {
  if (!IsSwapDeviation(w) || !w.object) return false;
  const AgentIndex i = *w.agent;
  const ObjectIndex y = w.swap->second;
  const Lottery p = rule.Evaluate(*w.profile);
  const Lottery q = rule.Evaluate(*w.profile_prime);
  const Rational a = MarginalOf(p, i, *w.object);
  const Rational b = MarginalOf(q, i, *w.object);
  if (!ValuesMatch(w, a, b)) return false;
  if (w.component == "i") return *w.object == y && b < a;
  return w.component == "ii" && a != b &&
         MarginalOf(p, i, y) == MarginalOf(q, i, y);
}

bool GenuineNonbossiness(const Witness& w, const RuleHandle& rule,
                         bool weak) {
  if (!IsUnilateralDeviation(w) || !w.mu || !w.object) return false;
  if (weak && !IsSwapDeviation(w)) return false;
  const AgentIndex i = *w.agent;
  const ObjectIndex z = *w.object;
  if ((*w.mu)[i] != z) return false;
  const Lottery p = rule.Evaluate(*w.profile);
  const Lottery q = rule.Evaluate(*w.profile_prime);
  if (MarginalOf(p, i, z) != MarginalOf(q, i, z)) return false;
  const Rational a = p.probability(*w.mu);
  const Rational b = q.probability(*w.mu);
  return ValuesMatch(w, a, b) && a != b;
}

bool GenuineStrategyProofness(const Witness& w, const RuleHandle& rule) {
  if (!IsUnilateralDeviation(w) || !w.object) return false;
  const AgentIndex i = *w.agent;
  const Preference& pref = w.profile->pref(i);
  const Lottery p = rule.Evaluate(*w.profile);
  const Lottery q = rule.Evaluate(*w.profile_prime);
  Rational a;
  Rational b;
  for (ObjectIndex x : UpperContour(pref, *w.object)) {
    a += MarginalOf(p, i, x);
    b += MarginalOf(q, i, x);
  }
  a += MarginalOf(p, i, *w.object);
  b += MarginalOf(q, i, *w.object);
  return ValuesMatch(w, a, b) && a < b;
}

bool GenuineProbabilisticMonotonicity(const Witness& w,
                                      const RuleHandle& rule) {
  if (!w.profile || !w.profile_prime || !w.mu) return false;
  if (!IsMuMonotonicTransformation(*w.profile, *w.profile_prime, *w.mu)) {
    return false;
  }
  const Rational a = rule.Evaluate(*w.profile).probability(*w.mu);
  const Rational b = rule.Evaluate(*w.profile_prime).probability(*w.mu);
  return ValuesMatch(w, a, b) && b < a;
}

bool GenuineMaskin(const Witness& w, const RuleHandle& rule) {
  if (!w.profile || !w.profile_prime || !w.mu) return false;
  if (!IsMuMonotonicTransformation(*w.profile, *w.profile_prime, *w.mu)) {
    return false;
  }
  const Lottery p = rule.Evaluate(*w.profile);
  const Lottery q = rule.Evaluate(*w.profile_prime);
  return p == Lottery::Degenerate(*w.mu) &&
         !(q == Lottery::Degenerate(*w.mu));
}

bool GenuineExPost(const Witness& w, const RuleHandle& rule) {
  if (!w.profile || !w.mu || !w.mu_prime) return false;
  const Lottery p = rule.Evaluate(*w.profile);
  if (p.probability(*w.mu).sign() <= 0) return false;
  if (!w.mu_prime->IsFeasible(w.profile->space())) return false;
  bool strict = false;
  for (AgentIndex i = 0; i < w.profile->agent_count(); ++i) {
    const Preference& pref = w.profile->pref(i);
    if (pref.Prefers((*w.mu)[i], (*w.mu_prime)[i])) return false;
    strict = strict || pref.Prefers((*w.mu_prime)[i], (*w.mu)[i]);
  }
  return strict;
}

bool GenuineEqualTreatment(const Witness& w, const RuleHandle& rule,
                           bool marginal) {
  if (!w.profile || !w.agent || !w.other_agent) return false;
  const AgentIndex i = *w.agent;
  const AgentIndex j = *w.other_agent;
  if (!(w.profile->pref(i) == w.profile->pref(j)) || i == j) return false;
  const Lottery p = rule.Evaluate(*w.profile);
  if (marginal) {
    if (!w.object) return false;
    const Rational a = MarginalOf(p, i, *w.object);
    const Rational b = MarginalOf(p, j, *w.object);
    return ValuesMatch(w, a, b) && a != b;
  }
  if (!w.mu || !w.mu_prime || *w.mu_prime != w.mu->Transposed(i, j)) {
    return false;
  }
  const Rational a = p.probability(*w.mu);
  const Rational b = p.probability(*w.mu_prime);
  return ValuesMatch(w, a, b) && a != b;
}

}  // namespace

bool WitnessIsGenuine(const AxiomVerdict& verdict, const RuleHandle& rule) {
  if (verdict.passed || !verdict.witness) return false;
  const Witness& w = *verdict.witness;
  switch (verdict.axiom) {
    case AxiomId::kExPostEfficiency:
      return GenuineExPost(w, rule);
    case AxiomId::kEqualTreatment:
      return GenuineEqualTreatment(w, rule, false);
    case AxiomId::kEqualTreatmentMarginal:
      return GenuineEqualTreatment(w, rule, true);
    case AxiomId::kProbabilisticMonotonicity:
      return GenuineProbabilisticMonotonicity(w, rule);
    case AxiomId::kProbabilisticMonotonicityLocal: {
      const auto sep = w.component.find(':');
      const std::string part = w.component.substr(0, sep);
      AxiomVerdict inner = verdict;
      inner.axiom = ParseAxiomId(part);
      inner.witness->component =
          sep == std::string::npos ? "" : w.component.substr(sep + 1);
      return WitnessIsGenuine(inner, rule);
    }
    case AxiomId::kStrategyProofness:
      return GenuineStrategyProofness(w, rule);
    case AxiomId::kSwapMonotonicity:
      return GenuineSwapMonotonicity(w, rule);
    case AxiomId::kUpperInvariance:
      return GenuineMarginalEquality(w, rule, AboveSwap);
    case AxiomId::kLowerInvariance:
      return GenuineMarginalEquality(w, rule, BelowSwap);
    case AxiomId::kAssignmentSwapMonotonicity:
      return GenuineAssignmentSwapMonotonicity(w, rule);
    case AxiomId::kAssignmentUpperInvariance:
      return GenuineAssignmentEquality(w, rule, AboveSwap);
    case AxiomId::kAssignmentLowerInvariance:
      return GenuineAssignmentEquality(w, rule, BelowSwap);
    case AxiomId::kPairwiseResponsiveness:
      return GenuineAssignmentEquality(w, rule, OutsideSwap);
    case AxiomId::kWeakObjectNonbossiness:
      return GenuineNonbossiness(w, rule, true);
    case AxiomId::kObjectNonbossiness:
      return GenuineNonbossiness(w, rule, false);
    case AxiomId::kMaskinMonotonicity:
      return GenuineMaskin(w, rule);
    case AxiomId::kOrdinality:
      return false;
  }
  return false;
}

}  // namespace rpcheck
