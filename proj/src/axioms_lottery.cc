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

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "axioms_internal.h"
#include "rpcheck/axioms.h"
#include "rpcheck/errors.h"

namespace rpcheck {
namespace {

constexpr std::array<std::pair<AxiomId, std::string_view>, 17> kAxiomNames{{
    {AxiomId::kExPostEfficiency, "expost-eff"},
    {AxiomId::kEqualTreatment, "ete"},
    {AxiomId::kEqualTreatmentMarginal, "ete-marginal"},
    {AxiomId::kProbabilisticMonotonicity, "prob-mono"},
    {AxiomId::kProbabilisticMonotonicityLocal, "prob-mono-local"},
    {AxiomId::kStrategyProofness, "sp"},
    {AxiomId::kSwapMonotonicity, "swap-mono"},
    {AxiomId::kUpperInvariance, "upper-inv"},
    {AxiomId::kLowerInvariance, "lower-inv"},
    {AxiomId::kAssignmentSwapMonotonicity, "a-swap-mono"},
    {AxiomId::kAssignmentUpperInvariance, "a-upper-inv"},
    {AxiomId::kAssignmentLowerInvariance, "a-lower-inv"},
    {AxiomId::kPairwiseResponsiveness, "pairwise-resp"},
    {AxiomId::kWeakObjectNonbossiness, "weak-ownb"},
    {AxiomId::kObjectNonbossiness, "ownb"},
    {AxiomId::kMaskinMonotonicity, "maskin"},
    {AxiomId::kOrdinality, "ordinality"},
}};

std::vector<int> Occupancy(const Assignment& mu, int object_count) {
  std::vector<int> used(object_count, 0);
  for (ObjectIndex x : mu.assigned()) ++used[x];
  return used;
}

// Agents grouped by identical preference, in order of first member; only
// groups of two or more.
std::vector<std::vector<AgentIndex>> EqualGroups(const Profile& profile) {
  std::vector<std::vector<AgentIndex>> groups;
  std::vector<bool> seen(profile.agent_count(), false);
  for (AgentIndex i = 0; i < profile.agent_count(); ++i) {
    if (seen[i]) continue;
    std::vector<AgentIndex> group{i};
    for (AgentIndex j = i + 1; j < profile.agent_count(); ++j) {
      if (!seen[j] && profile.pref(j) == profile.pref(i)) {
        group.push_back(j);
        seen[j] = true;
      }
    }
    if (group.size() >= 2) groups.push_back(std::move(group));
  }
  return groups;
}

AxiomVerdict ToVerdict(AxiomId id, internal::ScanResult result) {
  AxiomVerdict verdict;
  verdict.axiom = id;
  verdict.checked = result.checked;
  verdict.passed = !result.witness.has_value();
  verdict.witness = std::move(result.witness);
  return verdict;
}

}  // namespace

std::string_view AxiomName(AxiomId id) {
  for (const auto& [key, name] : kAxiomNames) {
    if (key == id) return name;
  }
  throw InputError("unknown axiom id");
}

AxiomId ParseAxiomId(std::string_view name) {
  for (const auto& [key, text] : kAxiomNames) {
    if (text == name) return key;
  }
  throw ParseError("unknown axiom '" + std::string(name) + "'");
}

const std::vector<AxiomId>& AllRuleAxioms() {
  static const std::vector<AxiomId> ids = [] {
    std::vector<AxiomId> out;
    for (const auto& [key, name] : kAxiomNames) {
      if (key != AxiomId::kOrdinality) out.push_back(key);
    }
    return out;
  }();
  return ids;
}

std::optional<Assignment> FindParetoImprovement(const Assignment& mu,
                                                const Profile& profile) {
  const ObjectSpace& space = profile.space();
  const int n = profile.agent_count();
  const std::vector<int> used = Occupancy(mu, space.object_count());

  // Waste: an agent prefers an object that still has a free copy.
  for (AgentIndex i = 0; i < n; ++i) {
    for (ObjectIndex x : profile.pref(i).ranking()) {
      if (x == mu[i]) break;
      if (used[x] < space.quota(x)) {
        std::vector<ObjectIndex> next = mu.assigned();
        next[i] = x;
        return Assignment(std::move(next));
      }
    }
  }

  // Envy cycle: i -> j when i prefers mu_j to mu_i. Rotating objects along a
  // cycle keeps every quota and makes each member strictly better off.
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<AgentIndex> stack;
  std::vector<AgentIndex> cycle;
  std::function<bool(AgentIndex)> dfs = [&](AgentIndex i) {
    state[i] = 1;
    stack.push_back(i);
    for (AgentIndex j = 0; j < n; ++j) {
      if (!profile.pref(i).Prefers(mu[j], mu[i])) continue;
      if (state[j] == 1) {
        auto it = std::find(stack.begin(), stack.end(), j);
        cycle.assign(it, stack.end());
        return true;
      }
      if (state[j] == 0 && dfs(j)) return true;
    }
    stack.pop_back();
    state[i] = 2;
    return false;
  };
  for (AgentIndex i = 0; i < n && cycle.empty(); ++i) {
    if (state[i] == 0) dfs(i);
  }
  if (cycle.empty()) return std::nullopt;
  std::vector<ObjectIndex> next = mu.assigned();
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    next[cycle[k]] = mu[cycle[(k + 1) % cycle.size()]];
  }
  return Assignment(std::move(next));
}

bool IsParetoEfficient(const Assignment& mu, const Profile& profile) {
  return !FindParetoImprovement(mu, profile).has_value();
}

namespace internal {

void ScanExPost(const Lottery& lottery, const Profile& profile, Scan& scan) {
  for (const auto& [mu, w] : lottery.entries()) {
    auto better = FindParetoImprovement(mu, profile);
    const bool ok = !better.has_value();
    if (!scan.Check(ok, w, Rational(0), [&] {
          Witness wit;
          wit.profile = profile;
          wit.mu = mu;
          wit.mu_prime = better;
          wit.value = w;
          return wit;
        })) {
      return;
    }
  }
}

void ScanEqualTreatment(const Lottery& lottery, const Profile& profile,
                        Scan& scan) {
  const int n = profile.agent_count();
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = i + 1; j < n; ++j) {
      if (!(profile.pref(i) == profile.pref(j))) continue;
      for (const auto& [mu, w] : lottery.entries()) {
        const Assignment swapped = mu.Transposed(i, j);
        const Rational other = lottery.probability(swapped);
        if (!scan.Check(w == other, w, other, [&] {
              Witness wit;
              wit.profile = profile;
              wit.agent = i;
              wit.other_agent = j;
              wit.mu = mu;
              wit.mu_prime = swapped;
              wit.value = w;
              wit.value_prime = other;
              return wit;
            })) {
          return;
        }
      }
    }
  }
}

void ScanEqualTreatmentMarginal(const MarginalMatrix& marginals,
                                const Profile& profile, Scan& scan) {
  const int n = profile.agent_count();
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = i + 1; j < n; ++j) {
      if (!(profile.pref(i) == profile.pref(j))) continue;
      for (ObjectIndex z = 0; z < marginals.object_count(); ++z) {
        const Rational& a = marginals.at(i, z);
        const Rational& b = marginals.at(j, z);
        if (!scan.Check(a == b, a, b, [&] {
              Witness wit;
              wit.profile = profile;
              wit.agent = i;
              wit.other_agent = j;
              wit.object = z;
              wit.value = a;
              wit.value_prime = b;
              return wit;
            })) {
          return;
        }
      }
    }
  }
}

}  // namespace internal

AxiomVerdict CheckExPostEfficiency(const Lottery& lottery,
                                   const Profile& profile) {
  return ToVerdict(AxiomId::kExPostEfficiency,
                   internal::RunScan(1, 1, false, [&](std::size_t,
                                                      internal::Scan& scan) {
                     internal::ScanExPost(lottery, profile, scan);
                   }));
}

AxiomVerdict CheckEqualTreatment(const Lottery& lottery,
                                 const Profile& profile) {
  return ToVerdict(AxiomId::kEqualTreatment,
                   internal::RunScan(1, 1, false, [&](std::size_t,
                                                      internal::Scan& scan) {
                     internal::ScanEqualTreatment(lottery, profile, scan);
                   }));
}

AxiomVerdict CheckEqualTreatmentMarginal(const Lottery& lottery,
                                         const Profile& profile) {
  const MarginalMatrix marginals =
      Marginals(lottery, profile.agent_count(), profile.space());
  return ToVerdict(AxiomId::kEqualTreatmentMarginal,
                   internal::RunScan(1, 1, false, [&](std::size_t,
                                                      internal::Scan& scan) {
                     internal::ScanEqualTreatmentMarginal(marginals, profile,
                                                          scan);
                   }));
}

Lottery SymmetrizeWithinEquals(const Lottery& lottery,
                               const Profile& profile) {
  const auto groups = EqualGroups(profile);
  if (groups.empty()) return lottery;

  Rational scale(1);
  for (const auto& group : groups) {
    scale = scale / Factorial(static_cast<int>(group.size()));
  }

  LotteryAccumulator acc;
  for (const auto& [mu, w] : lottery.entries()) {
    const Rational weight = w * scale;
    // Odometer over one permutation per group.
    std::vector<std::vector<int>> perms;
    for (const auto& group : groups) {
      std::vector<int> p(group.size());
      std::iota(p.begin(), p.end(), 0);
      perms.push_back(std::move(p));
    }
    while (true) {
      std::vector<ObjectIndex> next = mu.assigned();
      for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t k = 0; k < groups[g].size(); ++k) {
          next[groups[g][k]] = mu[groups[g][perms[g][k]]];
        }
      }
      acc.Add(Assignment(std::move(next)), weight);
      std::size_t g = 0;
      while (g < perms.size() &&
             !std::next_permutation(perms[g].begin(), perms[g].end())) {
        ++g;  // wrapped back to identity; carry
      }
      if (g == perms.size()) break;
    }
  }
  return std::move(acc).Build();
}

bool SdDominates(std::span<const Rational> p, std::span<const Rational> q,
                 const Preference& pref) {
  if (p.size() != q.size() || static_cast<int>(p.size()) != pref.size()) {
    throw InputError("marginal rows and preference differ in length");
  }
  Rational sp;
  Rational sq;
  for (ObjectIndex x : pref.ranking()) {
    sp += p[x];
    sq += q[x];
    if (sp < sq) return false;
  }
  return true;
}

}  // namespace rpcheck
