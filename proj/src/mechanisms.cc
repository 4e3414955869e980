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

#include "rpcheck/mechanisms.h"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "rpcheck/errors.h"

namespace rpcheck {
namespace {

bool IsPermutation(const std::vector<int>& v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k)) return false;
  }
  return true;
}

void CheckFactorialGuard(int agent_count, const RpLimits& limits,
                         const char* what) {
  if (agent_count > limits.max_agents) {
    throw ResourceError(std::string(what) + " enumerates " +
                        std::to_string(agent_count) +
                        "! orders; limit is " +
                        std::to_string(limits.max_agents) + " agents");
  }
}

ObjectIndex BestAvailable(const Preference& pref,
                          const std::vector<int>& capacity) {
  for (ObjectIndex x : pref.ranking()) {
    if (capacity[x] > 0) return x;
  }
  throw ContractError("no object with remaining capacity");
}

// Outcome counts of serial dictatorship over all orders of a subset of
// agents, memoized on (agent subset, remaining capacities).
class RpEnumerator {
 public:
  explicit RpEnumerator(const Profile& profile) : profile_(profile) {}

  using Outcomes = std::vector<std::pair<std::vector<ObjectIndex>, mpz_class>>;

  const Outcomes& Solve(std::uint32_t agents, const std::vector<int>& caps) {
    std::vector<int> key = caps;
    key.push_back(static_cast<int>(agents));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Outcomes result;
    if (agents == 0) {
      result.emplace_back(
          std::vector<ObjectIndex>(profile_.agent_count(), -1), 1);
    } else {
      std::map<std::vector<ObjectIndex>, mpz_class> merged;
      for (int j = 0; j < profile_.agent_count(); ++j) {
        if (!(agents & (1u << j))) continue;
        const ObjectIndex x = BestAvailable(profile_.pref(j), caps);
        std::vector<int> next_caps = caps;
        --next_caps[x];
        for (const auto& [partial, count] :
             Solve(agents & ~(1u << j), next_caps)) {
          std::vector<ObjectIndex> full = partial;
          full[j] = x;
          merged[std::move(full)] += count;
        }
      }
      result.assign(merged.begin(), merged.end());
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  const Profile& profile_;
  std::map<std::vector<int>, Outcomes> memo_;
};

}  // namespace

PriorityOrder::PriorityOrder(std::vector<AgentIndex> order)
    : order_(std::move(order)) {
  if (!IsPermutation(order_)) {
    throw InputError("priority order is not a permutation of the agents");
  }
}

PriorityOrder PriorityOrder::Identity(int agent_count) {
  std::vector<AgentIndex> order(agent_count);
  std::iota(order.begin(), order.end(), 0);
  return PriorityOrder(std::move(order));
}

AgentPermutation::AgentPermutation(std::vector<AgentIndex> mapping)
    : mapping_(std::move(mapping)) {
  if (!IsPermutation(mapping_)) {
    throw InputError("agent permutation is not a bijection");
  }
}

Profile AgentPermutation::Apply(const Profile& profile) const {
  if (profile.agent_count() != size()) {
    throw InputError("permutation size differs from agent count");
  }
  std::vector<Preference> prefs;
  prefs.reserve(size());
  for (int i = 0; i < size(); ++i) prefs.push_back(profile.pref(mapping_[i]));
  return Profile(profile.space_ptr(), std::move(prefs), profile.domain_tag());
}

Assignment AgentPermutation::Apply(const Assignment& mu) const {
  std::vector<ObjectIndex> out(size());
  for (int i = 0; i < size(); ++i) out[i] = mu[mapping_[i]];
  return Assignment(std::move(out));
}

Assignment AgentPermutation::Unapply(const Assignment& nu) const {
  std::vector<ObjectIndex> out(size());
  for (int i = 0; i < size(); ++i) out[mapping_[i]] = nu[i];
  return Assignment(std::move(out));
}

Assignment SerialDictatorship(const Profile& profile,
                              const PriorityOrder& priority) {
  if (priority.size() != profile.agent_count()) {
    throw InputError("priority order size differs from agent count");
  }
  std::vector<int> capacity = profile.space().quotas();
  std::vector<ObjectIndex> assigned(profile.agent_count());
  for (AgentIndex i : priority.order()) {
    const ObjectIndex x = BestAvailable(profile.pref(i), capacity);
    --capacity[x];
    assigned[i] = x;
  }
  return Assignment(std::move(assigned));
}

Lottery RandomPriority(const Profile& profile, const RpLimits& limits) {
  const int n = profile.agent_count();
  CheckFactorialGuard(n, limits, "random priority");
  if (n > 31) throw ResourceError("random priority supports at most 31 agents");
  RpEnumerator enumerator(profile);
  const auto& outcomes =
      enumerator.Solve((1u << n) - 1u, profile.space().quotas());
  const Rational orders = Factorial(n);
  std::vector<Lottery::Entry> entries;
  entries.reserve(outcomes.size());
  for (const auto& [assigned, count] : outcomes) {
    entries.emplace_back(Assignment(assigned),
                         Rational::FromMpq(mpq_class(count)) / orders);
  }
  return Lottery(std::move(entries));
}

Assignment TopTradingCycles(const Profile& profile,
                            const Assignment& endowment) {
  const ObjectSpace& space = profile.space();
  const int n = profile.agent_count();
  if (!space.is_unit() || space.object_count() != n) {
    throw UnsupportedInputError(
        "top trading cycles needs unit quotas and as many objects as agents");
  }
  if (endowment.agent_count() != n || !IsPermutation(endowment.assigned())) {
    throw UnsupportedInputError("endowment must be a bijection");
  }
  std::vector<AgentIndex> owner(n);
  for (int i = 0; i < n; ++i) owner[endowment[i]] = i;

  std::vector<bool> active(n, true);
  std::vector<ObjectIndex> assigned(n, -1);
  int remaining = n;
  while (remaining > 0) {
    std::vector<ObjectIndex> wants(n, -1);
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (ObjectIndex x : profile.pref(i).ranking()) {
        if (active[owner[x]]) {
          wants[i] = x;
          break;
        }
      }
    }
    // The pointing graph is functional, so every walk ends in a cycle.
    std::vector<int> visit(n, -1);
    for (int start = 0; start < n; ++start) {
      if (!active[start] || visit[start] != -1) continue;
      int i = start;
      while (visit[i] == -1) {
        visit[i] = start;
        i = owner[wants[i]];
      }
      if (visit[i] != start) continue;  // joined an earlier walk
      const int cycle_start = i;
      do {
        assigned[i] = wants[i];
        i = owner[wants[i]];
      } while (i != cycle_start);
    }
    for (int i = 0; i < n; ++i) {
      if (active[i] && assigned[i] != -1) {
        active[i] = false;
        --remaining;
      }
    }
  }
  return Assignment(std::move(assigned));
}

Lottery CoreFromRandomEndowments(const Profile& profile,
                                 const RpLimits& limits) {
  const int n = profile.agent_count();
  CheckFactorialGuard(n, limits, "core from random endowments");
  if (!profile.space().is_unit() || profile.space().object_count() != n) {
    throw UnsupportedInputError(
        "core from random endowments needs a unit-quota housing market");
  }
  const Rational weight = Rational(1) / Factorial(n);
  std::vector<ObjectIndex> endowment(n);
  std::iota(endowment.begin(), endowment.end(), 0);
  LotteryAccumulator acc;
  do {
    acc.Add(TopTradingCycles(profile, Assignment(endowment)), weight);
  } while (std::next_permutation(endowment.begin(), endowment.end()));
  return std::move(acc).Build();
}

Lottery Symmetrize(const ProfileRule& inner, const Profile& profile,
                   const RpLimits& limits) {
  const int n = profile.agent_count();
  CheckFactorialGuard(n, limits, "symmetrization");
  const Rational weight = Rational(1) / Factorial(n);
  std::vector<AgentIndex> mapping(n);
  std::iota(mapping.begin(), mapping.end(), 0);
  LotteryAccumulator acc;
  do {
    const AgentPermutation pi(mapping);
    const Lottery inner_lottery = inner(pi.Apply(profile));
    for (const auto& [nu, w] : inner_lottery.entries()) {
      acc.Add(pi.Unapply(nu), w * weight);
    }
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return std::move(acc).Build();
}

Assignment OspExampleRule(const Profile& profile) {
  const ObjectSpace& space = profile.space();
  if (profile.agent_count() != 3 || space.object_count() != 3 ||
      !space.is_unit() || space.null_index()) {
    throw UnsupportedInputError(
        "the example rule needs 3 agents and 3 unit-quota proper objects");
  }
  const Preference& first = profile.pref(0);
  const ObjectIndex top = first.at(0);
  const ObjectIndex second = first.at(1);
  const ObjectIndex third = first.at(2);
  const bool alphabetical = space.label(second) < space.label(third);
  const AgentIndex chooser = alphabetical ? 1 : 2;
  const AgentIndex last = alphabetical ? 2 : 1;

  std::vector<ObjectIndex> assigned(3);
  assigned[0] = top;
  assigned[chooser] =
      profile.pref(chooser).Prefers(second, third) ? second : third;
  assigned[last] = assigned[chooser] == second ? third : second;
  return Assignment(std::move(assigned));
}

}  // namespace rpcheck
