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

// Assignment mechanisms, evaluated exactly.

#ifndef RPCHECK_MECHANISMS_H_
#define RPCHECK_MECHANISMS_H_

#include <functional>
#include <vector>

#include "rpcheck/model.h"

namespace rpcheck {

// Permutation of agents: order[k] is the agent with the k-th highest
// priority.
class PriorityOrder {
 public:
  explicit PriorityOrder(std::vector<AgentIndex> order);
  static PriorityOrder Identity(int agent_count);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<AgentIndex>& order() const { return order_; }

 private:
  std::vector<AgentIndex> order_;
};

// Bijection pi on agents; maps agent i to mapping[i].
class AgentPermutation {
 public:
  explicit AgentPermutation(std::vector<AgentIndex> mapping);

  int size() const { return static_cast<int>(mapping_.size()); }
  AgentIndex operator()(AgentIndex i) const { return mapping_[i]; }
  const std::vector<AgentIndex>& mapping() const { return mapping_; }

  // (R_pi(0), ..., R_pi(n-1)).
  Profile Apply(const Profile& profile) const;
  // mu . pi, i.e. (mu_pi(0), ..., mu_pi(n-1)).
  Assignment Apply(const Assignment& mu) const;
  // nu with nu = mu . pi solved for mu.
  Assignment Unapply(const Assignment& nu) const;

 private:
  std::vector<AgentIndex> mapping_;
};

struct RpLimits {
  // Exact enumeration over n! priority orders is refused above this.
  int max_agents = 10;
};

using ProfileRule = std::function<Lottery(const Profile&)>;

// Agents pick, in priority order, their most-preferred object that still has
// capacity.
Assignment SerialDictatorship(const Profile& profile,
                              const PriorityOrder& priority);

// Uniform mixture of serial dictatorships over all n! priority orders.
// Outcomes are aggregated by memoizing on (remaining agents, remaining
// capacities). Throws ResourceError above `limits.max_agents`.
Lottery RandomPriority(const Profile& profile, const RpLimits& limits = {});

// Top trading cycles for a housing market: unit quotas, as many objects as
// agents, `endowment` a bijection. Throws UnsupportedInputError otherwise.
Assignment TopTradingCycles(const Profile& profile,
                            const Assignment& endowment);

// Uniform mixture of TTC over all n! bijective endowments.
Lottery CoreFromRandomEndowments(const Profile& profile,
                                 const RpLimits& limits = {});

// phi_mu(R) = 1/n! * sum over pi of inner_{mu.pi}(R_pi(0), ..., R_pi(n-1)).
// The object space is left fixed; only agent roles are permuted.
Lottery Symmetrize(const ProfileRule& inner, const Profile& profile,
                   const RpLimits& limits = {});

// Deterministic three-agent rule over objects {a, b, c}: agent 0 takes its
// top object; if agent 0's second-ranked object precedes its third-ranked one
// alphabetically (by label), agent 1 picks next from the remainder,
// otherwise agent 2 does; the remaining agent gets the last object.
// Throws UnsupportedInputError for any other shape.
Assignment OspExampleRule(const Profile& profile);

}  // namespace rpcheck

#endif  // RPCHECK_MECHANISMS_H_
