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

// Hand-built table rules on the 3-agent, 3-object (a, b, c) full domain,
// each breaking one specific axiom.
//
// Most recipes look only at agent 0's reported ranking t > s > r. Agent 0
// receives the object of rank k with a fixed probability; the two remaining
// objects go to agents 1 and 2 either in the "default" arrangement (agent 1
// takes the lower object index) or "swapped". Agents 1 and 2 never influence
// the outcome, and agent 0's chances depend on ranks only, so these rules
// are strategy-proof.

#ifndef RPCHECK_FIXTURE_RULES_H_
#define RPCHECK_FIXTURE_RULES_H_

#include <memory>
#include <string>
#include <vector>

#include "rpcheck/axioms.h"
#include "rpcheck/domain.h"
#include "rpcheck/rule.h"

namespace rpcheck::fixtures {

std::shared_ptr<const ObjectSpace> AbcSpace();
DomainSpec Abc3Spec();
std::shared_ptr<const Domain> Abc3Domain();

// Ranks (1/2, 1/3, 1/6), default arrangement, except that the rank-0 mass is
// split 1/3 default + 1/6 swapped whenever label(s) > label(r). Swapping s
// and r moves probability between assignments where agent 0 keeps t: only
// upper assignment invariance fails.
TableRule UpperInvarianceViolator();

// Rank 0: 1/4 default + 1/4 swapped. Rank 1: 1/6 + 1/6. Rank 2: 1/6 default
// if label(t) < label(s), else 1/12 + 1/12. Swapping t and s reshuffles the
// mass where agent 0 gets r: only lower assignment invariance fails.
TableRule LowerInvarianceViolator();

// Ranks (1/2, 1/2, 0), default arrangement, except that the rank-0 mass is
// 1/4 default + 1/4 swapped when t is object a. Lifting a to the top lowers
// the probability of (a, default): only assignment swap monotonicity fails.
TableRule AssignmentSwapViolator();

// Agent 0 gets their reported second choice; default arrangement for the
// others. Not strategy-proof.
TableRule SecondChoiceRule();

// Agent 0 always gets a; agents 1 and 2 get (b, c) if agent 0 ranks b above
// c, else (c, b). Bossy.
TableRule BossyRule();

// The same assignment at every profile.
TableRule ConstantRule(const Assignment& mu);

struct NamedFixture {
  std::string name;  // file stem
  TableRule rule;
  std::string recipe;
  // Axiom expected to fail among the assignment-level trio, if any.
  std::string failing_component;
};

// Every fixture shipped under tests/fixtures/rules.
std::vector<NamedFixture> AllFixtureRules();

// Agent 0 receives object x with probability u_0(x) / sum_y u_0(y)
// (utilities must be positive); the others take the rest in the default
// arrangement. Depends on cardinal intensities, so it is not ordinal.
Lottery CardinalShareRule(const UtilityProfile& u, const ObjectSpace& space);

}  // namespace rpcheck::fixtures

#endif  // RPCHECK_FIXTURE_RULES_H_
