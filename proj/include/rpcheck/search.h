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

// Randomized local search for table rules that keep a set of axioms while
// breaking another one. Not finding a rule proves nothing.

#ifndef RPCHECK_SEARCH_H_
#define RPCHECK_SEARCH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "rpcheck/axioms.h"
#include "rpcheck/campaign.h"
#include "rpcheck/rule.h"

namespace rpcheck {

struct SearchRequest {
  std::vector<AxiomId> satisfy;
  AxiomId violate = AxiomId::kProbabilisticMonotonicity;
  DomainSpec domain;
  std::uint64_t budget = 200;  // proposed moves
  std::uint64_t seed = 1;
  CampaignOptions options;
};

struct SearchResult {
  std::optional<TableRule> rule;
  CampaignReport report;
};

// Starts from random priority's table. Each step picks a profile, moves
// eps in {1/24, 1/12, 1/6} (capped by the available mass) from a support
// assignment to a Pareto-efficient one, and re-symmetrizes among agents with
// identical preferences, so ex-post efficiency and equal treatment hold
// throughout. A move is kept unless it raises the violation score of the
// `satisfy` axioms (violated conditions, then total slack). The search stops
// at the first kept state with score zero that violates `violate`.
//
// Throws InputError if `violate` is listed in `satisfy`.
SearchResult SearchCounterexample(const SearchRequest& request);

}  // namespace rpcheck

#endif  // RPCHECK_SEARCH_H_
