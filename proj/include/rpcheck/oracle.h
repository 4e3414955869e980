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

// Brute-force reference implementations. They use only the core model and
// share no code with the mechanisms or the axiom checkers, so agreement
// between the two is meaningful.

#ifndef RPCHECK_ORACLE_H_
#define RPCHECK_ORACLE_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rpcheck/domain.h"
#include "rpcheck/model.h"

namespace rpcheck::oracle {

struct ParetoSet {
  std::string fingerprint;              // Profile::Encode()
  std::vector<Assignment> assignments;  // canonical order

  bool Contains(const Assignment& mu) const;
  friend bool operator==(const ParetoSet&, const ParetoSet&) = default;
};

// Every feasible assignment not weakly improved for all agents and strictly
// for one by some other feasible assignment; quadratic in |assignments|.
ParetoSet Pareto(const Profile& profile);

// Random priority by walking all n! orders with a plain serial dictatorship.
// Throws ResourceError above `max_agents`.
Lottery RpNaive(const Profile& profile, int max_agents = 9);

// Ordered pairs (R, R') of domain indices such that R' is a mu-monotonic
// transformation of R, in canonical order (R first, then R').
std::vector<std::pair<std::size_t, std::size_t>> MuMonotonePairs(
    const Domain& domain, const Assignment& mu);

// Frozen regression record: a profile with its Pareto set and RP lottery.
struct OracleRecord {
  Profile profile;
  ParetoSet pareto;
  Lottery rp;
};

std::vector<OracleRecord> ComputeOracleRecords(const Domain& domain);

}  // namespace rpcheck::oracle

#endif  // RPCHECK_ORACLE_H_
