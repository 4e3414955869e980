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

#include "rpcheck/oracle.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "rpcheck/errors.h"

namespace rpcheck::oracle {
namespace {

bool Dominates(const Assignment& better, const Assignment& worse,
               const Profile& profile) {
  bool strict = false;
  for (AgentIndex i = 0; i < profile.agent_count(); ++i) {
    const Preference& pref = profile.pref(i);
    if (pref.Prefers(worse[i], better[i])) return false;
    if (pref.Prefers(better[i], worse[i])) strict = true;
  }
  return strict;
}

std::set<ObjectIndex> ContourSet(const Preference& pref, ObjectIndex x) {
  std::set<ObjectIndex> out;
  for (ObjectIndex y : pref.ranking()) {
    if (y == x) break;
    out.insert(y);
  }
  return out;
}

}  // namespace

bool ParetoSet::Contains(const Assignment& mu) const {
  return std::find(assignments.begin(), assignments.end(), mu) !=
         assignments.end();
}

ParetoSet Pareto(const Profile& profile) {
  const auto all = EnumerateAssignments(profile.space(), profile.agent_count());
  ParetoSet result;
  result.fingerprint = profile.Encode();
  for (const auto& mu : all) {
    bool dominated = false;
    for (const auto& other : all) {
      if (Dominates(other, mu, profile)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.assignments.push_back(mu);
  }
  return result;
}

Lottery RpNaive(const Profile& profile, int max_agents) {
  const int n = profile.agent_count();
  if (n > max_agents) {
    throw ResourceError("naive random priority is limited to " +
                        std::to_string(max_agents) + " agents");
  }
  std::vector<AgentIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::map<Assignment, Rational> totals;
  long orders = 0;
  do {
    std::vector<int> left = profile.space().quotas();
    std::vector<ObjectIndex> got(n, -1);
    for (AgentIndex i : order) {
      for (ObjectIndex x : profile.pref(i).ranking()) {
        if (left[x] > 0) {
          --left[x];
          got[i] = x;
          break;
        }
      }
    }
    totals[Assignment(got)] += Rational(1);
    ++orders;
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<Lottery::Entry> entries;
  for (const auto& [mu, count] : totals) {
    entries.emplace_back(mu, count / Rational(orders));
  }
  return Lottery(std::move(entries));
}

std::vector<std::pair<std::size_t, std::size_t>> MuMonotonePairs(
    const Domain& domain, const Assignment& mu) {
  const int n = domain.agent_count();
  const int prefs = domain.pref_count();
  // allowed[i][k]: preference indices whose contour set at mu_i lies inside
  // the one of preference k.
  std::vector<std::vector<std::vector<int>>> allowed(
      n, std::vector<std::vector<int>>(prefs));
  for (AgentIndex i = 0; i < n; ++i) {
    for (int k = 0; k < prefs; ++k) {
      const auto from = ContourSet(domain.pref(k), mu[i]);
      for (int k2 = 0; k2 < prefs; ++k2) {
        const auto to = ContourSet(domain.pref(k2), mu[i]);
        if (std::includes(from.begin(), from.end(), to.begin(), to.end())) {
          allowed[i][k].push_back(k2);
        }
      }
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < domain.size(); ++r) {
    const Profile& from = domain.profile(r);
    std::vector<const std::vector<int>*> choices(n);
    for (AgentIndex i = 0; i < n; ++i) {
      choices[i] = &allowed[i][*domain.PrefIndexOf(from.pref(i))];
    }
    // Odometer over the product, agent 0 most significant.
    std::vector<std::size_t> digit(n, 0);
    while (true) {
      std::vector<Preference> prefs_to;
      for (AgentIndex i = 0; i < n; ++i) {
        prefs_to.push_back(domain.pref((*choices[i])[digit[i]]));
      }
      const Profile to(from.space_ptr(), std::move(prefs_to),
                       from.domain_tag());
      if (auto r2 = domain.IndexOf(to)) out.emplace_back(r, *r2);
      int i = n - 1;
      while (i >= 0 && ++digit[i] == choices[i]->size()) {
        digit[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
  return out;
}

std::vector<OracleRecord> ComputeOracleRecords(const Domain& domain) {
  std::vector<OracleRecord> records;
  records.reserve(domain.size());
  for (const auto& profile : domain.profiles()) {
    records.push_back({profile, Pareto(profile), RpNaive(profile)});
  }
  return records;
}

}  // namespace rpcheck::oracle
