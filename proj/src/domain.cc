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

#include "rpcheck/domain.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "rpcheck/errors.h"

namespace rpcheck {
namespace {

bool KeepProfile(const std::string& filter, const std::vector<int>& codes) {
  if (filter.empty()) return true;
  if (filter == "identical-pair") {
    std::set<int> distinct(codes.begin(), codes.end());
    return distinct.size() < codes.size();
  }
  throw InputError("unknown domain filter '" + filter + "'");
}

}  // namespace

Domain::Domain(DomainSpec spec, std::size_t max_profiles)
    : spec_(std::move(spec)) {
  if (!spec_.space) throw InputError("domain without object space");
  const ObjectSpace& space = *spec_.space;
  space.ValidateFor(spec_.agent_count);
  if (spec_.tag == DomainTag::kNullLast && !space.null_index()) {
    throw InputError("null_last domain requires a null object");
  }

  std::vector<ObjectIndex> ranking(space.object_count());
  std::iota(ranking.begin(), ranking.end(), 0);
  do {
    if (spec_.tag == DomainTag::kNullLast &&
        ranking.back() != *space.null_index()) {
      continue;
    }
    prefs_.emplace_back(ranking);
  } while (std::next_permutation(ranking.begin(), ranking.end()));

  neighbors_.resize(prefs_.size());
  for (int k = 0; k < pref_count(); ++k) {
    for (int pos = 0; pos + 1 < prefs_[k].size(); ++pos) {
      if (auto j = PrefIndexOf(AdjacentSwap(prefs_[k], pos))) {
        neighbors_[k].emplace_back(pos, *j);
      }
    }
  }

  const int n = spec_.agent_count;
  const std::size_t base = prefs_.size();
  std::size_t full = 1;
  for (int i = 0; i < n; ++i) {
    if (full > max_profiles / base) {
      throw ResourceError("domain exceeds the profile limit of " +
                          std::to_string(max_profiles));
    }
    full *= base;
  }

  full_to_index_.assign(full, -1);
  std::vector<int> codes(n, 0);
  for (std::size_t code = 0; code < full; ++code) {
    std::size_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      codes[i] = static_cast<int>(rest % base);
      rest /= base;
    }
    if (!KeepProfile(spec_.filter, codes)) continue;
    full_to_index_[code] = static_cast<std::int64_t>(profiles_.size());
    std::vector<Preference> prefs;
    prefs.reserve(n);
    for (int c : codes) prefs.push_back(prefs_[c]);
    pref_codes_.insert(pref_codes_.end(), codes.begin(), codes.end());
    profiles_.emplace_back(spec_.space, std::move(prefs), spec_.tag);
  }

  assignments_ = EnumerateAssignments(space, n);
  std::size_t lookup_size = 1;
  for (int i = 0; i < n; ++i) lookup_size *= space.object_count();
  assignment_lookup_.assign(lookup_size, -1);
  for (std::size_t m = 0; m < assignments_.size(); ++m) {
    std::size_t code = 0;
    for (ObjectIndex x : assignments_[m].assigned()) {
      code = code * space.object_count() + x;
    }
    assignment_lookup_[code] = static_cast<std::int32_t>(m);
  }
}

std::optional<int> Domain::PrefIndexOf(const Preference& pref) const {
  auto it = std::lower_bound(prefs_.begin(), prefs_.end(), pref);
  if (it == prefs_.end() || !(*it == pref)) return std::nullopt;
  return static_cast<int>(it - prefs_.begin());
}

std::optional<std::size_t> Domain::IndexOf(const Profile& profile) const {
  if (profile.agent_count() != agent_count() ||
      !(profile.space() == space()) || profile.domain_tag() != spec_.tag) {
    return std::nullopt;
  }
  std::int64_t code = 0;
  for (int i = 0; i < agent_count(); ++i) {
    auto k = PrefIndexOf(profile.pref(i));
    if (!k) return std::nullopt;
    code = code * pref_count() + *k;
  }
  const std::int64_t index = full_to_index_[code];
  if (index < 0) return std::nullopt;
  return static_cast<std::size_t>(index);
}

std::int64_t Domain::FullCode(std::size_t profile) const {
  std::int64_t code = 0;
  for (int i = 0; i < agent_count(); ++i) {
    code = code * pref_count() + pref_index(profile, i);
  }
  return code;
}

std::optional<std::size_t> Domain::WithPreference(std::size_t profile,
                                                  AgentIndex agent,
                                                  int pref_index) const {
  std::int64_t stride = 1;
  for (int i = agent_count() - 1; i > agent; --i) stride *= pref_count();
  const std::int64_t code =
      FullCode(profile) +
      (pref_index - this->pref_index(profile, agent)) * stride;
  const std::int64_t index = full_to_index_[code];
  if (index < 0) return std::nullopt;
  return static_cast<std::size_t>(index);
}

std::optional<std::size_t> Domain::AssignmentIndexOf(
    const Assignment& mu) const {
  if (mu.agent_count() != agent_count()) return std::nullopt;
  std::size_t code = 0;
  for (ObjectIndex x : mu.assigned()) {
    if (x < 0 || x >= space().object_count()) return std::nullopt;
    code = code * space().object_count() + x;
  }
  const std::int32_t index = assignment_lookup_[code];
  if (index < 0) return std::nullopt;
  return static_cast<std::size_t>(index);
}

}  // namespace rpcheck
