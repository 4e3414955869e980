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

#ifndef RPCHECK_DOMAIN_H_
#define RPCHECK_DOMAIN_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpcheck/model.h"

namespace rpcheck {

// Finite profile domain: every agent ranks the objects freely (full) or with
// the null object last (null_last). An optional filter keeps a subset.
//
// Supported filters:
//   ""               no filter
//   "identical-pair" profiles where at least two agents share a ranking
struct DomainSpec {
  int agent_count = 0;
  std::shared_ptr<const ObjectSpace> space;
  DomainTag tag = DomainTag::kFull;
  std::string filter;

  friend bool operator==(const DomainSpec& a, const DomainSpec& b) {
    return a.agent_count == b.agent_count && *a.space == *b.space &&
           a.tag == b.tag && a.filter == b.filter;
  }
};

// Canonical enumeration of a DomainSpec.
//
// Each agent draws from the same preference list, ordered lexicographically
// by ranking. Profiles are ordered lexicographically by the tuple of
// preference indices, agent 0 most significant. Assignments are ordered
// lexicographically by the assigned vector.
class Domain {
 public:
  static constexpr std::size_t kDefaultMaxProfiles = 500000;

  // Throws ResourceError if the unfiltered product exceeds `max_profiles`.
  explicit Domain(DomainSpec spec,
                  std::size_t max_profiles = kDefaultMaxProfiles);

  const DomainSpec& spec() const { return spec_; }
  int agent_count() const { return spec_.agent_count; }
  const ObjectSpace& space() const { return *spec_.space; }
  std::size_t size() const { return profiles_.size(); }

  const Profile& profile(std::size_t index) const { return profiles_[index]; }
  const std::vector<Profile>& profiles() const { return profiles_; }
  std::optional<std::size_t> IndexOf(const Profile& profile) const;

  // Per-agent preference list.
  int pref_count() const { return static_cast<int>(prefs_.size()); }
  const Preference& pref(int pref_index) const { return prefs_[pref_index]; }
  std::optional<int> PrefIndexOf(const Preference& pref) const;
  int pref_index(std::size_t profile, AgentIndex agent) const {
    return pref_codes_[profile * agent_count() + agent];
  }

  // Profile index after agent `agent` reports `pref_index` instead, or
  // nullopt if that profile is filtered out.
  std::optional<std::size_t> WithPreference(std::size_t profile,
                                            AgentIndex agent,
                                            int pref_index) const;

  // (swap position, neighbor preference index) for each adjacent swap that
  // stays within the per-agent preference list.
  const std::vector<std::pair<int, int>>& neighbors(int pref_index) const {
    return neighbors_[pref_index];
  }

  // Every feasible assignment, canonical order.
  const std::vector<Assignment>& assignments() const { return assignments_; }
  std::optional<std::size_t> AssignmentIndexOf(const Assignment& mu) const;

 private:
  std::int64_t FullCode(std::size_t profile) const;

  DomainSpec spec_;
  std::vector<Preference> prefs_;
  std::vector<std::vector<std::pair<int, int>>> neighbors_;
  std::vector<int> pref_codes_;  // profile-major, agent-minor
  std::vector<Profile> profiles_;
  std::vector<std::int64_t> full_to_index_;  // -1 when filtered out
  std::vector<Assignment> assignments_;
  std::vector<std::int32_t> assignment_lookup_;  // base-|O| code -> index
};

}  // namespace rpcheck

#endif  // RPCHECK_DOMAIN_H_
