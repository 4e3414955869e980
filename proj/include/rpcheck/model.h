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

// Primitive objects of the assignment model: object spaces with quotas,
// strict preferences, profiles, deterministic assignments, lotteries over
// assignments, marginal matrices and utility profiles.
//
// Agents and objects are dense 0-based indices. Labels are display metadata
// only. All values are immutable after construction.

#ifndef RPCHECK_MODEL_H_
#define RPCHECK_MODEL_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpcheck/rational.h"

namespace rpcheck {

using AgentIndex = int;
using ObjectIndex = int;

class ObjectSpace {
 public:
  ObjectSpace(std::vector<std::string> labels, std::vector<int> quotas,
              std::optional<ObjectIndex> null_index = std::nullopt);

  // Unit quotas, no null object.
  static ObjectSpace Unit(std::vector<std::string> labels);

  int object_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ObjectIndex x) const;
  const std::vector<int>& quotas() const { return quotas_; }
  int quota(ObjectIndex x) const;
  std::optional<ObjectIndex> null_index() const { return null_index_; }
  int total_quota() const;
  bool is_unit() const;

  // Throws InputError for unknown labels.
  ObjectIndex IndexOf(std::string_view label) const;
  void CheckObject(ObjectIndex x) const;

  // Pairing check: total supply covers `agent_count` and the null object (if
  // any) has exactly one copy per agent.
  void ValidateFor(int agent_count) const;

  friend bool operator==(const ObjectSpace&, const ObjectSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> quotas_;
  std::optional<ObjectIndex> null_index_;
};

// Strict linear order over all objects, most-preferred first.
class Preference {
 public:
  explicit Preference(std::vector<ObjectIndex> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<ObjectIndex>& ranking() const { return ranking_; }
  ObjectIndex at(int rank) const { return ranking_[rank]; }
  ObjectIndex top() const { return ranking_.front(); }
  // 0 for the top object.
  int rank_of(ObjectIndex x) const { return rank_[x]; }
  // True iff x is strictly preferred to y.
  bool Prefers(ObjectIndex x, ObjectIndex y) const {
    return rank_[x] < rank_[y];
  }

  friend bool operator==(const Preference& a, const Preference& b) {
    return a.ranking_ == b.ranking_;
  }
  friend auto operator<=>(const Preference& a, const Preference& b) {
    return a.ranking_ <=> b.ranking_;
  }

 private:
  std::vector<ObjectIndex> ranking_;
  std::vector<int> rank_;
};

enum class DomainTag { kFull, kNullLast };

std::string_view DomainTagName(DomainTag tag);  // "full" / "null_last"
DomainTag ParseDomainTag(std::string_view name);

class Profile {
 public:
  Profile(std::shared_ptr<const ObjectSpace> space,
          std::vector<Preference> preferences,
          DomainTag tag = DomainTag::kFull);

  int agent_count() const { return static_cast<int>(preferences_.size()); }
  const std::vector<Preference>& preferences() const { return preferences_; }
  const Preference& pref(AgentIndex i) const { return preferences_[i]; }
  const ObjectSpace& space() const { return *space_; }
  const std::shared_ptr<const ObjectSpace>& space_ptr() const {
    return space_;
  }
  DomainTag domain_tag() const { return tag_; }

  Profile WithPreference(AgentIndex i, Preference pref) const;

  // Canonical text key: agents separated by ';', labels by ','.
  std::string Encode() const;

  friend bool operator==(const Profile& a, const Profile& b);

 private:
  std::shared_ptr<const ObjectSpace> space_;
  std::vector<Preference> preferences_;
  DomainTag tag_;
};

// Deterministic assignment: the object type each agent receives. Copies of
// one object type are interchangeable.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<ObjectIndex> assigned)
      : assigned_(std::move(assigned)) {}

  int agent_count() const { return static_cast<int>(assigned_.size()); }
  ObjectIndex operator[](AgentIndex i) const { return assigned_[i]; }
  const std::vector<ObjectIndex>& assigned() const { return assigned_; }

  bool IsFeasible(const ObjectSpace& space) const;
  // Throws InputError if some quota is exceeded or an index is invalid.
  void Validate(const ObjectSpace& space) const;

  // Transposes the objects of agents i and j.
  Assignment Transposed(AgentIndex i, AgentIndex j) const;

  std::string ToString(const ObjectSpace& space) const;  // "(a,b,c)"

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<ObjectIndex> assigned_;
};

// Probability distribution over assignments with exact weights. Entries are
// kept in canonical (lexicographic) assignment order with strictly positive
// weights summing to exactly one.
class Lottery {
 public:
  using Entry = std::pair<Assignment, Rational>;

  // Aggregates duplicate assignments and drops zero weights. Throws
  // InputError on negative weights, an empty support, mixed agent counts, or
  // weights that do not sum to one.
  explicit Lottery(std::vector<Entry> entries);

  static Lottery Degenerate(Assignment mu);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  std::vector<Assignment> support() const;
  int agent_count() const { return entries_.front().first.agent_count(); }

  // Zero for assignments outside the support.
  Rational probability(const Assignment& mu) const;

  bool IsDegenerate() const { return entries_.size() == 1; }
  const Assignment& SoleAssignment() const;

  // Throws InputError if some support assignment is infeasible for `space`.
  void ValidateFor(const ObjectSpace& space, int agent_count) const;

  friend bool operator==(const Lottery&, const Lottery&) = default;

 private:
  std::vector<Entry> entries_;
};

// Accumulates weighted assignments, then builds a normalized Lottery.
class LotteryAccumulator {
 public:
  void Add(const Assignment& mu, const Rational& weight);
  void Add(const Lottery& lottery, const Rational& scale);
  Lottery Build() &&;

 private:
  std::map<Assignment, Rational> weights_;
};

// Agent x object matrix of assignment probabilities.
class MarginalMatrix {
 public:
  MarginalMatrix(int agent_count, int object_count);

  int agent_count() const { return static_cast<int>(probs_.size()); }
  int object_count() const {
    return probs_.empty() ? 0 : static_cast<int>(probs_.front().size());
  }
  const Rational& at(AgentIndex i, ObjectIndex a) const { return probs_[i][a]; }
  Rational& at(AgentIndex i, ObjectIndex a) { return probs_[i][a]; }
  std::span<const Rational> row(AgentIndex i) const { return probs_[i]; }

  friend bool operator==(const MarginalMatrix&,
                         const MarginalMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> probs_;
};

// Cardinal (vNM) utilities; each agent's values are pairwise distinct.
class UtilityProfile {
 public:
  explicit UtilityProfile(std::vector<std::vector<Rational>> utilities);

  int agent_count() const { return static_cast<int>(utilities_.size()); }
  const std::vector<Rational>& row(AgentIndex i) const { return utilities_[i]; }
  const std::vector<std::vector<Rational>>& utilities() const {
    return utilities_;
  }

  friend bool operator==(const UtilityProfile&,
                         const UtilityProfile&) = default;

 private:
  std::vector<std::vector<Rational>> utilities_;
};

// { y : y strictly precedes x }, ascending object order.
std::vector<ObjectIndex> UpperContour(const Preference& pref, ObjectIndex x);
// { y : x strictly precedes y }, ascending object order.
std::vector<ObjectIndex> LowerContour(const Preference& pref, ObjectIndex x);

// Exchanges the objects at ranks `position` and `position + 1`.
Preference AdjacentSwap(const Preference& pref, int position);

// All single adjacent swaps of `pref`, by increasing swap position. With
// `exclude_last_swap` the swap touching the final rank is skipped, which keeps
// a null-last ranking inside the null-last domain.
std::vector<Preference> Neighborhood(const Preference& pref,
                                     bool exclude_last_swap = false);

// True iff every agent's upper contour set at mu_i under `to` is contained in
// the one under `from`.
bool IsMuMonotonicTransformation(const Profile& from, const Profile& to,
                                 const Assignment& mu);

// Chain from -> ... -> to of single adjacent swaps, each step itself a
// mu-monotonic transformation of its predecessor. Agents are processed in
// index order; each agent's ranking is bubble-sorted toward the target.
// Throws ContractError unless `to` is a mu-monotonic transformation of
// `from`.
std::vector<Profile> MonotonicSwapPath(const Profile& from, const Profile& to,
                                       const Assignment& mu);

MarginalMatrix Marginals(const Lottery& lottery, int agent_count,
                         const ObjectSpace& space);

Profile InducedOrdinalProfile(const UtilityProfile& u,
                              std::shared_ptr<const ObjectSpace> space,
                              DomainTag tag = DomainTag::kFull);

// Calls `visit` for every quota-feasible assignment in lexicographic order of
// the assigned vector. Throws InputError if the space cannot serve
// `agent_count` agents.
void ForEachAssignment(const ObjectSpace& space, int agent_count,
                       const std::function<void(const Assignment&)>& visit);
std::vector<Assignment> EnumerateAssignments(const ObjectSpace& space,
                                             int agent_count);

}  // namespace rpcheck

#endif  // RPCHECK_MODEL_H_
