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

#include "rpcheck/model.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rpcheck/errors.h"

namespace rpcheck {

ObjectSpace::ObjectSpace(std::vector<std::string> labels,
                         std::vector<int> quotas,
                         std::optional<ObjectIndex> null_index)
    : labels_(std::move(labels)),
      quotas_(std::move(quotas)),
      null_index_(null_index) {
  if (labels_.empty()) throw InputError("object space needs an object");
  if (labels_.size() != quotas_.size()) {
    throw InputError("got " + std::to_string(labels_.size()) +
                     " labels but " + std::to_string(quotas_.size()) +
                     " quotas");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InputError("empty object label");
    if (label.find_first_of(",;") != std::string::npos) {
      throw InputError("object label '" + label + "' contains ',' or ';'");
    }
    if (!seen.insert(label).second) {
      throw InputError("duplicate object label '" + label + "'");
    }
  }
  for (int q : quotas_) {
    if (q <= 0) throw InputError("quotas must be positive");
  }
  if (null_index_ && (*null_index_ < 0 || *null_index_ >= object_count())) {
    throw InputError("null object index out of range");
  }
}

ObjectSpace ObjectSpace::Unit(std::vector<std::string> labels) {
  std::vector<int> quotas(labels.size(), 1);
  return ObjectSpace(std::move(labels), std::move(quotas));
}

const std::string& ObjectSpace::label(ObjectIndex x) const {
  CheckObject(x);
  return labels_[x];
}

int ObjectSpace::quota(ObjectIndex x) const {
  CheckObject(x);
  return quotas_[x];
}

int ObjectSpace::total_quota() const {
  return std::accumulate(quotas_.begin(), quotas_.end(), 0);
}

bool ObjectSpace::is_unit() const {
  return std::all_of(quotas_.begin(), quotas_.end(),
                     [](int q) { return q == 1; });
}

ObjectIndex ObjectSpace::IndexOf(std::string_view label) const {
  for (int x = 0; x < object_count(); ++x) {
    if (labels_[x] == label) return x;
  }
  throw InputError("unknown object label '" + std::string(label) + "'");
}

void ObjectSpace::CheckObject(ObjectIndex x) const {
  if (x < 0 || x >= object_count()) {
    throw InputError("object index " + std::to_string(x) + " out of range");
  }
}

void ObjectSpace::ValidateFor(int agent_count) const {
  if (agent_count <= 0) throw InputError("need at least one agent");
  if (total_quota() < agent_count) {
    throw InputError("total quota " + std::to_string(total_quota()) +
                     " cannot serve " + std::to_string(agent_count) +
                     " agents");
  }
  if (null_index_ && quotas_[*null_index_] != agent_count) {
    throw InputError("null object quota must equal the agent count (" +
                     std::to_string(agent_count) + ")");
  }
}

Preference::Preference(std::vector<ObjectIndex> ranking)
    : ranking_(std::move(ranking)), rank_(ranking_.size(), -1) {
  if (ranking_.empty()) throw InputError("empty preference");
  for (int r = 0; r < size(); ++r) {
    const ObjectIndex x = ranking_[r];
    if (x < 0 || x >= size() || rank_[x] != -1) {
      throw InputError("preference is not a permutation of the objects");
    }
    rank_[x] = r;
  }
}

std::string_view DomainTagName(DomainTag tag) {
  return tag == DomainTag::kFull ? "full" : "null_last";
}

DomainTag ParseDomainTag(std::string_view name) {
  if (name == "full") return DomainTag::kFull;
  if (name == "null_last") return DomainTag::kNullLast;
  throw ParseError("unknown domain '" + std::string(name) +
                   "' (expected full or null_last)");
}

Profile::Profile(std::shared_ptr<const ObjectSpace> space,
                 std::vector<Preference> preferences, DomainTag tag)
    : space_(std::move(space)), preferences_(std::move(preferences)),
      tag_(tag) {
  if (!space_) throw InputError("profile without object space");
  space_->ValidateFor(agent_count());
  for (const auto& pref : preferences_) {
    if (pref.size() != space_->object_count()) {
      throw InputError("preference length differs from object count");
    }
  }
  if (tag_ == DomainTag::kNullLast) {
    if (!space_->null_index()) {
      throw InputError("null_last domain requires a null object");
    }
    const ObjectIndex null = *space_->null_index();
    for (const auto& pref : preferences_) {
      if (pref.rank_of(null) != pref.size() - 1) {
        throw InputError("null_last profile ranks the null object above "
                         "a proper object");
      }
    }
  }
}

Profile Profile::WithPreference(AgentIndex i, Preference pref) const {
  std::vector<Preference> prefs = preferences_;
  prefs.at(i) = std::move(pref);
  return Profile(space_, std::move(prefs), tag_);
}

std::string Profile::Encode() const {
  std::string out;
  for (int i = 0; i < agent_count(); ++i) {
    if (i > 0) out += ';';
    const auto& ranking = preferences_[i].ranking();
    for (std::size_t r = 0; r < ranking.size(); ++r) {
      if (r > 0) out += ',';
      out += space_->label(ranking[r]);
    }
  }
  return out;
}

bool operator==(const Profile& a, const Profile& b) {
  return a.tag_ == b.tag_ && a.preferences_ == b.preferences_ &&
         (a.space_ == b.space_ || *a.space_ == *b.space_);
}

bool Assignment::IsFeasible(const ObjectSpace& space) const {
  std::vector<int> used(space.object_count(), 0);
  for (ObjectIndex x : assigned_) {
    if (x < 0 || x >= space.object_count()) return false;
    if (++used[x] > space.quotas()[x]) return false;
  }
  return true;
}

void Assignment::Validate(const ObjectSpace& space) const {
  if (!IsFeasible(space)) {
    throw InputError("assignment violates quotas or uses unknown objects");
  }
}

Assignment Assignment::Transposed(AgentIndex i, AgentIndex j) const {
  std::vector<ObjectIndex> out = assigned_;
  std::swap(out.at(i), out.at(j));
  return Assignment(std::move(out));
}

std::string Assignment::ToString(const ObjectSpace& space) const {
  std::string out = "(";
  for (std::size_t i = 0; i < assigned_.size(); ++i) {
    if (i > 0) out += ',';
    out += space.label(assigned_[i]);
  }
  return out + ")";
}

MarginalMatrix::MarginalMatrix(int agent_count, int object_count)
    : probs_(agent_count, std::vector<Rational>(object_count)) {}

UtilityProfile::UtilityProfile(std::vector<std::vector<Rational>> utilities)
    : utilities_(std::move(utilities)) {
  if (utilities_.empty()) throw InputError("utility profile without agents");
  for (const auto& row : utilities_) {
    if (row.size() != utilities_.front().size() || row.empty()) {
      throw InputError("utility rows must be non-empty and equally long");
    }
    std::vector<Rational> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("utilities within an agent's row must be distinct");
    }
  }
}

std::vector<ObjectIndex> UpperContour(const Preference& pref, ObjectIndex x) {
  if (x < 0 || x >= pref.size()) throw InputError("object index out of range");
  std::vector<ObjectIndex> out(pref.ranking().begin(),
                               pref.ranking().begin() + pref.rank_of(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ObjectIndex> LowerContour(const Preference& pref, ObjectIndex x) {
  if (x < 0 || x >= pref.size()) throw InputError("object index out of range");
  std::vector<ObjectIndex> out(pref.ranking().begin() + pref.rank_of(x) + 1,
                               pref.ranking().end());
  std::sort(out.begin(), out.end());
  return out;
}

Preference AdjacentSwap(const Preference& pref, int position) {
  if (position < 0 || position + 1 >= pref.size()) {
    throw InputError("swap position " + std::to_string(position) +
                     " out of range");
  }
  std::vector<ObjectIndex> ranking = pref.ranking();
  std::swap(ranking[position], ranking[position + 1]);
  return Preference(std::move(ranking));
}

std::vector<Preference> Neighborhood(const Preference& pref,
                                     bool exclude_last_swap) {
  std::vector<Preference> out;
  const int last = pref.size() - 1 - (exclude_last_swap ? 1 : 0);
  for (int pos = 0; pos < last; ++pos) out.push_back(AdjacentSwap(pref, pos));
  return out;
}

namespace {

void RequireSameShape(const Profile& from, const Profile& to,
                      const Assignment& mu) {
  if (!(from.space() == to.space()) ||
      from.agent_count() != to.agent_count()) {
    throw InputError("profiles live on different object spaces or agent sets");
  }
  if (mu.agent_count() != from.agent_count()) {
    throw InputError("assignment agent count differs from profile");
  }
  mu.Validate(from.space());
}

// U(x, to) is a subset of U(x, from), i.e. x moved weakly up.
bool ContourShrinks(const Preference& from, const Preference& to,
                    ObjectIndex x) {
  for (int r = 0; r < to.rank_of(x); ++r) {
    if (!from.Prefers(to.at(r), x)) return false;
  }
  return true;
}

}  // namespace

bool IsMuMonotonicTransformation(const Profile& from, const Profile& to,
                                 const Assignment& mu) {
  RequireSameShape(from, to, mu);
  for (int i = 0; i < from.agent_count(); ++i) {
    if (!ContourShrinks(from.pref(i), to.pref(i), mu[i])) return false;
  }
  return true;
}

std::vector<Profile> MonotonicSwapPath(const Profile& from, const Profile& to,
                                       const Assignment& mu) {
  if (!IsMuMonotonicTransformation(from, to, mu)) {
    throw ContractError("target profile is not a mu-monotonic "
                        "transformation of the source");
  }
  // Every adjacent inversion relative to the target moves mu_i weakly up:
  // an inversion that pushed mu_i down would put an object into U(mu_i, to)
  // that is absent from U(mu_i, from). Bubble sort only removes inversions,
  // so each step stays mu-monotonic.
  std::vector<Profile> path{from};
  for (int i = 0; i < from.agent_count(); ++i) {
    const Preference& target = to.pref(i);
    std::vector<ObjectIndex> current = from.pref(i).ranking();
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (std::size_t pos = 0; pos + 1 < current.size(); ++pos) {
        if (target.rank_of(current[pos]) > target.rank_of(current[pos + 1])) {
          std::swap(current[pos], current[pos + 1]);
          path.push_back(path.back().WithPreference(i, Preference(current)));
          swapped = true;
        }
      }
    }
  }
  return path;
}

MarginalMatrix Marginals(const Lottery& lottery, int agent_count,
                         const ObjectSpace& space) {
  MarginalMatrix out(agent_count, space.object_count());
  for (const auto& [mu, weight] : lottery.entries()) {
    if (mu.agent_count() != agent_count) {
      throw InputError("lottery agent count differs from requested");
    }
    for (int i = 0; i < agent_count; ++i) out.at(i, mu[i]) += weight;
  }
  return out;
}

Profile InducedOrdinalProfile(const UtilityProfile& u,
                              std::shared_ptr<const ObjectSpace> space,
                              DomainTag tag) {
  std::vector<Preference> prefs;
  for (int i = 0; i < u.agent_count(); ++i) {
    const auto& row = u.row(i);
    if (static_cast<int>(row.size()) != space->object_count()) {
      throw InputError("utility row length differs from object count");
    }
    std::vector<ObjectIndex> ranking(row.size());
    std::iota(ranking.begin(), ranking.end(), 0);
    std::sort(ranking.begin(), ranking.end(),
              [&row](ObjectIndex a, ObjectIndex b) { return row[a] > row[b]; });
    prefs.emplace_back(std::move(ranking));
  }
  return Profile(std::move(space), std::move(prefs), tag);
}

void ForEachAssignment(const ObjectSpace& space, int agent_count,
                       const std::function<void(const Assignment&)>& visit) {
  space.ValidateFor(agent_count);
  std::vector<int> remaining = space.quotas();
  std::vector<ObjectIndex> current(agent_count, 0);
  std::function<void(int)> fill = [&](int agent) {
    if (agent == agent_count) {
      visit(Assignment(current));
      return;
    }
    for (int x = 0; x < space.object_count(); ++x) {
      if (remaining[x] == 0) continue;
      --remaining[x];
      current[agent] = x;
      fill(agent + 1);
      ++remaining[x];
    }
  };
  fill(0);
}

std::vector<Assignment> EnumerateAssignments(const ObjectSpace& space,
                                             int agent_count) {
  std::vector<Assignment> out;
  ForEachAssignment(space, agent_count,
                    [&out](const Assignment& mu) { out.push_back(mu); });
  return out;
}

}  // namespace rpcheck
