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

#include <algorithm>
#include <map>

#include "rpcheck/errors.h"
#include "rpcheck/model.h"

namespace rpcheck {

Lottery::Lottery(std::vector<Entry> entries) {
  std::map<Assignment, Rational> merged;
  for (auto& [mu, weight] : entries) {
    if (weight.sign() < 0) throw InputError("negative lottery weight");
    merged[std::move(mu)] += weight;
  }
  Rational total;
  for (auto& [mu, weight] : merged) {
    if (weight.is_zero()) continue;
    total += weight;
    entries_.emplace_back(mu, std::move(weight));
  }
  if (entries_.empty()) throw InputError("lottery has empty support");
  const int n = entries_.front().first.agent_count();
  for (const auto& entry : entries_) {
    if (entry.first.agent_count() != n) {
      throw InputError("lottery mixes assignments of different sizes");
    }
  }
  if (total != Rational(1)) {
    throw InputError("lottery weights sum to " + total.ToString() +
                     ", not 1");
  }
}

Lottery Lottery::Degenerate(Assignment mu) {
  return Lottery({{std::move(mu), Rational(1)}});
}

std::vector<Assignment> Lottery::support() const {
  std::vector<Assignment> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.first);
  return out;
}

Rational Lottery::probability(const Assignment& mu) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), mu,
      [](const Entry& e, const Assignment& key) { return e.first < key; });
  if (it == entries_.end() || it->first != mu) return Rational();
  return it->second;
}

const Assignment& Lottery::SoleAssignment() const {
  if (!IsDegenerate()) throw ContractError("lottery is not degenerate");
  return entries_.front().first;
}

void Lottery::ValidateFor(const ObjectSpace& space, int agent_count) const {
  for (const auto& [mu, weight] : entries_) {
    if (mu.agent_count() != agent_count) {
      throw InputError("lottery assignment has wrong agent count");
    }
    mu.Validate(space);
  }
}

void LotteryAccumulator::Add(const Assignment& mu, const Rational& weight) {
  weights_[mu] += weight;
}

void LotteryAccumulator::Add(const Lottery& lottery, const Rational& scale) {
  for (const auto& [mu, weight] : lottery.entries()) {
    weights_[mu] += weight * scale;
  }
}

Lottery LotteryAccumulator::Build() && {
  std::vector<Lottery::Entry> entries;
  entries.reserve(weights_.size());
  for (auto& [mu, weight] : weights_) entries.emplace_back(mu, weight);
  return Lottery(std::move(entries));
}

}  // namespace rpcheck
