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

#ifndef RPCHECK_RULE_H_
#define RPCHECK_RULE_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rpcheck/domain.h"
#include "rpcheck/mechanisms.h"
#include "rpcheck/model.h"

namespace rpcheck {

// Explicit lottery for every profile of a finite domain.
class TableRule {
 public:
  // Throws InputError if the sizes differ or a lottery does not fit the
  // domain's object space.
  TableRule(std::shared_ptr<const Domain> domain,
            std::vector<Lottery> lotteries);

  // Evaluates `rule` at every profile of `domain`.
  static TableRule Tabulate(std::shared_ptr<const Domain> domain,
                            const ProfileRule& rule);

  const Domain& domain() const { return *domain_; }
  const std::shared_ptr<const Domain>& domain_ptr() const { return domain_; }
  const std::vector<Lottery>& lotteries() const { return lotteries_; }
  const Lottery& at(std::size_t profile_index) const {
    return lotteries_[profile_index];
  }

  // Throws LookupError for profiles outside the domain.
  const Lottery& Lookup(const Profile& profile) const;

  friend bool operator==(const TableRule& a, const TableRule& b) {
    return a.domain_->spec() == b.domain_->spec() &&
           a.lotteries_ == b.lotteries_;
  }

 private:
  std::shared_ptr<const Domain> domain_;
  std::vector<Lottery> lotteries_;
};

enum class CachePolicy { kNone, kMemoize };

// Evaluatable mechanism. Copies share the memo cache (if any); cached and
// uncached evaluation return identical lotteries.
class RuleHandle {
 public:
  struct SerialDictatorshipKind {
    PriorityOrder priority;
  };
  struct RandomPriorityKind {};
  struct TtcKind {
    Assignment endowment;
    // Object labels for Describe(); indices are printed when empty.
    std::vector<std::string> labels;
  };
  struct CoreRandomEndowmentsKind {};
  struct SymmetrizedKind {
    std::shared_ptr<const RuleHandle> inner;
  };
  struct OspExampleKind {};
  struct TableKind {
    std::shared_ptr<const TableRule> table;
    std::string path;
  };
  using Kind =
      std::variant<SerialDictatorshipKind, RandomPriorityKind, TtcKind,
                   CoreRandomEndowmentsKind, SymmetrizedKind, OspExampleKind,
                   TableKind>;

  explicit RuleHandle(Kind kind, CachePolicy cache = CachePolicy::kNone,
                      RpLimits limits = {});

  static RuleHandle SerialDictatorship(PriorityOrder priority);
  static RuleHandle RandomPriority();
  static RuleHandle Ttc(Assignment endowment,
                        std::vector<std::string> labels = {});
  static RuleHandle CoreFromRandomEndowments();
  static RuleHandle Symmetrized(RuleHandle inner);
  static RuleHandle OspExample();
  static RuleHandle Table(std::shared_ptr<const TableRule> table,
                          std::string path = "");

  const Kind& kind() const { return kind_; }
  CachePolicy cache_policy() const { return cache_policy_; }
  const RpLimits& limits() const { return limits_; }

  RuleHandle WithCache(CachePolicy policy) const;
  RuleHandle WithLimits(RpLimits limits) const;

  // Deterministic in the profile.
  Lottery Evaluate(const Profile& profile) const;

  // Human-readable name in the rule-spec language ("rp", "sd:0,1,2", ...).
  std::string Describe() const;

  ProfileRule AsFunction() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, Lottery> entries;
  };

  Lottery EvaluateUncached(const Profile& profile) const;

  Kind kind_;
  CachePolicy cache_policy_;
  RpLimits limits_;
  std::shared_ptr<Cache> cache_;
};

// Dispatches to the handle. Table rules return stored lotteries verbatim.
Lottery EvalRule(const RuleHandle& rule, const Profile& profile);

// Rule-spec mini language:
//   rp | core-re | osp-example | sd:2,0,1 | ttc:a,b,c | sym(<spec>) |
//   table:PATH
// Priority orders are agent indices; endowments are object labels.
RuleHandle ParseRuleSpec(std::string_view spec, const ObjectSpace& space);

// Reads a table rule file (see json_io.h for the format).
RuleHandle LoadTableRule(const std::string& path);

// eval_rule at the ordinal profile induced by `u`.
Lottery RuleOnUtilities(const RuleHandle& rule, const UtilityProfile& u,
                        std::shared_ptr<const ObjectSpace> space);

}  // namespace rpcheck

#endif  // RPCHECK_RULE_H_
