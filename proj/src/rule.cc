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

#include "rpcheck/rule.h"

#include <sstream>
#include <string>
#include <utility>

#include "rpcheck/errors.h"
#include "rpcheck/json_io.h"

namespace rpcheck {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string> SplitCommas(std::string_view text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

TableRule::TableRule(std::shared_ptr<const Domain> domain,
                     std::vector<Lottery> lotteries)
    : domain_(std::move(domain)), lotteries_(std::move(lotteries)) {
  if (!domain_) throw InputError("table rule without domain");
  if (lotteries_.size() != domain_->size()) {
    throw InputError("table rule has " + std::to_string(lotteries_.size()) +
                     " lotteries for " + std::to_string(domain_->size()) +
                     " profiles");
  }
  for (const auto& lottery : lotteries_) {
    lottery.ValidateFor(domain_->space(), domain_->agent_count());
  }
}

TableRule TableRule::Tabulate(std::shared_ptr<const Domain> domain,
                              const ProfileRule& rule) {
  std::vector<Lottery> lotteries;
  lotteries.reserve(domain->size());
  for (const auto& profile : domain->profiles()) {
    lotteries.push_back(rule(profile));
  }
  return TableRule(std::move(domain), std::move(lotteries));
}

const Lottery& TableRule::Lookup(const Profile& profile) const {
  auto index = domain_->IndexOf(profile);
  if (!index) {
    throw LookupError("profile " + profile.Encode() +
                      " is outside the table rule's domain");
  }
  return lotteries_[*index];
}

RuleHandle::RuleHandle(Kind kind, CachePolicy cache, RpLimits limits)
    : kind_(std::move(kind)), cache_policy_(cache), limits_(limits) {
  if (cache_policy_ == CachePolicy::kMemoize) {
    cache_ = std::make_shared<Cache>();
  }
}

RuleHandle RuleHandle::SerialDictatorship(PriorityOrder priority) {
  return RuleHandle(SerialDictatorshipKind{std::move(priority)});
}
RuleHandle RuleHandle::RandomPriority() {
  return RuleHandle(RandomPriorityKind{});
}
RuleHandle RuleHandle::Ttc(Assignment endowment,
                           std::vector<std::string> labels) {
  return RuleHandle(TtcKind{std::move(endowment), std::move(labels)});
}
RuleHandle RuleHandle::CoreFromRandomEndowments() {
  return RuleHandle(CoreRandomEndowmentsKind{});
}
RuleHandle RuleHandle::Symmetrized(RuleHandle inner) {
  return RuleHandle(
      SymmetrizedKind{std::make_shared<const RuleHandle>(std::move(inner))});
}
RuleHandle RuleHandle::OspExample() { return RuleHandle(OspExampleKind{}); }
RuleHandle RuleHandle::Table(std::shared_ptr<const TableRule> table,
                             std::string path) {
  return RuleHandle(TableKind{std::move(table), std::move(path)});
}

RuleHandle RuleHandle::WithCache(CachePolicy policy) const {
  return RuleHandle(kind_, policy, limits_);
}

RuleHandle RuleHandle::WithLimits(RpLimits limits) const {
  return RuleHandle(kind_, cache_policy_, limits);
}

Lottery RuleHandle::Evaluate(const Profile& profile) const {
  if (!cache_) return EvaluateUncached(profile);
  const std::string key = std::string(DomainTagName(profile.domain_tag())) +
                          "|" + profile.Encode();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (auto it = cache_->entries.find(key); it != cache_->entries.end()) {
      return it->second;
    }
  }
  Lottery result = EvaluateUncached(profile);
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->entries.try_emplace(key, std::move(result)).first->second;
}

Lottery RuleHandle::EvaluateUncached(const Profile& profile) const {
  return std::visit(
      Overloaded{
          [&](const SerialDictatorshipKind& k) {
            return Lottery::Degenerate(
                rpcheck::SerialDictatorship(profile, k.priority));
          },
          [&](const RandomPriorityKind&) {
            return rpcheck::RandomPriority(profile, limits_);
          },
          [&](const TtcKind& k) {
            return Lottery::Degenerate(TopTradingCycles(profile, k.endowment));
          },
          [&](const CoreRandomEndowmentsKind&) {
            return rpcheck::CoreFromRandomEndowments(profile, limits_);
          },
          [&](const SymmetrizedKind& k) {
            return rpcheck::Symmetrize(k.inner->AsFunction(), profile,
                                       limits_);
          },
          [&](const OspExampleKind&) {
            return Lottery::Degenerate(OspExampleRule(profile));
          },
          [&](const TableKind& k) { return k.table->Lookup(profile); },
      },
      kind_);
}

std::string RuleHandle::Describe() const {
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(v[k]);
    }
    return out;
  };
  return std::visit(
      Overloaded{
          [&](const SerialDictatorshipKind& k) {
            return "sd:" + join(k.priority.order());
          },
          [](const RandomPriorityKind&) { return std::string("rp"); },
          [&](const TtcKind& k) {
            if (k.labels.empty()) return "ttc:" + join(k.endowment.assigned());
            std::string out = "ttc:";
            for (std::size_t j = 0; j < k.labels.size(); ++j) {
              if (j > 0) out += ',';
              out += k.labels[j];
            }
            return out;
          },
          [](const CoreRandomEndowmentsKind&) {
            return std::string("core-re");
          },
          [](const SymmetrizedKind& k) {
            return "sym(" + k.inner->Describe() + ")";
          },
          [](const OspExampleKind&) { return std::string("osp-example"); },
          [](const TableKind& k) {
            return "table:" + (k.path.empty() ? std::string("<memory>")
                                              : k.path);
          },
      },
      kind_);
}

ProfileRule RuleHandle::AsFunction() const {
  return [self = *this](const Profile& profile) {
    return self.Evaluate(profile);
  };
}

Lottery EvalRule(const RuleHandle& rule, const Profile& profile) {
  return rule.Evaluate(profile);
}

RuleHandle ParseRuleSpec(std::string_view spec, const ObjectSpace& space) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  spec = strip(spec);
  if (spec == "rp") return RuleHandle::RandomPriority();
  if (spec == "core-re") return RuleHandle::CoreFromRandomEndowments();
  if (spec == "osp-example") return RuleHandle::OspExample();
  if (spec.starts_with("sym(") && spec.ends_with(")")) {
    return RuleHandle::Symmetrized(
        ParseRuleSpec(spec.substr(4, spec.size() - 5), space));
  }
  if (spec.starts_with("sd:")) {
    std::vector<AgentIndex> order;
    for (const auto& item : SplitCommas(spec.substr(3))) {
      try {
        std::size_t used = 0;
        order.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ParseError("bad agent index '" + item + "' in rule spec");
      }
    }
    return RuleHandle::SerialDictatorship(PriorityOrder(std::move(order)));
  }
  if (spec.starts_with("ttc:")) {
    std::vector<ObjectIndex> endowment;
    std::vector<std::string> labels = SplitCommas(spec.substr(4));
    for (const auto& label : labels) {
      endowment.push_back(space.IndexOf(label));
    }
    return RuleHandle::Ttc(Assignment(std::move(endowment)), std::move(labels));
  }
  if (spec.starts_with("table:")) {
    return LoadTableRule(std::string(spec.substr(6)));
  }
  throw ParseError("unknown rule spec '" + std::string(spec) + "'");
}

RuleHandle LoadTableRule(const std::string& path) {
  return RuleHandle::Table(
      std::make_shared<const TableRule>(ReadTableRuleFile(path)), path);
}

Lottery RuleOnUtilities(const RuleHandle& rule, const UtilityProfile& u,
                        std::shared_ptr<const ObjectSpace> space) {
  return rule.Evaluate(InducedOrdinalProfile(u, std::move(space)));
}

}  // namespace rpcheck
