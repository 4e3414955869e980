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

#include "rpcheck/fixture_rules.h"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

#include "rpcheck/errors.h"

namespace rpcheck::fixtures {
namespace {

// Agent 0 holds `held`; the other two objects go to agents 1 and 2.
Assignment Arrange(ObjectIndex held, bool swapped) {
  std::vector<ObjectIndex> rest;
  for (ObjectIndex x = 0; x < 3; ++x) {
    if (x != held) rest.push_back(x);
  }
  if (swapped) std::swap(rest[0], rest[1]);
  return Assignment({held, rest[0], rest[1]});
}

struct Mass {
  Rational default_part;
  Rational swapped_part;
};

// Builds a table from per-rank masses that depend on agent 0's ranking.
TableRule FromRankMasses(
    const std::function<std::array<Mass, 3>(const Preference&,
                                            const ObjectSpace&)>& masses) {
  const auto domain = Abc3Domain();
  std::vector<Lottery> lotteries;
  for (const auto& profile : domain->profiles()) {
    const Preference& pref = profile.pref(0);
    const auto m = masses(pref, profile.space());
    LotteryAccumulator acc;
    for (int rank = 0; rank < 3; ++rank) {
      acc.Add(Arrange(pref.at(rank), false), m[rank].default_part);
      acc.Add(Arrange(pref.at(rank), true), m[rank].swapped_part);
    }
    lotteries.push_back(std::move(acc).Build());
  }
  return TableRule(domain, std::move(lotteries));
}

bool LabelBefore(const ObjectSpace& space, ObjectIndex x, ObjectIndex y) {
  return space.label(x) < space.label(y);
}

}  // namespace

std::shared_ptr<const ObjectSpace> AbcSpace() {
  static const auto space =
      std::make_shared<const ObjectSpace>(ObjectSpace::Unit({"a", "b", "c"}));
  return space;
}

DomainSpec Abc3Spec() {
  DomainSpec spec;
  spec.agent_count = 3;
  spec.space = AbcSpace();
  spec.tag = DomainTag::kFull;
  return spec;
}

std::shared_ptr<const Domain> Abc3Domain() {
  static const auto domain = std::make_shared<const Domain>(Abc3Spec());
  return domain;
}

TableRule UpperInvarianceViolator() {
  return FromRankMasses([](const Preference& pref, const ObjectSpace& space) {
    std::array<Mass, 3> m{Mass{Rational(1, 2), Rational(0)},
                          Mass{Rational(1, 3), Rational(0)},
                          Mass{Rational(1, 6), Rational(0)}};
    if (!LabelBefore(space, pref.at(1), pref.at(2))) {
      m[0] = Mass{Rational(1, 3), Rational(1, 6)};
    }
    return m;
  });
}

TableRule LowerInvarianceViolator() {
  return FromRankMasses([](const Preference& pref, const ObjectSpace& space) {
    std::array<Mass, 3> m{Mass{Rational(1, 4), Rational(1, 4)},
                          Mass{Rational(1, 6), Rational(1, 6)},
                          Mass{Rational(1, 6), Rational(0)}};
    if (!LabelBefore(space, pref.at(0), pref.at(1))) {
      m[2] = Mass{Rational(1, 12), Rational(1, 12)};
    }
    return m;
  });
}

TableRule AssignmentSwapViolator() {
  return FromRankMasses([](const Preference& pref, const ObjectSpace& space) {
    std::array<Mass, 3> m{Mass{Rational(1, 2), Rational(0)},
                          Mass{Rational(1, 2), Rational(0)},
                          Mass{Rational(0), Rational(0)}};
    if (pref.at(0) == space.IndexOf("a")) {
      m[0] = Mass{Rational(1, 4), Rational(1, 4)};
    }
    return m;
  });
}

TableRule SecondChoiceRule() {
  return FromRankMasses([](const Preference&, const ObjectSpace&) {
    return std::array<Mass, 3>{Mass{Rational(0), Rational(0)},
                               Mass{Rational(1), Rational(0)},
                               Mass{Rational(0), Rational(0)}};
  });
}

TableRule BossyRule() {
  const auto domain = Abc3Domain();
  const ObjectSpace& space = domain->space();
  const ObjectIndex a = space.IndexOf("a");
  const ObjectIndex b = space.IndexOf("b");
  const ObjectIndex c = space.IndexOf("c");
  std::vector<Lottery> lotteries;
  for (const auto& profile : domain->profiles()) {
    const bool b_first = profile.pref(0).Prefers(b, c);
    lotteries.push_back(Lottery::Degenerate(
        Assignment({a, b_first ? b : c, b_first ? c : b})));
  }
  return TableRule(domain, std::move(lotteries));
}

TableRule ConstantRule(const Assignment& mu) {
  const auto domain = Abc3Domain();
  std::vector<Lottery> lotteries(domain->size(), Lottery::Degenerate(mu));
  return TableRule(domain, std::move(lotteries));
}

std::vector<NamedFixture> AllFixtureRules() {
  std::vector<NamedFixture> out;
  out.push_back({"upper_invariance_violator", UpperInvarianceViolator(),
                 "agent 0 gets ranks with (1/2, 1/3, 1/6), others default; "
                 "rank-0 mass split 1/3 default + 1/6 swapped when the "
                 "second-ranked label sorts after the third",
                 "a-upper-inv"});
  out.push_back({"lower_invariance_violator", LowerInvarianceViolator(),
                 "rank 0: 1/4 default + 1/4 swapped; rank 1: 1/6 + 1/6; "
                 "rank 2: 1/6 default if the top label sorts before the "
                 "second, else 1/12 + 1/12",
                 "a-lower-inv"});
  out.push_back({"assignment_swap_violator", AssignmentSwapViolator(),
                 "agent 0 gets ranks with (1/2, 1/2, 0), others default; "
                 "rank-0 mass split 1/4 + 1/4 when the top object is a",
                 "a-swap-mono"});
  out.push_back({"second_choice", SecondChoiceRule(),
                 "agent 0 gets their reported second choice, others default",
                 ""});
  out.push_back({"bossy", BossyRule(),
                 "agent 0 always gets a; agents 1 and 2 get (b, c) if agent 0 "
                 "ranks b above c, else (c, b)",
                 ""});
  out.push_back({"constant_abc", ConstantRule(Assignment({0, 1, 2})),
                 "(a, b, c) at every profile", ""});
  return out;
}

Lottery CardinalShareRule(const UtilityProfile& u, const ObjectSpace& space) {
  if (u.agent_count() != 3 || space.object_count() != 3 || !space.is_unit()) {
    throw UnsupportedInputError(
        "the cardinal share rule needs 3 agents and 3 unit-quota objects");
  }
  Rational total;
  for (const auto& value : u.row(0)) {
    if (value.sign() <= 0) {
      throw InputError("the cardinal share rule needs positive utilities");
    }
    total += value;
  }
  LotteryAccumulator acc;
  for (ObjectIndex x = 0; x < 3; ++x) {
    acc.Add(Arrange(x, false), u.row(0)[x] / total);
  }
  return std::move(acc).Build();
}

}  // namespace rpcheck::fixtures
