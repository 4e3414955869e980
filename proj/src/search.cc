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

#include "rpcheck/search.h"

#include <algorithm>
#include <chrono>
#include <memory>
#include <random>
#include <string>
#include <utility>

#include "rpcheck/errors.h"

namespace rpcheck {
namespace {

struct Score {
  std::uint64_t violations = 0;
  Rational slack;

  bool operator<=(const Score& other) const {
    if (violations != other.violations) return violations < other.violations;
    return slack <= other.slack;
  }
};

Score ScoreOf(const Tabulation& table, const std::vector<AxiomId>& satisfy,
              const CheckOptions& check) {
  Score score;
  for (AxiomId axiom : satisfy) {
    const ViolationTally tally = CountViolations(axiom, table, check);
    score.violations += tally.violations;
    score.slack += tally.slack;
  }
  return score;
}

// Moves eps from mu_from to mu_to, then averages over agents with identical
// preferences.
Lottery Perturb(const Lottery& lottery, const Profile& profile,
                const Assignment& from, const Assignment& to,
                const Rational& eps) {
  LotteryAccumulator acc;
  acc.Add(lottery, Rational(1));
  acc.Add(from, Rational(0) - eps);
  acc.Add(to, eps);
  return SymmetrizeWithinEquals(std::move(acc).Build(), profile);
}

}  // namespace

SearchResult SearchCounterexample(const SearchRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  if (std::find(request.satisfy.begin(), request.satisfy.end(),
                request.violate) != request.satisfy.end()) {
    throw InputError("axiom '" + std::string(AxiomName(request.violate)) +
                     "' cannot be both satisfied and violated");
  }
  for (AxiomId axiom : request.satisfy) {
    if (axiom == AxiomId::kOrdinality) {
      throw InputError("ordinality cannot be searched over a domain");
    }
  }
  if (request.violate == AxiomId::kOrdinality) {
    throw InputError("ordinality cannot be searched over a domain");
  }

  const auto domain =
      std::make_shared<const Domain>(request.domain, request.options.max_profiles);
  CheckOptions check;
  check.workers = request.options.workers;
  check.max_pair_profiles = request.options.max_pair_profiles;

  const RuleHandle rp =
      RuleHandle::RandomPriority().WithLimits(request.options.limits);
  std::vector<Lottery> state =
      Tabulation::Build(rp, domain, request.options.workers).lotteries();

  // Pareto-efficient assignments per profile, by domain assignment index.
  std::vector<std::vector<std::size_t>> efficient(domain->size());
  for (std::size_t r = 0; r < domain->size(); ++r) {
    const auto& mus = domain->assignments();
    for (std::size_t m = 0; m < mus.size(); ++m) {
      if (IsParetoEfficient(mus[m], domain->profile(r))) {
        efficient[r].push_back(m);
      }
    }
  }

  std::mt19937_64 rng(request.seed);
  const Rational steps_eps[] = {Rational(1, 24), Rational(1, 12),
                                Rational(1, 6)};
  Score current =
      ScoreOf(Tabulation::FromLotteries(domain, state), request.satisfy, check);

  SearchSummary summary;
  summary.seed = request.seed;
  summary.budget = request.budget;
  summary.satisfy = request.satisfy;
  summary.violate = request.violate;

  for (std::uint64_t step = 0; step < request.budget && !summary.found;
       ++step) {
    ++summary.steps;
    const std::size_t r = rng() % domain->size();
    const Lottery& lottery = state[r];
    const auto& entries = lottery.entries();
    const auto& [from, available] = entries[rng() % entries.size()];
    std::vector<std::size_t> targets;
    for (std::size_t m : efficient[r]) {
      if (domain->assignments()[m] != from) targets.push_back(m);
    }
    if (targets.empty()) continue;
    const Assignment& to = domain->assignments()[targets[rng() % targets.size()]];
    Rational eps = steps_eps[rng() % 3];
    if (available < eps) eps = available;

    Lottery moved = Perturb(lottery, domain->profile(r), from, to, eps);
    if (moved == lottery) continue;
    std::vector<Lottery> candidate = state;
    candidate[r] = std::move(moved);
    const Tabulation table = Tabulation::FromLotteries(domain, candidate);
    Score score = ScoreOf(table, request.satisfy, check);
    if (!(score <= current)) continue;

    state = std::move(candidate);
    current = std::move(score);
    ++summary.accepted;
    if (current.violations == 0 &&
        !CheckRuleAxiom(request.violate, table, check).passed) {
      summary.found = true;
    }
  }

  SearchResult result;
  CampaignReport& report = result.report;
  report.campaign = "search";
  report.domain = request.domain;
  report.rule = summary.found ? "table:search-result" : "";
  report.totals = CountTotals(*domain);

  const Tabulation final_table = Tabulation::FromLotteries(domain, state);
  for (AxiomId axiom : request.satisfy) {
    report.verdicts.push_back(CheckRuleAxiom(axiom, final_table, check));
  }
  report.verdicts.push_back(
      CheckRuleAxiom(request.violate, final_table, check));

  if (summary.found) {
    auto table = std::make_shared<const TableRule>(domain, state);
    const RuleHandle handle = RuleHandle::Table(table);
    bool ok = WitnessIsGenuine(report.verdicts.back(), handle);
    for (std::size_t k = 0; k + 1 < report.verdicts.size(); ++k) {
      ok = ok && report.verdicts[k].passed;
    }
    summary.revalidated = ok;
    result.rule = *table;
  }
  report.passed = summary.found;
  report.status = summary.found ? "found" : "exhausted";
  report.note = summary.found
                    ? "rule found and re-validated by the axiom checkers"
                    : "no rule found within the step budget; this proves "
                      "nothing about existence";
  if (summary.found && !summary.revalidated) {
    report.passed = false;
    report.status = "fail";
    report.note = "found rule did not re-validate";
  }
  report.search = summary;
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return result;
}

}  // namespace rpcheck
