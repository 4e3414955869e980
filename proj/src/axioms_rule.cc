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

#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "axioms_internal.h"
#include "rpcheck/axioms.h"
#include "rpcheck/errors.h"
#include "rpcheck/parallel.h"

namespace rpcheck {
namespace {

using internal::Scan;
using internal::ScanResult;

// One adjacent-swap deviation: agent i at profile r swaps the objects at
// ranks pos and pos+1, giving profile r2.
struct Swap {
  std::size_t r;
  std::size_t r2;
  AgentIndex i;
  int pos;
  ObjectIndex x;  // above y at R
  ObjectIndex y;
};

template <typename Fn>
void ForEachSwap(const Domain& d, std::size_t r, Fn&& fn) {
  for (AgentIndex i = 0; i < d.agent_count(); ++i) {
    const int k = d.pref_index(r, i);
    const Preference& pref = d.pref(k);
    for (const auto& [pos, k2] : d.neighbors(k)) {
      auto r2 = d.WithPreference(r, i, k2);
      if (!r2) continue;
      if (!fn(Swap{r, *r2, i, pos, pref.at(pos), pref.at(pos + 1)})) return;
    }
  }
}

// Every misreport from the domain's preference list, in list order.
template <typename Fn>
void ForEachMisreport(const Domain& d, std::size_t r, Fn&& fn) {
  for (AgentIndex i = 0; i < d.agent_count(); ++i) {
    const int k = d.pref_index(r, i);
    for (int k2 = 0; k2 < d.pref_count(); ++k2) {
      if (k2 == k) continue;
      auto r2 = d.WithPreference(r, i, k2);
      if (!r2) continue;
      if (!fn(i, *r2)) return;
    }
  }
}

Witness SwapWitness(const Tabulation& t, const Swap& s) {
  Witness w;
  w.profile = t.domain().profile(s.r);
  w.profile_prime = t.domain().profile(s.r2);
  w.agent = s.i;
  w.swap = std::make_pair(s.x, s.y);
  return w;
}

// Assignment-level equality for every mu whose agent-i object satisfies
// `selects`.
template <typename Select>
bool ScanAssignmentEquality(const Tabulation& t, const Swap& s,
                            Select&& selects, Scan& scan) {
  const auto& mus = t.domain().assignments();
  for (std::size_t m = 0; m < mus.size(); ++m) {
    if (!selects(mus[m][s.i])) continue;
    const Rational& a = t.prob(s.r, m);
    const Rational& b = t.prob(s.r2, m);
    if (!scan.Check(a == b, a, b, [&] {
          Witness w = SwapWitness(t, s);
          w.mu = mus[m];
          w.value = a;
          w.value_prime = b;
          return w;
        })) {
      return false;
    }
  }
  return true;
}

// Marginal equality f^{iz} for every object z satisfying `selects`.
template <typename Select>
bool ScanMarginalEquality(const Tabulation& t, const Swap& s,
                          Select&& selects, Scan& scan) {
  const MarginalMatrix& p = t.marginals(s.r);
  const MarginalMatrix& q = t.marginals(s.r2);
  for (ObjectIndex z = 0; z < p.object_count(); ++z) {
    if (!selects(z)) continue;
    const Rational& a = p.at(s.i, z);
    const Rational& b = q.at(s.i, z);
    if (!scan.Check(a == b, a, b, [&] {
          Witness w = SwapWitness(t, s);
          w.object = z;
          w.value = a;
          w.value_prime = b;
          return w;
        })) {
      return false;
    }
  }
  return true;
}

void ScanPairwiseResponsiveness(const Tabulation& t, std::size_t r,
                                Scan& scan) {
  ForEachSwap(t.domain(), r, [&](const Swap& s) {
    return ScanAssignmentEquality(
        t, s, [&](ObjectIndex z) { return z != s.x && z != s.y; }, scan);
  });
}

void ScanAssignmentUpperInvariance(const Tabulation& t, std::size_t r,
                                   Scan& scan) {
  const Domain& d = t.domain();
  ForEachSwap(d, r, [&](const Swap& s) {
    const Preference& pref = d.pref(d.pref_index(r, s.i));
    return ScanAssignmentEquality(
        t, s, [&](ObjectIndex z) { return pref.rank_of(z) < s.pos; }, scan);
  });
}

void ScanAssignmentLowerInvariance(const Tabulation& t, std::size_t r,
                                   Scan& scan) {
  const Domain& d = t.domain();
  ForEachSwap(d, r, [&](const Swap& s) {
    const Preference& pref = d.pref(d.pref_index(r, s.i));
    return ScanAssignmentEquality(
        t, s, [&](ObjectIndex z) { return pref.rank_of(z) > s.pos + 1; },
        scan);
  });
}

void ScanUpperInvariance(const Tabulation& t, std::size_t r, Scan& scan) {
  const Domain& d = t.domain();
  ForEachSwap(d, r, [&](const Swap& s) {
    const Preference& pref = d.pref(d.pref_index(r, s.i));
    return ScanMarginalEquality(
        t, s, [&](ObjectIndex z) { return pref.rank_of(z) < s.pos; }, scan);
  });
}

void ScanLowerInvariance(const Tabulation& t, std::size_t r, Scan& scan) {
  const Domain& d = t.domain();
  ForEachSwap(d, r, [&](const Swap& s) {
    const Preference& pref = d.pref(d.pref_index(r, s.i));
    return ScanMarginalEquality(
        t, s, [&](ObjectIndex z) { return pref.rank_of(z) > s.pos + 1; },
        scan);
  });
}

void ScanAssignmentSwapMonotonicity(const Tabulation& t, std::size_t r,
                                    Scan& scan) {
  const auto& mus = t.domain().assignments();
  ForEachSwap(t.domain(), r, [&](const Swap& s) {
    bool all_equal = true;
    for (std::size_t m = 0; m < mus.size(); ++m) {
      if (mus[m][s.i] != s.y) continue;
      const Rational& a = t.prob(s.r, m);
      const Rational& b = t.prob(s.r2, m);
      if (a != b) all_equal = false;
      if (!scan.Check(b >= a, a, b, [&] {
            Witness w = SwapWitness(t, s);
            w.component = "i";
            w.mu = mus[m];
            w.value = a;
            w.value_prime = b;
            return w;
          })) {
        return false;
      }
    }
    if (!all_equal) return true;
    std::size_t first_diff = mus.size();
    for (std::size_t m = 0; m < mus.size(); ++m) {
      if (t.prob(s.r, m) != t.prob(s.r2, m)) {
        first_diff = m;
        break;
      }
    }
    const bool ok = first_diff == mus.size();
    const Rational a = ok ? Rational(0) : t.prob(s.r, first_diff);
    const Rational b = ok ? Rational(0) : t.prob(s.r2, first_diff);
    return scan.Check(ok, a, b, [&] {
      Witness w = SwapWitness(t, s);
      w.component = "ii";
      w.mu = mus[first_diff];
      w.value = a;
      w.value_prime = b;
      return w;
    });
  });
}

void ScanSwapMonotonicity(const Tabulation& t, std::size_t r, Scan& scan) {
  ForEachSwap(t.domain(), r, [&](const Swap& s) {
    const MarginalMatrix& p = t.marginals(s.r);
    const MarginalMatrix& q = t.marginals(s.r2);
    const Rational& a = p.at(s.i, s.y);
    const Rational& b = q.at(s.i, s.y);
    if (!scan.Check(b >= a, a, b, [&] {
          Witness w = SwapWitness(t, s);
          w.component = "i";
          w.object = s.y;
          w.value = a;
          w.value_prime = b;
          return w;
        })) {
      return false;
    }
    if (a != b) return true;
    ObjectIndex first_diff = -1;
    for (ObjectIndex z = 0; z < p.object_count(); ++z) {
      if (p.at(s.i, z) != q.at(s.i, z)) {
        first_diff = z;
        break;
      }
    }
    const bool ok = first_diff < 0;
    const Rational pa = ok ? Rational(0) : p.at(s.i, first_diff);
    const Rational pb = ok ? Rational(0) : q.at(s.i, first_diff);
    return scan.Check(ok, pa, pb, [&] {
      Witness w = SwapWitness(t, s);
      w.component = "ii";
      w.object = first_diff;
      w.value = pa;
      w.value_prime = pb;
      return w;
    });
  });
}

// Shared body of both non-bossiness variants for one deviation r -> r2.
bool ScanNonbossinessPair(const Tabulation& t, std::size_t r, std::size_t r2,
                          AgentIndex i, std::optional<Swap> swap,
                          Scan& scan) {
  const auto& mus = t.domain().assignments();
  const MarginalMatrix& p = t.marginals(r);
  const MarginalMatrix& q = t.marginals(r2);
  for (ObjectIndex z = 0; z < p.object_count(); ++z) {
    if (p.at(i, z) != q.at(i, z)) continue;
    for (std::size_t m = 0; m < mus.size(); ++m) {
      if (mus[m][i] != z) continue;
      const Rational& a = t.prob(r, m);
      const Rational& b = t.prob(r2, m);
      if (!scan.Check(a == b, a, b, [&] {
            Witness w;
            if (swap) {
              w = SwapWitness(t, *swap);
            } else {
              w.profile = t.domain().profile(r);
              w.profile_prime = t.domain().profile(r2);
              w.agent = i;
            }
            w.object = z;
            w.mu = mus[m];
            w.value = a;
            w.value_prime = b;
            return w;
          })) {
        return false;
      }
    }
  }
  return true;
}

void ScanWeakNonbossiness(const Tabulation& t, std::size_t r, Scan& scan) {
  ForEachSwap(t.domain(), r, [&](const Swap& s) {
    return ScanNonbossinessPair(t, s.r, s.r2, s.i, s, scan);
  });
}

void ScanNonbossiness(const Tabulation& t, std::size_t r, Scan& scan) {
  ForEachMisreport(t.domain(), r, [&](AgentIndex i, std::size_t r2) {
    return ScanNonbossinessPair(t, r, r2, i, std::nullopt, scan);
  });
}

void ScanStrategyProofness(const Tabulation& t, std::size_t r, Scan& scan) {
  const Domain& d = t.domain();
  ForEachMisreport(d, r, [&](AgentIndex i, std::size_t r2) {
    const Preference& pref = d.pref(d.pref_index(r, i));
    const auto truthful = t.marginals(r).row(i);
    const auto misreport = t.marginals(r2).row(i);
    Rational a;
    Rational b;
    // Prefixes short of the full set; the full set sums to one on both sides.
    for (int rank = 0; rank + 1 < pref.size(); ++rank) {
      const ObjectIndex x = pref.at(rank);
      a += truthful[x];
      b += misreport[x];
      if (!scan.Check(a >= b, a, b, [&] {
            Witness w;
            w.profile = d.profile(r);
            w.profile_prime = d.profile(r2);
            w.agent = i;
            w.object = x;
            w.value = a;
            w.value_prime = b;
            w.detail = "cumulative probability down to the object";
            return w;
          })) {
        return false;
      }
    }
    return true;
  });
}

// subset[(x * P + k1) * P + k2]: U(x, pref k2) is contained in U(x, pref k1).
std::vector<char> ContourSubsetTable(const Domain& d) {
  const int objects = d.space().object_count();
  const int prefs = d.pref_count();
  std::vector<char> table(static_cast<std::size_t>(objects) * prefs * prefs);
  for (ObjectIndex x = 0; x < objects; ++x) {
    for (int k1 = 0; k1 < prefs; ++k1) {
      for (int k2 = 0; k2 < prefs; ++k2) {
        const Preference& from = d.pref(k1);
        const Preference& to = d.pref(k2);
        bool ok = true;
        for (int rank = 0; rank < to.rank_of(x) && ok; ++rank) {
          ok = from.Prefers(to.at(rank), x);
        }
        table[(static_cast<std::size_t>(x) * prefs + k1) * prefs + k2] = ok;
      }
    }
  }
  return table;
}

class MonotoneTest {
 public:
  explicit MonotoneTest(const Domain& d)
      : d_(d), prefs_(d.pref_count()), table_(ContourSubsetTable(d)) {}

  bool operator()(std::size_t r, std::size_t r2, const Assignment& mu) const {
    for (AgentIndex i = 0; i < d_.agent_count(); ++i) {
      const std::size_t key =
          (static_cast<std::size_t>(mu[i]) * prefs_ + d_.pref_index(r, i)) *
              prefs_ +
          d_.pref_index(r2, i);
      if (!table_[key]) return false;
    }
    return true;
  }

 private:
  const Domain& d_;
  std::size_t prefs_;
  std::vector<char> table_;
};

void ScanProbabilisticMonotonicity(const Tabulation& t,
                                   const MonotoneTest& monotone,
                                   std::size_t r, Scan& scan) {
  const Domain& d = t.domain();
  const auto& mus = d.assignments();
  for (std::size_t r2 = 0; r2 < d.size(); ++r2) {
    for (std::size_t m = 0; m < mus.size(); ++m) {
      if (!monotone(r, r2, mus[m])) continue;
      const Rational& a = t.prob(r, m);
      const Rational& b = t.prob(r2, m);
      if (!scan.Check(b >= a, a, b, [&] {
            Witness w;
            w.profile = d.profile(r);
            w.profile_prime = d.profile(r2);
            w.mu = mus[m];
            w.value = a;
            w.value_prime = b;
            return w;
          })) {
        return;
      }
    }
  }
}

void ScanMaskin(const Tabulation& t, const MonotoneTest& monotone,
                std::size_t r, Scan& scan) {
  const Domain& d = t.domain();
  const Assignment& mu = t.lottery(r).SoleAssignment();
  for (std::size_t r2 = 0; r2 < d.size(); ++r2) {
    if (!monotone(r, r2, mu)) continue;
    const Assignment& nu = t.lottery(r2).SoleAssignment();
    const Rational b = nu == mu ? Rational(1) : Rational(0);
    if (!scan.Check(nu == mu, Rational(1), b, [&] {
          Witness w;
          w.profile = d.profile(r);
          w.profile_prime = d.profile(r2);
          w.mu = mu;
          w.mu_prime = nu;
          w.value = Rational(1);
          w.value_prime = b;
          return w;
        })) {
      return;
    }
  }
}

void RequirePairScanSize(const Tabulation& t, const CheckOptions& options) {
  if (t.size() > options.max_pair_profiles) {
    throw ResourceError("pairwise scan over " + std::to_string(t.size()) +
                        " profiles exceeds the limit of " +
                        std::to_string(options.max_pair_profiles));
  }
}

ScanResult RunAxiomScan(AxiomId axiom, const Tabulation& t,
                        const CheckOptions& options, bool tally) {
  const int workers = options.workers;
  auto run = [&](auto&& per_profile) {
    return internal::RunScan(t.size(), workers, tally, per_profile);
  };
  switch (axiom) {
    case AxiomId::kExPostEfficiency:
      return run([&](std::size_t r, Scan& s) {
        internal::ScanExPost(t.lottery(r), t.domain().profile(r), s);
      });
    case AxiomId::kEqualTreatment:
      return run([&](std::size_t r, Scan& s) {
        internal::ScanEqualTreatment(t.lottery(r), t.domain().profile(r), s);
      });
    case AxiomId::kEqualTreatmentMarginal:
      return run([&](std::size_t r, Scan& s) {
        internal::ScanEqualTreatmentMarginal(t.marginals(r),
                                             t.domain().profile(r), s);
      });
    case AxiomId::kProbabilisticMonotonicity: {
      RequirePairScanSize(t, options);
      const MonotoneTest monotone(t.domain());
      return run([&](std::size_t r, Scan& s) {
        ScanProbabilisticMonotonicity(t, monotone, r, s);
      });
    }
    case AxiomId::kMaskinMonotonicity: {
      RequirePairScanSize(t, options);
      for (const auto& lottery : t.lotteries()) {
        if (!lottery.IsDegenerate()) {
          throw ContractError(
              "Maskin monotonicity needs a deterministic rule");
        }
      }
      const MonotoneTest monotone(t.domain());
      return run([&](std::size_t r, Scan& s) {
        ScanMaskin(t, monotone, r, s);
      });
    }
    case AxiomId::kStrategyProofness:
      return run([&](std::size_t r, Scan& s) {
        ScanStrategyProofness(t, r, s);
      });
    case AxiomId::kSwapMonotonicity:
      return run([&](std::size_t r, Scan& s) { ScanSwapMonotonicity(t, r, s); });
    case AxiomId::kUpperInvariance:
      return run([&](std::size_t r, Scan& s) { ScanUpperInvariance(t, r, s); });
    case AxiomId::kLowerInvariance:
      return run([&](std::size_t r, Scan& s) { ScanLowerInvariance(t, r, s); });
    case AxiomId::kAssignmentSwapMonotonicity:
      return run([&](std::size_t r, Scan& s) {
        ScanAssignmentSwapMonotonicity(t, r, s);
      });
    case AxiomId::kAssignmentUpperInvariance:
      return run([&](std::size_t r, Scan& s) {
        ScanAssignmentUpperInvariance(t, r, s);
      });
    case AxiomId::kAssignmentLowerInvariance:
      return run([&](std::size_t r, Scan& s) {
        ScanAssignmentLowerInvariance(t, r, s);
      });
    case AxiomId::kPairwiseResponsiveness:
      return run([&](std::size_t r, Scan& s) {
        ScanPairwiseResponsiveness(t, r, s);
      });
    case AxiomId::kWeakObjectNonbossiness:
      return run([&](std::size_t r, Scan& s) { ScanWeakNonbossiness(t, r, s); });
    case AxiomId::kObjectNonbossiness:
      return run([&](std::size_t r, Scan& s) { ScanNonbossiness(t, r, s); });
    case AxiomId::kProbabilisticMonotonicityLocal: {
      ScanResult total;
      for (AxiomId part : {AxiomId::kAssignmentSwapMonotonicity,
                           AxiomId::kAssignmentUpperInvariance,
                           AxiomId::kAssignmentLowerInvariance}) {
        ScanResult sub = RunAxiomScan(part, t, options, tally);
        total.checked += sub.checked;
        total.violations += sub.violations;
        total.slack += sub.slack;
        if (sub.witness && !total.witness) {
          total.witness = std::move(sub.witness);
          total.witness->component = std::string(AxiomName(part)) +
                                     (total.witness->component.empty()
                                          ? ""
                                          : ":" + total.witness->component);
        }
      }
      return total;
    }
    case AxiomId::kOrdinality:
      throw InputError(
          "ordinality is checked on utility samples, not on a domain");
  }
  throw InputError("unknown axiom id");
}

}  // namespace

Tabulation::Tabulation(std::shared_ptr<const Domain> domain,
                       std::vector<Lottery> lotteries, int workers)
    : domain_(std::move(domain)), lotteries_(std::move(lotteries)) {
  if (!domain_) throw InputError("tabulation without domain");
  if (lotteries_.size() != domain_->size()) {
    throw InputError("tabulation size differs from the domain size");
  }
  const Domain& d = *domain_;
  assignment_count_ = d.assignments().size();
  dense_.assign(lotteries_.size() * assignment_count_, Rational());
  marginals_.assign(lotteries_.size(),
                    MarginalMatrix(d.agent_count(), d.space().object_count()));
  ForEachChunk(lotteries_.size(), workers,
               [&](std::size_t, std::size_t begin, std::size_t end) {
                 for (std::size_t r = begin; r < end; ++r) {
                   const Lottery& lottery = lotteries_[r];
                   lottery.ValidateFor(d.space(), d.agent_count());
                   for (const auto& [mu, w] : lottery.entries()) {
                     auto m = d.AssignmentIndexOf(mu);
                     if (!m) {
                       throw InputError("assignment outside the domain");
                     }
                     dense_[r * assignment_count_ + *m] = w;
                   }
                   marginals_[r] =
                       Marginals(lottery, d.agent_count(), d.space());
                 }
               });
}

Tabulation Tabulation::Build(const RuleHandle& rule,
                             std::shared_ptr<const Domain> domain,
                             int workers) {
  std::vector<std::optional<Lottery>> slots(domain->size());
  ForEachChunk(domain->size(), workers,
               [&](std::size_t, std::size_t begin, std::size_t end) {
                 for (std::size_t r = begin; r < end; ++r) {
                   slots[r] = rule.Evaluate(domain->profile(r));
                 }
               });
  std::vector<Lottery> lotteries;
  lotteries.reserve(slots.size());
  for (auto& slot : slots) lotteries.push_back(std::move(*slot));
  return Tabulation(std::move(domain), std::move(lotteries), workers);
}

Tabulation Tabulation::FromTable(const TableRule& table) {
  return Tabulation(table.domain_ptr(), table.lotteries(), 1);
}

Tabulation Tabulation::FromLotteries(std::shared_ptr<const Domain> domain,
                                     std::vector<Lottery> lotteries) {
  return Tabulation(std::move(domain), std::move(lotteries), 1);
}

AxiomVerdict CheckRuleAxiom(AxiomId axiom, const Tabulation& table,
                            const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ScanResult result = RunAxiomScan(axiom, table, options, false);
  AxiomVerdict verdict;
  verdict.axiom = axiom;
  verdict.checked = result.checked;
  verdict.passed = !result.witness.has_value();
  verdict.witness = std::move(result.witness);
  verdict.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return verdict;
}

AxiomVerdict CheckRuleAxiom(AxiomId axiom, const RuleHandle& rule,
                            std::shared_ptr<const Domain> domain,
                            const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Tabulation table =
      Tabulation::Build(rule, std::move(domain), options.workers);
  AxiomVerdict verdict = CheckRuleAxiom(axiom, table, options);
  verdict.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return verdict;
}

ViolationTally CountViolations(AxiomId axiom, const Tabulation& table,
                               const CheckOptions& options) {
  ScanResult result = RunAxiomScan(axiom, table, options, true);
  return ViolationTally{result.violations, result.slack, result.checked};
}

AxiomVerdict CheckOrdinality(const UtilityRule& rule,
                             std::span<const UtilityProfile> samples,
                             std::shared_ptr<const ObjectSpace> space) {
  const auto start = std::chrono::steady_clock::now();
  AxiomVerdict verdict;
  verdict.axiom = AxiomId::kOrdinality;
  std::map<std::string, std::pair<std::size_t, Lottery>> first_seen;
  for (std::size_t k = 0; k < samples.size() && verdict.passed; ++k) {
    const Profile ordinal = InducedOrdinalProfile(samples[k], space);
    Lottery lottery = rule(samples[k]);
    auto [it, inserted] = first_seen.try_emplace(
        ordinal.Encode(), std::make_pair(k, lottery));
    if (inserted) continue;
    ++verdict.checked;
    const Lottery& earlier = it->second.second;
    if (earlier == lottery) continue;
    // First assignment, in canonical order, whose probability differs.
    std::optional<Assignment> differing;
    for (const auto& [mu, w] : earlier.entries()) {
      if (lottery.probability(mu) != w) {
        differing = mu;
        break;
      }
    }
    if (!differing) {
      for (const auto& [mu, w] : lottery.entries()) {
        if (earlier.probability(mu) != w) {
          differing = mu;
          break;
        }
      }
    }
    Witness w;
    w.profile = ordinal;
    w.mu = differing;
    w.value = earlier.probability(*differing);
    w.value_prime = lottery.probability(*differing);
    w.detail = "utility samples " + std::to_string(it->second.first) +
               " and " + std::to_string(k) +
               " induce the same ordinal profile";
    verdict.passed = false;
    verdict.witness = std::move(w);
  }
  verdict.runtime_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return verdict;
}

}  // namespace rpcheck
