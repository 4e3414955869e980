# Copyright 2026 The rpcheck Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Recomputes the frozen oracle records from scratch in Python.

Each record holds a profile, its Pareto set and the random priority lottery.
This script enumerates the domain itself, runs every priority order with
exact fractions and finds Pareto-efficient assignments by pairwise
dominance. It exits non-zero on the first disagreement.

Usage: independent_oracle.py FIXTURE.json [FIXTURE.json ...]
"""

import itertools
import json
import math
import sys
from fractions import Fraction


def domain_profiles(spec):
    labels = spec["objects"]
    null = spec.get("null")
    proper = [x for x in labels if x != null]
    if spec["domain"] == "null_last":
        prefs = [list(p) + [null] for p in itertools.permutations(proper)]
    else:
        prefs = [list(p) for p in itertools.permutations(labels)]
    # itertools.permutations of a sorted-by-index list is lexicographic.
    return [list(r) for r in itertools.product(prefs, repeat=spec["agents"])]


def feasible_assignments(spec):
    labels = spec["objects"]
    quota = dict(zip(labels, spec["quotas"]))
    out = []
    for mu in itertools.product(labels, repeat=spec["agents"]):
        if all(mu.count(x) <= quota[x] for x in labels):
            out.append(list(mu))
    return out


def random_priority(profile, spec):
    n = len(profile)
    weight = Fraction(1, math.factorial(n))
    lottery = {}
    for order in itertools.permutations(range(n)):
        left = dict(zip(spec["objects"], spec["quotas"]))
        mu = [None] * n
        for i in order:
            pick = next(x for x in profile[i] if left[x] > 0)
            left[pick] -= 1
            mu[i] = pick
        key = tuple(mu)
        lottery[key] = lottery.get(key, Fraction(0)) + weight
    return lottery


def pareto_set(profile, assignments):
    def rank(i, x):
        return profile[i].index(x)

    def dominates(nu, mu):
        weak = all(rank(i, nu[i]) <= rank(i, mu[i]) for i in range(len(mu)))
        strict = any(rank(i, nu[i]) < rank(i, mu[i]) for i in range(len(mu)))
        return weak and strict

    return [mu for mu in assignments
            if not any(dominates(nu, mu) for nu in assignments)]


def check(path):
    with open(path) as f:
        data = json.load(f)
    spec = data["domain"]
    profiles = domain_profiles(spec)
    records = data["records"]
    if len(records) != len(profiles):
        return f"{path}: {len(records)} records, expected {len(profiles)}"
    assignments = feasible_assignments(spec)
    order = {tuple(mu): k for k, mu in enumerate(assignments)}
    for profile, record in zip(profiles, records):
        encoding = ";".join(",".join(p) for p in profile)
        if record["profile"] != encoding:
            return f"{path}: profile {record['profile']} != {encoding}"
        expected = pareto_set(profile, assignments)
        if record["pareto_set"] != expected:
            return f"{path}: pareto set differs at {encoding}"
        rp = random_priority(profile, spec)
        got = {tuple(e["assignment"]): Fraction(e["prob"])
               for e in record["rp"]["entries"]}
        if got != rp:
            return f"{path}: random priority differs at {encoding}"
        keys = [tuple(e["assignment"]) for e in record["rp"]["entries"]]
        if keys != sorted(keys, key=order.__getitem__):
            return f"{path}: lottery entries out of order at {encoding}"
        if not set(rp) <= {tuple(mu) for mu in expected}:
            return f"{path}: random priority leaves the Pareto set at {encoding}"
    return None


def main(paths):
    failed = False
    for path in paths:
        error = check(path)
        if error:
            print("FAIL", error)
            failed = True
        else:
            print("ok", path)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
