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

// Internal: condition-by-condition scanning with either first-witness or
// tally semantics, and the deterministic chunked driver.

#ifndef RPCHECK_SRC_SCAN_H_
#define RPCHECK_SRC_SCAN_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rpcheck/axioms.h"
#include "rpcheck/parallel.h"

namespace rpcheck::internal {

class Scan {
 public:
  explicit Scan(bool tally) : tally_(tally) {}

  // Records one quantified condition. `lhs` / `rhs` are the compared values,
  // used for the slack of a violation. Returns false once the scan must stop.
  template <typename MakeWitness>
  bool Check(bool ok, const Rational& lhs, const Rational& rhs,
             MakeWitness&& make_witness) {
    ++checked_;
    if (ok) return true;
    ++violations_;
    if (tally_) {
      slack_ += Abs(lhs - rhs);
      return true;
    }
    witness_ = make_witness();
    return false;
  }

  bool stopped() const { return witness_.has_value(); }
  std::uint64_t checked() const { return checked_; }
  std::uint64_t violations() const { return violations_; }
  const Rational& slack() const { return slack_; }
  std::optional<Witness>& witness() { return witness_; }

 private:
  bool tally_;
  std::uint64_t checked_ = 0;
  std::uint64_t violations_ = 0;
  Rational slack_;
  std::optional<Witness> witness_;
};

struct ScanResult {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  Rational slack;
  std::optional<Witness> witness;
};

// Runs fn(index, scan) over [0, count) in contiguous chunks. In witness mode
// each chunk stops at its first violation and the merge keeps the earliest
// one, counting only conditions up to it, so results do not depend on the
// worker count.
template <typename Fn>
ScanResult RunScan(std::size_t count, int workers, bool tally, Fn&& fn) {
  std::vector<Scan> scans;
  const std::size_t chunks = std::max<std::size_t>(
      1, std::min<std::size_t>(count,
                               static_cast<std::size_t>(std::max(workers, 1))));
  scans.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) scans.emplace_back(tally);
  ForEachChunk(count, static_cast<int>(chunks),
               [&](std::size_t c, std::size_t begin, std::size_t end) {
                 Scan& scan = scans[c];
                 for (std::size_t r = begin; r < end && !scan.stopped(); ++r) {
                   fn(r, scan);
                 }
               });
  ScanResult result;
  for (auto& scan : scans) {
    result.checked += scan.checked();
    result.violations += scan.violations();
    result.slack += scan.slack();
    if (scan.stopped()) {
      result.witness = std::move(scan.witness());
      break;
    }
  }
  return result;
}

}  // namespace rpcheck::internal

#endif  // RPCHECK_SRC_SCAN_H_
