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

#ifndef RPCHECK_SRC_AXIOMS_INTERNAL_H_
#define RPCHECK_SRC_AXIOMS_INTERNAL_H_

#include "rpcheck/axioms.h"
#include "scan.h"

namespace rpcheck::internal {

// Per-profile scans shared by the lottery-level and rule-level checks.
void ScanExPost(const Lottery& lottery, const Profile& profile, Scan& scan);
void ScanEqualTreatment(const Lottery& lottery, const Profile& profile,
                        Scan& scan);
void ScanEqualTreatmentMarginal(const MarginalMatrix& marginals,
                                const Profile& profile, Scan& scan);

}  // namespace rpcheck::internal

#endif  // RPCHECK_SRC_AXIOMS_INTERNAL_H_
