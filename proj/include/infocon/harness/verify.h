// Copyright 2026 The Infocon Authors
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

#ifndef INFOCON_HARNESS_VERIFY_H_
#define INFOCON_HARNESS_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace infocon {

struct CheckResult {
  std::string name;
  bool passed = false;
  // Measured quantities behind the verdict. Never includes timings, so the
  // report text depends on the seed alone.
  std::string detail;
};

// Decoded one-bit quantizer output averages back to g: d = 8, B = 1,
// 20 random g, 10^6 draws each, every coordinate within 5 standard errors.
CheckResult CheckQuantizerUnbiased(uint64_t seed);

// Randomized response attains exactly eps (1e-12) for eps in {0.1, 0.5, 1};
// the vector mechanism restricted to a 3x3 input grid in d = 2 stays within
// eps + 1e-9.
CheckResult CheckLdpExactness();

// Grid-computed psi against its closed forms for both families, 20 random
// draws with 2 delta <= (1 - theta) / (1 + theta), 1e-3 relative.
CheckResult CheckPsiClosedForms(uint64_t seed);

// B / alpha >= D sqrt(d) / 4 with D = b on 100 random strongly convex
// instances.
CheckResult CheckBAlphaBound(uint64_t seed);

// Unbiasedness and the hard norm bound for all four instance families at
// 100 random query points each, plus strongly convex gradients against
// central differences at 1e-4 relative.
CheckResult CheckOracleFidelity(uint64_t seed);

std::vector<CheckResult> RunVerifySuite(uint64_t seed);

// One "PASS name: detail" or "FAIL name: detail" line per check, then a
// summary line.
std::string FormatReport(const std::vector<CheckResult>& results);

bool AllPassed(const std::vector<CheckResult>& results);

}  // namespace infocon

#endif  // INFOCON_HARNESS_VERIFY_H_
