// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Invariant suites behind the verify verb.

#ifndef SKEWMAT_TOOLS_VERIFY_H_
#define SKEWMAT_TOOLS_VERIFY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewmat/skew_ring.h"

namespace skewmat::cli {

struct Check {
  std::string name;
  uint64_t count = 0;
  bool pass = true;
  // Set on the first failure.
  std::string counterexample;
};

struct SuiteResult {
  std::string suite;
  // "exhaustive" or "sampled".
  std::string mode;
  std::vector<Check> checks;
  bool skipped = false;
  std::string skip_reason;
  // Extra counters reported as-is, e.g. cases skipped above the table cap.
  std::vector<std::pair<std::string, uint64_t>> notes;

  bool pass() const;
};

struct VerifyOptions {
  uint64_t seed = 0;
  uint64_t trials = 100;
  // Sample when a set is too large to enumerate instead of failing.
  bool sampled = false;
};

// matroid-axioms, iso-phi, closure-lemmas, splitting, dual-ring, extension.
const std::vector<std::string>& SuiteNames();
bool IsSuiteName(std::string_view name);

// Throws kTableCapExceeded when exhaustive mode is too large and sampling
// was not requested, and kDeltaNotZero for suites that need delta = 0.
SuiteResult RunSuite(std::string_view name, const Ring& ring,
                     const VerifyOptions& opts);

// Every suite; those needing delta = 0 are marked skipped otherwise.
std::vector<SuiteResult> RunAllSuites(const Ring& ring, const VerifyOptions& opts);

}  // namespace skewmat::cli

#endif  // SKEWMAT_TOOLS_VERIFY_H_
