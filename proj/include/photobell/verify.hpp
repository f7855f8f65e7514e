// Copyright 2026 The Photobell Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace photobell {

struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  int cases = 0;
  bool passed = false;
};

struct VerifyReport {
  int cutoff = 0;
  double tolerance = 0.0;
  std::vector<SuiteResult> suites;
  bool passed = false;
};

/// Oracle suites at a given cutoff: Fock against the two-photon and coherent
/// closed forms, Fock against the Gaussian engine on the squeezed family,
/// and Bell obedience of random classical mixtures. Truncation errors are
/// reported as residuals instead of aborting.
VerifyReport run_verification(int cutoff, double tolerance, std::uint64_t seed = 0);

}  // namespace photobell
