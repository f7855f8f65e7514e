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

#include <array>

#include "photobell/angles.hpp"
#include "photobell/tolerances.hpp"

namespace photobell {

/// The four measurable coincidence probabilities for one polarizer setting:
/// both polarizers in, only the first, only the second, neither.
struct CoincidenceRates {
  double p_tt = 0.0;
  double p_t_ = 0.0;
  double p__t = 0.0;
  double p__ = 0.0;
  PolarizerAngles angles;
};

/// Vacuum probabilities feeding the inclusion-exclusion formula.
///
/// Index 0 is the detector region behind the polarizer (the transmitted
/// mode), index 1 the open beam (both polarization modes). With a polarizer
/// removed both indices refer to the open beam.
struct VacuumProbabilities {
  std::array<double, 2> beam1{};
  std::array<double, 2> beam2{};
  std::array<std::array<double, 2>, 2> joint{};
};

/// Clamps values within `tol.probability_slack` of [0, 1]; throws
/// ProbabilityOutOfRange for larger excursions.
double clamp_probability(double p, const Tolerances& tol = default_tolerances());

/// P = 1 - P0(D1) - P0(D2) + P0(D1 and D2) for each of the four settings.
CoincidenceRates rates_from_vacuum(const VacuumProbabilities& vac, const PolarizerAngles& angles,
                                   const Tolerances& tol = default_tolerances());

}  // namespace photobell
