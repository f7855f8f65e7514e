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

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "photobell/angles.hpp"
#include "photobell/fock_state.hpp"
#include "photobell/gaussian.hpp"
#include "photobell/rates.hpp"

namespace photobell {

enum class Verdict { obeys, violates_upper, violates_lower };

std::string_view to_string(Verdict verdict);

/// The Clauser-Horne combination
///   f = P(t1,t2) - P(t1,t2') + P(t1',t2) + P(t1',t2') - P(t1',-) - P(-,t2)
/// with admissible range [-P(-,-), 0].
struct ChScore {
  double f = 0.0;
  double lower_bound = 0.0;
  AngleQuad quad;
  Verdict verdict = Verdict::obeys;
  /// Rates at the unprimed setting (t1, t2).
  CoincidenceRates rates;
};

/// Any backend able to report the four rates for a polarizer setting. It
/// must be safe to call concurrently.
using RatesProvider = std::function<CoincidenceRates(const PolarizerAngles&)>;

/// Rates of a Fock state: each present polarizer rotates its beam, then
/// vacuum probabilities of the detected modes enter inclusion-exclusion.
CoincidenceRates coincidence_rates_fock(const FockDensityMatrix& rho, const PolarizerAngles& angles,
                                        const Tolerances& tol = default_tolerances());

/// Closed-form rates of a four-mode coherent state; the transmitted
/// amplitudes are z1 cos t1 + z2 sin t1 and z3 cos t2 + z4 sin t2.
CoincidenceRates coincidence_rates_coherent_closed(const CoherentAmplitudes& z,
                                                   const PolarizerAngles& angles);

/// Closed-form rates of the entangled two-photon state: sin^2(t1 + t2)/4,
/// 1/4, 1/4 and 1/2.
CoincidenceRates coincidence_rates_two_photon_closed(const PolarizerAngles& angles);

/// Evaluates f for a quadruple with four provider calls.
ChScore ch_score(const RatesProvider& provider, const AngleQuad& quad,
                 const Tolerances& tol = default_tolerances());

Verdict verdict_for(double f, double lower_bound, const Tolerances& tol = default_tolerances());

/// -XY <= xy - xy' + x'y + x'y' - Yx' - Xy <= 0 within `slack`. Throws
/// PreconditionViolated unless 0 <= x, x' <= X and 0 <= y, y' <= Y.
bool clauser_horne_lemma_check(double x, double xp, double y, double yp, double big_x,
                               double big_y, double slack = 1e-12);

RatesProvider fock_rates_provider(std::shared_ptr<const FockDensityMatrix> rho,
                                  const Tolerances& tol = default_tolerances());
RatesProvider gaussian_rates_provider(GaussianState state,
                                      const Tolerances& tol = default_tolerances());
RatesProvider coherent_rates_provider(const CoherentAmplitudes& z);
RatesProvider two_photon_rates_provider();
/// Rates are linear in the state, so a finite mixture of coherent states
/// has the weighted average of the closed forms.
RatesProvider coherent_mixture_rates_provider(std::vector<double> weights,
                                              std::vector<CoherentAmplitudes> states);

}  // namespace photobell
