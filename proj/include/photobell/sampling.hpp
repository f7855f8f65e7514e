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

#include <random>
#include <vector>

#include "photobell/angles.hpp"
#include "photobell/fock_state.hpp"
#include "photobell/gaussian.hpp"
#include "photobell/transforms.hpp"

namespace photobell {

/// Seeded generators used by the property checks, the verifier and the
/// acceptance runs. All draws go through std::mt19937_64.
using Rng = std::mt19937_64;

AngleQuad random_quad(Rng& rng);
PolarizerAngles random_angles(Rng& rng);
/// Each amplitude uniform in the disk |z| <= max_abs.
CoherentAmplitudes random_coherent(Rng& rng, double max_abs);
/// Uniform on the probability simplex.
std::vector<double> random_simplex_weights(Rng& rng, int count);
/// Haar-random 4x4 unitary.
PassiveTransform random_passive(Rng& rng);

struct CoherentMixture {
  std::vector<double> weights;
  std::vector<CoherentAmplitudes> states;
};

/// Between 1 and 5 components, amplitudes in the disk of radius 2,
/// Dirichlet-uniform weights.
CoherentMixture random_coherent_mixture(Rng& rng);

/// G = S^T D S with S = O1 Z O2 (passive O's, single-mode squeezes Z with
/// |r| <= max_squeeze) and D a thermal diagonal with kappa_i in [kappa_min, 1].
GaussianState random_gaussian(Rng& rng, double max_squeeze, double kappa_min);

}  // namespace photobell
