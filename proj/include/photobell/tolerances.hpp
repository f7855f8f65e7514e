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

namespace photobell {

/// Numerical tolerance constants shared by every engine.
///
/// A single record is passed (by const reference, defaulted) to each
/// operation that makes a tolerance decision, so tests and the CLI can
/// tighten or relax one knob without touching the others.
struct Tolerances {
  /// |rho_ij - conj(rho_ji)| bound for density matrices.
  double hermiticity = 1e-12;
  /// Least admissible eigenvalue of a density matrix.
  double psd_floor = -1e-10;
  /// Largest probability mass a Fock constructor may lose to truncation.
  double truncation = 1e-6;
  /// Largest thermal photon-number tail mass beyond the global cutoff.
  double thermal_tail = 1e-6;
  /// Thermal mixture components are kept until the dropped weight is below this.
  double thermal_component_mass = 1e-8;
  /// Agreement expected between the Fock and Gaussian engines.
  double cross_engine = 1e-4;
  /// Slack on the Clauser-Horne bounds before a violation is reported.
  double verdict = 1e-9;
  /// Probabilities within this distance outside [0, 1] are clamped.
  double probability_slack = 1e-10;
  /// Least admissible eigenvalue of G^-1 + i beta.
  double uncertainty_floor = -1e-10;
  /// Margin below 1/2 for the least noise eigenvalue to count as squeezing.
  double squeezing = 1e-12;
  /// Bound on |M^T beta M - beta| for symplectic matrices.
  double symplectic = 1e-10;
  /// Bound on |U^dagger U - I| for passive transforms.
  double unitarity = 1e-12;
  /// Bound on |G - G^T| for precision matrices.
  double symmetry = 1e-12;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tolerances{};
  return tolerances;
}

}  // namespace photobell
