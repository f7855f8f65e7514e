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

#include "photobell/angles.hpp"
#include "photobell/modes.hpp"
#include "photobell/rates.hpp"
#include "photobell/tolerances.hpp"
#include "photobell/transforms.hpp"

namespace photobell {

/// Outcome of the physical-state checks on a precision matrix.
struct ValidityReport {
  double symmetry_residual = 0.0;
  /// Least eigenvalue of G itself; must be positive.
  double least_eigenvalue = 0.0;
  /// Least eigenvalue of the Hermitian matrix G^-1 + i beta.
  double least_uncertainty_eigenvalue = 0.0;
  bool valid = false;
};

ValidityReport check_validity(const Matrix8d& g, const Tolerances& tol = default_tolerances());

/// Variance matrix V = G^-1 / 2.
struct NoiseMatrix {
  Matrix8d v;
  double least_eigenvalue = 0.0;
};

/// A centered Gaussian Wigner state W(xi) ~ exp(-xi^T G xi), with
/// xi = (q1..q4, p1..p4), q = (a† + a)/sqrt 2 and p = i(a† - a)/sqrt 2.
/// The vacuum has G = I.
class GaussianState {
 public:
  /// Throws InvalidGaussian unless check_validity passes.
  static GaussianState from_precision(const Matrix8d& g,
                                      const Tolerances& tol = default_tolerances());
  static GaussianState vacuum() { return from_precision(Matrix8d::Identity()); }

  const Matrix8d& precision() const { return g_; }
  double log_det() const { return log_det_; }
  NoiseMatrix noise() const;

 private:
  GaussianState(const Matrix8d& g, double log_det) : g_(g), log_det_(log_det) {}
  Matrix8d g_;
  double log_det_;
};

struct SqueezingReport {
  double least_noise_eigenvalue = 0.0;
  bool squeezed = false;
};

SqueezingReport squeezing_test(const GaussianState& state,
                               const Tolerances& tol = default_tolerances());

/// G = U^-1 S^T (kappa I) S U with S the diagonal squeeze and U the
/// symplectic image of `entangler`.
GaussianState make_gaussian(double kappa, SqueezeParams squeeze,
                            const PassiveTransform& entangler = PassiveTransform::identity());

/// Probability that every mode in `modes` is empty after the polarizer
/// rotations: 2^|m| sqrt(det G / det(R^T G R + sum_i (e_qi + e_pi))).
///
/// Mode 0 is read as the transmitted mode of the first polarizer when
/// theta1 is present, mode 2 likewise for theta2. Throws SingularMatrix if
/// the determinant argument is not positive definite.
double vacuum_overlap(const GaussianState& state, const PolarizerAngles& rotation, ModeSet modes);

/// The four coincidence rates by inclusion-exclusion over vacuum overlaps.
CoincidenceRates coincidence_rates(const GaussianState& state, const PolarizerAngles& angles,
                                   const Tolerances& tol = default_tolerances());

}  // namespace photobell
