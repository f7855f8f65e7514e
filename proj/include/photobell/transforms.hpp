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

#include <optional>

#include <Eigen/Dense>

#include "photobell/tolerances.hpp"

namespace photobell {

using Matrix8d = Eigen::Matrix<double, 8, 8>;

/// The symplectic form [[0, I4], [-I4, 0]] in (q1..q4, p1..p4) ordering.
Matrix8d symplectic_form();

/// A passive (photon-number conserving) mode transformation a'_j = sum_k U_jk a_k.
///
/// In the Schrodinger picture the induced Fock unitary maps the coherent
/// state |z> to |U z>, i.e. it sends a_k^dagger to sum_j U_jk a_j^dagger.
class PassiveTransform {
 public:
  /// Validates U^dagger U = I within the unitarity tolerance.
  explicit PassiveTransform(const Eigen::Matrix4cd& u,
                            const Tolerances& tol = default_tolerances());

  static PassiveTransform identity();
  /// The real "maximally entangling" mixer used for the squeezed Gaussian family.
  static PassiveTransform entangler();
  /// Block-diagonal polarization rotation: each present angle rotates its
  /// beam's (x, y) pair by [[cos, sin], [-sin, cos]], so that the new x mode
  /// is the transmitted mode cos(theta) a_x + sin(theta) a_y.
  static PassiveTransform beam_rotation(std::optional<double> theta1,
                                        std::optional<double> theta2);

  const Eigen::Matrix4cd& matrix() const { return u_; }
  PassiveTransform inverse() const;
  bool is_identity() const { return u_.isIdentity(0.0); }

  friend PassiveTransform operator*(const PassiveTransform& a, const PassiveTransform& b);

 private:
  struct Unchecked {};
  PassiveTransform(const Eigen::Matrix4cd& u, Unchecked) : u_(u) {}
  Eigen::Matrix4cd u_;
};

/// A real 8x8 matrix preserving the symplectic form.
class SymplecticMatrix {
 public:
  /// Validates M^T beta M = beta within the symplectic tolerance.
  explicit SymplecticMatrix(const Matrix8d& m, const Tolerances& tol = default_tolerances());

  const Matrix8d& matrix() const { return m_; }
  /// max |M^T beta M - beta|.
  double symplectic_residual() const;
  /// max |M^T M - I|; zero for passive transformations.
  double orthogonality_residual() const;

 private:
  Matrix8d m_;
};

/// Squeeze parameters of the four-mode Gaussian family: modes 1 and 4 are
/// squeezed by equal and opposite amounts u, modes 2 and 3 by v.
struct SqueezeParams {
  double u = 0.0;
  double v = 0.0;
};

}  // namespace photobell
