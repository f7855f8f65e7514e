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

#include "photobell/fock_state.hpp"
#include "photobell/gaussian.hpp"
#include "photobell/transforms.hpp"

namespace photobell {

/// Block-diagonal orthogonal symplectic acting with [[cos, -sin], [sin, cos]]
/// on (q1, q2), (q3, q4) and identically on the p block. The overlap
/// formulas use it as R^T G R.
SymplecticMatrix rotation_pair(double theta1, double theta2);

/// [[X, -Y], [Y, X]] for U = X + iY; maps the mean quadratures of |z> to
/// those of |U z>.
SymplecticMatrix passive_to_symplectic(const PassiveTransform& t);

/// diag(e^-u, e^v, e^-v, e^u, e^u, e^-v, e^v, e^-u).
SymplecticMatrix squeeze_symplectic(SqueezeParams s);

/// rho -> U rho U† with U the Fock unitary sending |z> to |U z>. Needs the
/// full four-mode basis.
FockDensityMatrix apply_passive_fock(const PassiveTransform& t, const FockDensityMatrix& rho);
PureState apply_passive_fock(const PassiveTransform& t, const PureState& psi);

/// G -> M G M^T with M = passive_to_symplectic(t).
GaussianState apply_passive_gaussian(const PassiveTransform& t, const GaussianState& state);

/// G -> S^T G S.
GaussianState apply_squeeze_gaussian(SqueezeParams s, const GaussianState& state);

/// Rotates a beam's polarization pair so that its x mode becomes
/// cos(theta) a_x + sin(theta) a_y. Both modes must be present.
FockDensityMatrix rotate_beam(const FockDensityMatrix& rho, Beam beam, double theta);

/// Linear polarizer: rotate_beam followed by tracing out the y mode. The
/// traced mode is dropped from the basis.
FockDensityMatrix polarizer_channel(const FockDensityMatrix& rho, Beam beam, double theta);

}  // namespace photobell
