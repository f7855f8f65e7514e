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

#include "photobell/optics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "photobell/induced_representation.hpp"

namespace photobell {

Matrix8d symplectic_form() {
  Matrix8d beta = Matrix8d::Zero();
  beta.topRightCorner<4, 4>().setIdentity();
  beta.bottomLeftCorner<4, 4>() = -Eigen::Matrix4d::Identity();
  return beta;
}

PassiveTransform::PassiveTransform(const Eigen::Matrix4cd& u, const Tolerances& tol) : u_(u) {
  if (!u.allFinite()) throw PreconditionViolated("passive transform has non-finite entries");
  const double residual = (u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
  if (residual > tol.unitarity) {
    throw PreconditionViolated("passive transform is not unitary (residual " +
                               std::to_string(residual) + ")");
  }
}

PassiveTransform PassiveTransform::identity() {
  return PassiveTransform(Eigen::Matrix4cd::Identity(), Unchecked{});
}

PassiveTransform PassiveTransform::entangler() {
  Eigen::Matrix4d u;
  u << 1, 1, 1, 1,
      -1, 1, -1, 1,
      -1, -1, 1, 1,
      1, -1, -1, 1;
  return PassiveTransform(0.5 * u.cast<std::complex<double>>(), Unchecked{});
}

PassiveTransform PassiveTransform::beam_rotation(std::optional<double> theta1,
                                                 std::optional<double> theta2) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  const std::array<std::optional<double>, 2> thetas{theta1, theta2};
  for (int b = 0; b < 2; ++b) {
    if (!thetas[b]) continue;
    const double c = std::cos(*thetas[b]);
    const double s = std::sin(*thetas[b]);
    u(2 * b, 2 * b) = c;
    u(2 * b, 2 * b + 1) = s;
    u(2 * b + 1, 2 * b) = -s;
    u(2 * b + 1, 2 * b + 1) = c;
  }
  return PassiveTransform(u, Unchecked{});
}

PassiveTransform PassiveTransform::inverse() const {
  return PassiveTransform(u_.adjoint(), Unchecked{});
}

PassiveTransform operator*(const PassiveTransform& a, const PassiveTransform& b) {
  return PassiveTransform(a.u_ * b.u_, PassiveTransform::Unchecked{});
}

SymplecticMatrix::SymplecticMatrix(const Matrix8d& m, const Tolerances& tol) : m_(m) {
  if (!m.allFinite()) throw PreconditionViolated("symplectic matrix has non-finite entries");
  const double residual = symplectic_residual();
  if (residual > tol.symplectic) {
    throw PreconditionViolated("matrix is not symplectic (residual " + std::to_string(residual) +
                               ")");
  }
}

double SymplecticMatrix::symplectic_residual() const {
  const Matrix8d beta = symplectic_form();
  return (m_.transpose() * beta * m_ - beta).cwiseAbs().maxCoeff();
}

double SymplecticMatrix::orthogonality_residual() const {
  return (m_.transpose() * m_ - Matrix8d::Identity()).cwiseAbs().maxCoeff();
}

SymplecticMatrix rotation_pair(double theta1, double theta2) {
  Matrix8d r = Matrix8d::Identity();
  const std::array<double, 2> thetas{theta1, theta2};
  for (int b = 0; b < 2; ++b) {
    const double c = std::cos(thetas[b]);
    const double s = std::sin(thetas[b]);
    for (int block = 0; block < 2; ++block) {
      const int i = 4 * block + 2 * b;
      r(i, i) = c;
      r(i, i + 1) = -s;
      r(i + 1, i) = s;
      r(i + 1, i + 1) = c;
    }
  }
  return SymplecticMatrix(r);
}

SymplecticMatrix passive_to_symplectic(const PassiveTransform& t) {
  const Eigen::Matrix4d x = t.matrix().real();
  const Eigen::Matrix4d y = t.matrix().imag();
  Matrix8d m;
  m << x, -y, y, x;
  return SymplecticMatrix(m);
}

SymplecticMatrix squeeze_symplectic(SqueezeParams s) {
  if (!std::isfinite(s.u) || !std::isfinite(s.v)) {
    throw PreconditionViolated("squeeze parameters must be finite");
  }
  Eigen::Matrix<double, 8, 1> d;
  d << std::exp(-s.u), std::exp(s.v), std::exp(-s.v), std::exp(s.u), std::exp(s.u),
      std::exp(-s.v), std::exp(s.v), std::exp(-s.u);
  return SymplecticMatrix(d.asDiagonal().toDenseMatrix());
}

namespace {

void require_four_modes(const FockBasis& basis) {
  if (basis.num_modes() != 4) {
    throw PreconditionViolated("passive transforms act on the full four-mode basis");
  }
}

constexpr std::array<int, 4> kAllPositions{0, 1, 2, 3};

}  // namespace

FockDensityMatrix apply_passive_fock(const PassiveTransform& t, const FockDensityMatrix& rho) {
  require_four_modes(rho.basis());
  if (t.is_identity()) return rho;
  Eigen::MatrixXcd factor = rho.factor();
  apply_mode_unitary(rho.basis(), kAllPositions, t.matrix(), factor);
  return FockDensityMatrix(rho.basis_ptr(), std::move(factor), rho.norm_deficit());
}

PureState apply_passive_fock(const PassiveTransform& t, const PureState& psi) {
  require_four_modes(psi.basis());
  if (t.is_identity()) return psi;
  Eigen::MatrixXcd amps = psi.amplitudes();
  apply_mode_unitary(psi.basis(), kAllPositions, t.matrix(), amps);
  return PureState(psi.basis_ptr(), amps.col(0), psi.norm_deficit());
}

GaussianState apply_passive_gaussian(const PassiveTransform& t, const GaussianState& state) {
  const Matrix8d m = passive_to_symplectic(t).matrix();
  const Matrix8d g = m * state.precision() * m.transpose();
  return GaussianState::from_precision(0.5 * (g + g.transpose()));
}

GaussianState apply_squeeze_gaussian(SqueezeParams s, const GaussianState& state) {
  const Matrix8d m = squeeze_symplectic(s).matrix();
  const Matrix8d g = m.transpose() * state.precision() * m;
  return GaussianState::from_precision(0.5 * (g + g.transpose()));
}

FockDensityMatrix rotate_beam(const FockDensityMatrix& rho, Beam beam, double theta) {
  const FockBasis& basis = rho.basis();
  const int px = basis.position_of(x_mode(beam));
  const int py = basis.position_of(y_mode(beam));
  if (px < 0 || py < 0) throw PreconditionViolated("both polarization modes of the beam are needed");
  const double t = normalize_angle(theta);
  if (t == 0.0) return rho;
  const double c = std::cos(t);
  const double s = std::sin(t);
  Eigen::Matrix2cd w;
  w << c, s, -s, c;
  const std::array<int, 2> positions{px, py};
  Eigen::MatrixXcd factor = rho.factor();
  apply_mode_unitary(basis, positions, w, factor);
  return FockDensityMatrix(rho.basis_ptr(), std::move(factor), rho.norm_deficit());
}

FockDensityMatrix polarizer_channel(const FockDensityMatrix& rho, Beam beam, double theta) {
  const FockDensityMatrix rotated = rotate_beam(rho, beam, theta);
  ModeSet kept;
  for (ModeIndex m : rotated.basis().labels()) {
    if (m != y_mode(beam)) kept.insert(m);
  }
  return partial_trace(rotated, kept);
}

}  // namespace photobell
