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

#include "photobell/gaussian.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "photobell/optics.hpp"

namespace photobell {
namespace {

using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;

// log det of a symmetric positive-definite matrix, or nullopt if the
// Cholesky factorization fails.
std::optional<double> spd_log_det(const Matrix8d& a) {
  Eigen::LLT<Matrix8d> llt(a);
  if (llt.info() != Eigen::Success) return std::nullopt;
  const auto diag = llt.matrixLLT().diagonal();
  double log_det = 0.0;
  for (int i = 0; i < 8; ++i) {
    if (!(diag[i] > 0.0)) return std::nullopt;
    log_det += 2.0 * std::log(diag[i]);
  }
  return log_det;
}

}  // namespace

ValidityReport check_validity(const Matrix8d& g, const Tolerances& tol) {
  ValidityReport report;
  if (!g.allFinite()) {
    report.least_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    report.least_uncertainty_eigenvalue = std::numeric_limits<double>::quiet_NaN();
    report.symmetry_residual = std::numeric_limits<double>::infinity();
    return report;
  }
  report.symmetry_residual = (g - g.transpose()).cwiseAbs().maxCoeff();
  const Matrix8d sym = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix8d> eig(sym, Eigen::EigenvaluesOnly);
  report.least_eigenvalue = eig.eigenvalues()[0];
  if (!(report.least_eigenvalue > 0.0)) {
    report.least_uncertainty_eigenvalue = -std::numeric_limits<double>::infinity();
    return report;
  }
  const Matrix8d inv = sym.inverse();
  const Matrix8cd h = 0.5 * (inv + inv.transpose()).cast<std::complex<double>>() +
                      std::complex<double>(0.0, 1.0) * symplectic_form().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Matrix8cd> heig(h, Eigen::EigenvaluesOnly);
  report.least_uncertainty_eigenvalue = heig.eigenvalues()[0];
  report.valid = report.symmetry_residual <= tol.symmetry &&
                 report.least_uncertainty_eigenvalue >= tol.uncertainty_floor;
  return report;
}

GaussianState GaussianState::from_precision(const Matrix8d& g, const Tolerances& tol) {
  const ValidityReport report = check_validity(g, tol);
  if (!report.valid) {
    throw InvalidGaussian("precision matrix is not a physical state (symmetry residual " +
                          std::to_string(report.symmetry_residual) + ", least eigenvalue " +
                          std::to_string(report.least_eigenvalue) +
                          ", least uncertainty eigenvalue " +
                          std::to_string(report.least_uncertainty_eigenvalue) + ")");
  }
  const Matrix8d sym = 0.5 * (g + g.transpose());
  const auto log_det = spd_log_det(sym);
  if (!log_det) throw InvalidGaussian("precision matrix is not positive definite");
  return GaussianState(sym, *log_det);
}

NoiseMatrix GaussianState::noise() const {
  NoiseMatrix noise;
  const Matrix8d inv = g_.inverse();
  noise.v = 0.25 * (inv + inv.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix8d> eig(noise.v, Eigen::EigenvaluesOnly);
  noise.least_eigenvalue = eig.eigenvalues()[0];
  return noise;
}

SqueezingReport squeezing_test(const GaussianState& state, const Tolerances& tol) {
  SqueezingReport report;
  report.least_noise_eigenvalue = state.noise().least_eigenvalue;
  report.squeezed = report.least_noise_eigenvalue < 0.5 - tol.squeezing;
  return report;
}

GaussianState make_gaussian(double kappa, SqueezeParams squeeze, const PassiveTransform& entangler) {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw PreconditionViolated("kappa must lie in (0, 1]");
  const Matrix8d s = squeeze_symplectic(squeeze).matrix();
  const Matrix8d u = passive_to_symplectic(entangler).matrix();
  // U is orthogonal, so U^-1 = U^T.
  const Matrix8d g = u.transpose() * (kappa * s.transpose() * s) * u;
  return GaussianState::from_precision(0.5 * (g + g.transpose()));
}

double vacuum_overlap(const GaussianState& state, const PolarizerAngles& rotation, ModeSet modes) {
  if (modes.empty()) throw PreconditionViolated("vacuum overlap needs at least one mode");
  const Matrix8d r =
      rotation_pair(rotation.theta1().value_or(0.0), rotation.theta2().value_or(0.0)).matrix();
  Matrix8d a = r.transpose() * state.precision() * r;
  a = 0.5 * (a + a.transpose());
  for (ModeIndex m : modes.members()) {
    a(m.value(), m.value()) += 1.0;
    a(m.value() + 4, m.value() + 4) += 1.0;
  }
  const auto log_det = spd_log_det(a);
  if (!log_det) throw SingularMatrix("overlap determinant argument is not positive definite");
  return std::ldexp(std::exp(0.5 * (state.log_det() - *log_det)), modes.size());
}

CoincidenceRates coincidence_rates(const GaussianState& state, const PolarizerAngles& angles,
                                   const Tolerances& tol) {
  const ModeSet beam1[2] = {angles.theta1() ? ModeSet{0} : ModeSet{0, 1}, ModeSet{0, 1}};
  const ModeSet beam2[2] = {angles.theta2() ? ModeSet{2} : ModeSet{2, 3}, ModeSet{2, 3}};
  std::array<std::optional<double>, 16> memo;
  const auto overlap = [&](ModeSet m) {
    auto& slot = memo[m.bits()];
    if (!slot) slot = vacuum_overlap(state, angles, m);
    return *slot;
  };
  VacuumProbabilities vac;
  for (int i = 0; i < 2; ++i) {
    vac.beam1[i] = overlap(beam1[i]);
    vac.beam2[i] = overlap(beam2[i]);
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) vac.joint[i][j] = overlap(beam1[i] | beam2[j]);
  }
  return rates_from_vacuum(vac, angles, tol);
}

}  // namespace photobell
