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
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "photobell/fock_basis.hpp"
#include "photobell/tolerances.hpp"
#include "photobell/transforms.hpp"

namespace photobell {

using CoherentAmplitudes = std::array<std::complex<double>, 4>;

/// A truncated pure state over a FockBasis.
class PureState {
 public:
  PureState(FockBasisPtr basis, Eigen::VectorXcd amplitudes, double norm_deficit = 0.0);

  const FockBasis& basis() const { return *basis_; }
  const FockBasisPtr& basis_ptr() const { return basis_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  /// Amplitude of a basis tuple; zero for tuples beyond the cutoff.
  std::complex<double> amplitude(const Occupation& occupation) const;
  double norm_deficit() const { return norm_deficit_; }
  int cutoff() const { return basis_->cutoff(); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  FockBasisPtr basis_;
  Eigen::VectorXcd amplitudes_;
  double norm_deficit_;
};

PureState make_vacuum(int cutoff);
/// Throws OccupationExceedsCutoff when the total exceeds the cutoff.
PureState make_number_state(const Occupation& occupations, int cutoff);
/// ½(a1† − a3†)(a4† − a2†)|0000⟩.
PureState make_two_photon_bell(int cutoff);
/// Product of coherent states truncated at the cutoff. The recorded deficit
/// is the Poisson tail of the total photon number; throws TruncationTooSevere
/// when it exceeds `tol.truncation`.
PureState make_coherent_state(const CoherentAmplitudes& z, int cutoff,
                              const Tolerances& tol = default_tolerances());

/// A density matrix stored as rho = L L†.
///
/// L has one row per basis state and one column per (unnormalized) pure
/// component, so Hermiticity and positivity hold by construction. Mixtures
/// and traced-out states keep the factor thin until its rank would exceed
/// the dimension, at which point it is refactored from the dense matrix.
class FockDensityMatrix {
 public:
  FockDensityMatrix(FockBasisPtr basis, Eigen::MatrixXcd factor, double norm_deficit = 0.0);

  /// Validates Hermiticity and positivity of a dense matrix and factors it.
  static FockDensityMatrix from_dense(FockBasisPtr basis, const Eigen::MatrixXcd& rho,
                                      double norm_deficit = 0.0,
                                      const Tolerances& tol = default_tolerances());

  /// Convex combination; weights must be nonnegative and sum to one.
  static FockDensityMatrix mixture(std::span<const double> weights,
                                   std::span<const FockDensityMatrix> states);

  const FockBasis& basis() const { return *basis_; }
  const FockBasisPtr& basis_ptr() const { return basis_; }
  const Eigen::MatrixXcd& factor() const { return factor_; }
  double norm_deficit() const { return norm_deficit_; }
  int cutoff() const { return basis_->cutoff(); }
  std::size_t dim() const { return basis_->dim(); }
  Eigen::Index rank() const { return factor_.cols(); }

  std::complex<double> entry(std::size_t i, std::size_t j) const;
  Eigen::MatrixXcd dense() const;
  double trace() const { return factor_.squaredNorm(); }
  double purity() const;
  double least_eigenvalue() const;
  double hermiticity_residual() const;
  /// Probability of each total photon number 0..cutoff.
  std::vector<double> photon_number_distribution() const;
  double mean_occupation(ModeIndex mode) const;
  /// Diagonal of rho in basis order.
  Eigen::VectorXd diagonal() const { return factor_.rowwise().squaredNorm(); }

  /// Same operator with a factor of rank at most dim.
  FockDensityMatrix compressed() const;

 private:
  FockBasisPtr basis_;
  Eigen::MatrixXcd factor_;
  double norm_deficit_;
};

FockDensityMatrix to_density(const PureState& psi);

/// Reduced state on `modes_kept`; the result's basis carries only the kept
/// labels, in ascending order.
FockDensityMatrix partial_trace(const FockDensityMatrix& rho, ModeSet modes_kept);

/// Tr(rho · ⊗_{m in modes} |0⟩⟨0|_m).
double prob_vacuum_in_modes(const FockDensityMatrix& rho, ModeSet modes);

/// Fock oracle for the centered Gaussian family: a four-mode thermal product
/// with mean occupation (1 − κ)/(2κ) per mode, squeezed per mode and then
/// mixed by the inverse of `entangler`.
///
/// Mixture components are kept in order of total thermal occupation until
/// the discarded weight is below `tol.thermal_component_mass`. Throws
/// TruncationTooSevere if the thermal tail beyond the cutoff exceeds
/// `tol.thermal_tail` or the final trace deficit exceeds `tol.truncation`.
FockDensityMatrix make_thermal_mixture(double kappa, SqueezeParams squeeze, int cutoff,
                                       const PassiveTransform& entangler = PassiveTransform::identity(),
                                       const Tolerances& tol = default_tolerances());

/// Single-mode squeezed number states: column n (0..max_input) holds the
/// Fock amplitudes 0..max_output of S(s)|n⟩, where S(s)† a S(s) = a cosh s − a† sinh s.
Eigen::MatrixXd squeezed_number_states(double s, int max_input, int max_output);

}  // namespace photobell
