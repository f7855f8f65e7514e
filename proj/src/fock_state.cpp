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

#include "photobell/fock_state.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include <Eigen/Eigenvalues>

namespace photobell {
namespace {

void require_same_basis(const FockBasis& a, const FockBasis& b) {
  if (a.labels() != b.labels() || a.cutoff() != b.cutoff()) {
    throw PreconditionViolated("states live on different Fock bases");
  }
}

// Upper tail P(N > cutoff) of a Poisson distribution with mean lambda.
double poisson_tail(double lambda, int cutoff) {
  if (lambda <= 0.0) return 0.0;
  double tail = 0.0;
  for (int n = cutoff + 1; n < cutoff + 100000; ++n) {
    const double term = std::exp(-lambda + n * std::log(lambda) - std::lgamma(n + 1.0));
    tail += term;
    if (n > lambda && term <= 1e-18 * tail) break;
  }
  return std::min(tail, 1.0);
}

// Factor of a Hermitian PSD matrix from its eigendecomposition; eigenvalues
// at or below zero are dropped.
Eigen::MatrixXcd eigen_factor(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  const Eigen::VectorXd& values = solver.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > 0.0) keep.push_back(i);
  }
  Eigen::MatrixXcd factor(rho.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    factor.col(static_cast<Eigen::Index>(c)) =
        solver.eigenvectors().col(keep[c]) * std::sqrt(values[keep[c]]);
  }
  return factor;
}

}  // namespace

PureState::PureState(FockBasisPtr basis, Eigen::VectorXcd amplitudes, double norm_deficit)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)), norm_deficit_(norm_deficit) {
  if (!basis_) throw PreconditionViolated("null basis");
  if (amplitudes_.size() != static_cast<Eigen::Index>(basis_->dim())) {
    throw PreconditionViolated("amplitude vector does not match the basis dimension");
  }
}

std::complex<double> PureState::amplitude(const Occupation& occupation) const {
  const std::size_t i = basis_->index_of(occupation);
  return i == FockBasis::npos ? std::complex<double>{} : amplitudes_[static_cast<Eigen::Index>(i)];
}

PureState make_vacuum(int cutoff) { return make_number_state({0, 0, 0, 0}, cutoff); }

PureState make_number_state(const Occupation& occupations, int cutoff) {
  auto basis = FockBasis::four_mode(cutoff);
  for (int n : occupations) {
    if (n < 0) throw PreconditionViolated("occupation numbers must be nonnegative");
  }
  const std::size_t i = basis->index_of(occupations);
  if (i == FockBasis::npos) {
    throw OccupationExceedsCutoff("number state exceeds the cutoff " + std::to_string(cutoff));
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->dim()));
  amps[static_cast<Eigen::Index>(i)] = 1.0;
  return PureState(std::move(basis), std::move(amps));
}

PureState make_two_photon_bell(int cutoff) {
  if (cutoff < 2) throw OccupationExceedsCutoff("the two-photon state needs cutoff >= 2");
  auto basis = FockBasis::four_mode(cutoff);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->dim()));
  const auto set = [&](const Occupation& occ, double c) {
    amps[static_cast<Eigen::Index>(basis->index_of(occ))] = c;
  };
  set({1, 0, 0, 1}, 0.5);
  set({1, 1, 0, 0}, -0.5);
  set({0, 0, 1, 1}, -0.5);
  set({0, 1, 1, 0}, 0.5);
  return PureState(std::move(basis), std::move(amps));
}

PureState make_coherent_state(const CoherentAmplitudes& z, int cutoff, const Tolerances& tol) {
  if (cutoff < 0) throw PreconditionViolated("cutoff must be nonnegative");
  double lambda = 0.0;
  for (const auto& zi : z) {
    if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag())) {
      throw PreconditionViolated("coherent amplitudes must be finite");
    }
    lambda += std::norm(zi);
  }
  const double deficit = poisson_tail(lambda, cutoff);
  if (deficit > tol.truncation) {
    throw TruncationTooSevere("coherent state loses " + std::to_string(deficit) +
                                  " probability at cutoff " + std::to_string(cutoff),
                              deficit);
  }
  auto basis = FockBasis::four_mode(cutoff);
  // per_mode[i][n] = z_i^n / sqrt(n!)
  std::array<std::vector<std::complex<double>>, 4> per_mode;
  for (int i = 0; i < 4; ++i) {
    per_mode[i].resize(cutoff + 1);
    per_mode[i][0] = 1.0;
    for (int n = 1; n <= cutoff; ++n) {
      per_mode[i][n] = per_mode[i][n - 1] * z[i] / std::sqrt(static_cast<double>(n));
    }
  }
  const double prefactor = std::exp(-0.5 * lambda);
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(basis->dim()));
  for (std::size_t k = 0; k < basis->dim(); ++k) {
    const Occupation& occ = basis->occupation(k);
    amps[static_cast<Eigen::Index>(k)] = prefactor * per_mode[0][occ[0]] * per_mode[1][occ[1]] *
                                         per_mode[2][occ[2]] * per_mode[3][occ[3]];
  }
  return PureState(std::move(basis), std::move(amps), deficit);
}

FockDensityMatrix::FockDensityMatrix(FockBasisPtr basis, Eigen::MatrixXcd factor,
                                     double norm_deficit)
    : basis_(std::move(basis)), factor_(std::move(factor)), norm_deficit_(norm_deficit) {
  if (!basis_) throw PreconditionViolated("null basis");
  if (factor_.rows() != static_cast<Eigen::Index>(basis_->dim())) {
    throw PreconditionViolated("factor rows do not match the basis dimension");
  }
}

FockDensityMatrix FockDensityMatrix::from_dense(FockBasisPtr basis, const Eigen::MatrixXcd& rho,
                                                double norm_deficit, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(basis->dim());
  if (rho.rows() != n || rho.cols() != n) {
    throw PreconditionViolated("dense matrix does not match the basis dimension");
  }
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.hermiticity) {
    throw PreconditionViolated("density matrix is not Hermitian (residual " +
                               std::to_string(herm) + ")");
  }
  const Eigen::MatrixXcd sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
  if (n > 0 && solver.eigenvalues()[0] < tol.psd_floor) {
    throw PreconditionViolated("density matrix is not positive semidefinite (least eigenvalue " +
                               std::to_string(solver.eigenvalues()[0]) + ")");
  }
  return FockDensityMatrix(std::move(basis), eigen_factor(sym), norm_deficit);
}

FockDensityMatrix FockDensityMatrix::mixture(std::span<const double> weights,
                                             std::span<const FockDensityMatrix> states) {
  if (weights.size() != states.size() || states.empty()) {
    throw PreconditionViolated("mixture needs one weight per state");
  }
  double total = 0.0;
  Eigen::Index cols = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!(weights[i] >= 0.0)) throw PreconditionViolated("mixture weights must be nonnegative");
    require_same_basis(states[0].basis(), states[i].basis());
    total += weights[i];
    cols += states[i].rank();
  }
  if (std::abs(total - 1.0) > 1e-12) throw PreconditionViolated("mixture weights must sum to one");

  Eigen::MatrixXcd factor(static_cast<Eigen::Index>(states[0].dim()), cols);
  double deficit = 0.0;
  Eigen::Index at = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Eigen::Index r = states[i].rank();
    factor.middleCols(at, r) = std::sqrt(weights[i]) * states[i].factor();
    at += r;
    deficit += weights[i] * states[i].norm_deficit();
  }
  FockDensityMatrix out(states[0].basis_ptr(), std::move(factor), deficit);
  return out.compressed();
}

std::complex<double> FockDensityMatrix::entry(std::size_t i, std::size_t j) const {
  return factor_.row(static_cast<Eigen::Index>(i))
      .dot(factor_.row(static_cast<Eigen::Index>(j)).conjugate());
}

Eigen::MatrixXcd FockDensityMatrix::dense() const { return factor_ * factor_.adjoint(); }

double FockDensityMatrix::purity() const { return (factor_.adjoint() * factor_).squaredNorm(); }

double FockDensityMatrix::least_eigenvalue() const {
  if (rank() < static_cast<Eigen::Index>(dim())) {
    // A rank-deficient factor has an exact null space; the nonzero spectrum
    // equals that of L† L, which is PSD up to roundoff.
    if (rank() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(factor_.adjoint() * factor_,
                                                           Eigen::EigenvaluesOnly);
    return std::min(0.0, solver.eigenvalues()[0]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()[0];
}

double FockDensityMatrix::hermiticity_residual() const {
  const Eigen::MatrixXcd rho = dense();
  return dim() == 0 ? 0.0 : (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> FockDensityMatrix::photon_number_distribution() const {
  std::vector<double> out(cutoff() + 1, 0.0);
  const Eigen::VectorXd diag = diagonal();
  for (int n = 0; n <= cutoff(); ++n) {
    for (std::size_t i = basis_->sector_begin(n); i < basis_->sector_end(n); ++i) {
      out[n] += diag[static_cast<Eigen::Index>(i)];
    }
  }
  return out;
}

double FockDensityMatrix::mean_occupation(ModeIndex mode) const {
  const int p = basis_->position_of(mode);
  if (p < 0) throw PreconditionViolated("mode is not part of this state");
  const Eigen::VectorXd diag = diagonal();
  double mean = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    mean += basis_->occupation(i)[p] * diag[static_cast<Eigen::Index>(i)];
  }
  return mean;
}

FockDensityMatrix FockDensityMatrix::compressed() const {
  if (rank() <= static_cast<Eigen::Index>(dim())) return *this;
  return FockDensityMatrix(basis_, eigen_factor(dense()), norm_deficit_);
}

FockDensityMatrix to_density(const PureState& psi) {
  return FockDensityMatrix(psi.basis_ptr(), psi.amplitudes(), psi.norm_deficit());
}

FockDensityMatrix partial_trace(const FockDensityMatrix& rho, ModeSet modes_kept) {
  const FockBasis& basis = rho.basis();
  if (modes_kept.empty()) throw PreconditionViolated("partial trace must keep at least one mode");
  const std::vector<int> kept = basis.positions_of(modes_kept);
  if (static_cast<int>(kept.size()) == basis.num_modes()) return rho;

  std::vector<ModeIndex> kept_labels;
  std::vector<bool> is_kept(basis.num_modes(), false);
  for (int p : kept) {
    kept_labels.push_back(basis.labels()[p]);
    is_kept[p] = true;
  }
  auto out_basis = FockBasis::make(kept_labels, basis.cutoff());

  // For each configuration of the traced modes, the (row, kept index) pairs.
  const std::size_t radix = static_cast<std::size_t>(basis.cutoff()) + 1;
  std::unordered_map<std::size_t, std::size_t> block_of;
  std::vector<std::vector<std::pair<Eigen::Index, Eigen::Index>>> blocks;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Occupation& occ = basis.occupation(i);
    Occupation kept_occ{};
    std::size_t key = 0;
    int a = 0;
    for (int p = 0; p < basis.num_modes(); ++p) {
      if (is_kept[p]) {
        kept_occ[a++] = occ[p];
      } else {
        key = key * radix + static_cast<std::size_t>(occ[p]);
      }
    }
    auto [it, inserted] = block_of.try_emplace(key, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].emplace_back(static_cast<Eigen::Index>(i),
                                    static_cast<Eigen::Index>(out_basis->index_of(kept_occ)));
  }

  const Eigen::MatrixXcd& factor = rho.factor();
  const Eigen::Index rank = factor.cols();
  const auto out_dim = static_cast<Eigen::Index>(out_basis->dim());
  const auto stacked = static_cast<Eigen::Index>(blocks.size()) * rank;

  if (stacked <= out_dim) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, stacked);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const Eigen::Index col = static_cast<Eigen::Index>(b) * rank;
      for (const auto& [row, to] : blocks[b]) out.row(to).segment(col, rank) = factor.row(row);
    }
    return FockDensityMatrix(std::move(out_basis), std::move(out), rho.norm_deficit());
  }

  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  Eigen::MatrixXcd gathered;
  for (const auto& block : blocks) {
    const auto n = static_cast<Eigen::Index>(block.size());
    gathered.resize(n, rank);
    for (Eigen::Index r = 0; r < n; ++r) gathered.row(r) = factor.row(block[r].first);
    const Eigen::MatrixXcd gram = gathered * gathered.adjoint();
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) dense(block[r].second, block[c].second) += gram(r, c);
    }
  }
  return FockDensityMatrix(std::move(out_basis), eigen_factor(dense), rho.norm_deficit());
}

double prob_vacuum_in_modes(const FockDensityMatrix& rho, ModeSet modes) {
  if (modes.empty()) throw PreconditionViolated("vacuum projector needs at least one mode");
  const FockBasis& basis = rho.basis();
  const std::vector<int> positions = basis.positions_of(modes);
  const Eigen::MatrixXcd& factor = rho.factor();
  double p = 0.0;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const Occupation& occ = basis.occupation(i);
    bool empty = true;
    for (int pos : positions) empty = empty && occ[pos] == 0;
    if (empty) p += factor.row(static_cast<Eigen::Index>(i)).squaredNorm();
  }
  return p;
}

}  // namespace photobell
