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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "photobell/fock_state.hpp"

namespace photobell {
namespace {

using cd = std::complex<double>;

double factorial(int n) { return std::tgamma(n + 1.0); }

// a on the truncated single-mode space 0..d-1.
Eigen::MatrixXd lowering(int d) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

TEST(PureState, VacuumHasUnitAmplitudeAtOrigin) {
  const PureState vac = make_vacuum(3);
  EXPECT_EQ(vac.amplitudes().size(), 35);
  EXPECT_EQ(vac.amplitude({0, 0, 0, 0}), cd(1.0));
  EXPECT_DOUBLE_EQ(vac.norm_squared(), 1.0);
  EXPECT_EQ(vac.norm_deficit(), 0.0);
}

TEST(PureState, NumberStateAndCutoffViolation) {
  const PureState psi = make_number_state({1, 0, 2, 0}, 3);
  EXPECT_EQ(psi.amplitude({1, 0, 2, 0}), cd(1.0));
  EXPECT_DOUBLE_EQ(psi.norm_squared(), 1.0);
  EXPECT_THROW(make_number_state({2, 2, 0, 0}, 3), OccupationExceedsCutoff);
  EXPECT_THROW(make_number_state({-1, 0, 0, 0}, 3), PreconditionViolated);
}

TEST(PureState, TwoPhotonBellAmplitudes) {
  const PureState psi = make_two_photon_bell(4);
  EXPECT_NEAR(psi.amplitude({1, 0, 0, 1}).real(), 0.5, 1e-15);
  EXPECT_NEAR(psi.amplitude({1, 1, 0, 0}).real(), -0.5, 1e-15);
  EXPECT_NEAR(psi.amplitude({0, 0, 1, 1}).real(), -0.5, 1e-15);
  EXPECT_NEAR(psi.amplitude({0, 1, 1, 0}).real(), 0.5, 1e-15);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-15);
  const auto rho = to_density(psi);
  const auto dist = rho.photon_number_distribution();
  EXPECT_NEAR(dist[2], 1.0, 1e-15);
  double mean = 0.0;
  for (int m = 0; m < 4; ++m) mean += rho.mean_occupation(ModeIndex(m));
  EXPECT_NEAR(mean, 2.0, 1e-14);
  EXPECT_THROW(make_two_photon_bell(1), OccupationExceedsCutoff);
}

TEST(PureState, CoherentMatchesPoissonAmplitudes) {
  const CoherentAmplitudes z{cd(0.5, 0.1), cd(-0.2, 0.3), cd(0.0, -0.4), cd(0.25, 0.0)};
  const int cutoff = 14;
  const PureState psi = make_coherent_state(z, cutoff);
  double n2 = 0.0;
  for (const auto& zi : z) n2 += std::norm(zi);
  const auto& basis = psi.basis();
  double max_err = 0.0;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto& occ = basis.occupation(i);
    cd expected = std::exp(-0.5 * n2);
    for (int m = 0; m < 4; ++m) expected *= std::pow(z[m], occ[m]) / std::sqrt(factorial(occ[m]));
    max_err = std::max(max_err, std::abs(expected - psi.amplitudes()(static_cast<Eigen::Index>(i))));
  }
  EXPECT_LT(max_err, 1e-14);
  EXPECT_NEAR(psi.norm_squared() + psi.norm_deficit(), 1.0, 1e-13);
  const auto rho = to_density(psi);
  for (int m = 0; m < 4; ++m) {
    EXPECT_NEAR(rho.mean_occupation(ModeIndex(m)), std::norm(z[m]), 1e-10);
  }
}

TEST(PureState, SingleModeUnitCoherentAmplitude) {
  const PureState psi = make_coherent_state({cd(0.5), cd(0), cd(0), cd(0)}, 10);
  EXPECT_NEAR(psi.amplitude({1, 0, 0, 0}).real(), 0.5 * std::exp(-0.125), 1e-15);
  EXPECT_NEAR(psi.amplitude({0, 0, 0, 0}).real(), std::exp(-0.125), 1e-15);
}

TEST(PureState, CoherentTooLargeForCutoffThrows) {
  const CoherentAmplitudes big{cd(3), cd(3), cd(3), cd(3)};
  EXPECT_THROW(make_coherent_state(big, 2), TruncationTooSevere);
  try {
    make_coherent_state(big, 2);
  } catch (const TruncationTooSevere& e) {
    EXPECT_GT(e.deficit(), 0.99);
  }
}

TEST(DensityMatrix, PartialTraceOfTwoPhotonState) {
  const auto rho = to_density(make_two_photon_bell(2));
  const auto red = partial_trace(rho, ModeSet{0, 1});
  EXPECT_EQ(red.basis().num_modes(), 2);
  EXPECT_NEAR(red.trace(), 1.0, 1e-14);
  // Each of |00>, |01>, |10>, |11> carries weight 1/4 with no coherence.
  const Eigen::MatrixXcd d = red.dense();
  for (const Occupation occ : {Occupation{0, 0, 0, 0}, Occupation{0, 1, 0, 0},
                               Occupation{1, 0, 0, 0}, Occupation{1, 1, 0, 0}}) {
    const auto i = red.basis().index_of(occ);
    ASSERT_NE(i, FockBasis::npos);
    EXPECT_NEAR(d(i, i).real(), 0.25, 1e-15);
  }
  EXPECT_NEAR(red.purity(), 0.25, 1e-14);
  EXPECT_NEAR(prob_vacuum_in_modes(rho, ModeSet{0}), 0.5, 1e-15);
  EXPECT_NEAR(prob_vacuum_in_modes(rho, ModeSet{0, 1}), 0.25, 1e-15);
  EXPECT_NEAR(prob_vacuum_in_modes(rho, ModeSet::all()), 0.0, 1e-15);
  EXPECT_THROW(prob_vacuum_in_modes(rho, ModeSet{}), PreconditionViolated);
}

TEST(DensityMatrix, PartialTraceOfProductIsPure) {
  const CoherentAmplitudes z{cd(0.3), cd(0.0, 0.2), cd(-0.1), cd(0.4, 0.1)};
  const auto rho = to_density(make_coherent_state(z, 12));
  const auto red = partial_trace(rho, ModeSet{1, 3});
  EXPECT_NEAR(red.purity(), red.trace() * red.trace(), 1e-12);
  EXPECT_EQ(red.basis().labels(), (std::vector<ModeIndex>{ModeIndex(1), ModeIndex(3)}));
  EXPECT_NEAR(prob_vacuum_in_modes(rho, ModeSet{0}), std::exp(-0.09), 1e-12);
}

TEST(DensityMatrix, PartialTraceComposesAndPreservesTrace) {
  const CoherentAmplitudes z{cd(0.3), cd(0.0, 0.2), cd(-0.1), cd(0.4, 0.1)};
  std::vector<FockDensityMatrix> parts{to_density(make_two_photon_bell(5)),
                                       to_density(make_coherent_state(z, 5, {.truncation = 1.0}))};
  const std::vector<double> w{0.4, 0.6};
  const auto rho = FockDensityMatrix::mixture(w, parts);
  const auto step = partial_trace(partial_trace(rho, ModeSet{0, 1, 3}), ModeSet{0, 3});
  const auto direct = partial_trace(rho, ModeSet{0, 3});
  EXPECT_LT((step.dense() - direct.dense()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(direct.trace(), rho.trace(), 1e-14);
  EXPECT_GT(direct.least_eigenvalue(), -1e-12);
  EXPECT_LT(direct.hermiticity_residual(), 1e-14);
}

TEST(DensityMatrix, ProbVacuumOfUnitCoherentMode) {
  const auto rho = to_density(make_coherent_state({cd(1), cd(0), cd(0), cd(0)}, 16));
  EXPECT_NEAR(prob_vacuum_in_modes(rho, ModeSet{0}), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(prob_vacuum_in_modes(rho, ModeSet{1, 2, 3}), rho.trace(), 1e-15);
}

TEST(DensityMatrix, ProbVacuumIsMonotoneInModeSet) {
  const CoherentAmplitudes z{cd(0.5), cd(0.3), cd(0.2), cd(0.6)};
  const auto rho = to_density(make_coherent_state(z, 12));
  for (int small = 1; small < 16; ++small) {
    for (int big = 0; big < 16; ++big) {
      if ((small & big) != small) continue;
      ModeSet s, b;
      for (int m = 0; m < 4; ++m) {
        if (small & (1 << m)) s.insert(ModeIndex(m));
        if (big & (1 << m)) b.insert(ModeIndex(m));
      }
      EXPECT_GE(prob_vacuum_in_modes(rho, s) + 1e-15, prob_vacuum_in_modes(rho, b));
    }
  }
}

TEST(DensityMatrix, MixtureAndCompressionAgreeWithDense) {
  std::vector<FockDensityMatrix> parts;
  std::vector<double> w;
  for (int k = 0; k < 80; ++k) {
    parts.push_back(to_density(make_number_state({k % 3, (k / 3) % 2, 0, k % 2}, 4)));
    w.push_back(1.0 / 80);
  }
  const auto rho = FockDensityMatrix::mixture(w, parts);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(rho.dim(), rho.dim());
  for (std::size_t k = 0; k < parts.size(); ++k) expected += w[k] * parts[k].dense();
  EXPECT_LT((rho.dense() - expected).cwiseAbs().maxCoeff(), 1e-15);
  const auto c = rho.compressed();
  EXPECT_LE(c.rank(), static_cast<Eigen::Index>(c.dim()));
  EXPECT_LT((c.dense() - expected).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_THROW(FockDensityMatrix::mixture(std::vector<double>{0.5, 0.6},
                                          std::span(parts).first(2)),
               PreconditionViolated);
}

TEST(DensityMatrix, FromDenseRejectsNonPhysical) {
  const auto basis = FockBasis::four_mode(1);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(5, 5);
  bad(0, 0) = 1.2;
  bad(1, 1) = -0.2;
  EXPECT_THROW(FockDensityMatrix::from_dense(basis, bad), PreconditionViolated);
  Eigen::MatrixXcd skew = Eigen::MatrixXcd::Identity(5, 5) / 5.0;
  skew(0, 1) = cd(0.0, 0.1);
  EXPECT_THROW(FockDensityMatrix::from_dense(basis, skew), PreconditionViolated);
  const Eigen::MatrixXcd ok = Eigen::MatrixXcd::Identity(5, 5) / 5.0;
  const auto rho = FockDensityMatrix::from_dense(basis, ok);
  EXPECT_NEAR(rho.purity(), 0.2, 1e-14);
}

TEST(Squeezing, NumberStatesMatchMatrixExponential) {
  const int d = 160;
  const Eigen::MatrixXd a = lowering(d);
  for (double s : {0.4, -0.7, 1.1}) {
    const Eigen::MatrixXd gen = 0.5 * s * (a * a - a.transpose() * a.transpose());
    const Eigen::MatrixXd u = gen.exp();
    const Eigen::MatrixXd got = squeezed_number_states(s, 5, 20);
    ASSERT_EQ(got.rows(), 21);
    ASSERT_EQ(got.cols(), 6);
    EXPECT_LT((got - u.topLeftCorner(21, 6)).cwiseAbs().maxCoeff(), 1e-11) << "s=" << s;
  }
}

TEST(Squeezing, VacuumHasEvenSupportWithKnownAmplitudes) {
  const double r = 0.6;
  const Eigen::MatrixXd col = squeezed_number_states(r, 0, 12);
  for (int n = 0; n <= 6; ++n) {
    const double expected = std::pow(-std::tanh(r) / 2.0, n) * std::sqrt(factorial(2 * n)) /
                            factorial(n) / std::sqrt(std::cosh(r));
    EXPECT_NEAR(col(2 * n, 0), expected, 1e-13);
  }
  for (int n = 1; n <= 11; n += 2) EXPECT_EQ(col(n, 0), 0.0);
}

TEST(ThermalMixture, UnsqueezedColdStateIsVacuum) {
  const auto rho = make_thermal_mixture(1.0, {}, 4);
  EXPECT_NEAR(rho.entry(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(rho.trace(), 1.0, 1e-15);
}

TEST(ThermalMixture, WarmStateIsDiagonalWithThermalOccupation) {
  const double kappa = 0.75;
  const auto rho = make_thermal_mixture(kappa, {}, 14);
  const double nbar = (1.0 - kappa) / (2.0 * kappa);
  EXPECT_NEAR(nbar, 1.0 / 6.0, 1e-15);
  for (int m = 0; m < 4; ++m) EXPECT_NEAR(rho.mean_occupation(ModeIndex(m)), nbar, 1e-6);
  const Eigen::MatrixXcd d = rho.dense();
  EXPECT_LT((d - Eigen::MatrixXcd(d.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-14);
  const double p0 = 2.0 * kappa / (1.0 + kappa);
  EXPECT_NEAR(prob_vacuum_in_modes(rho, ModeSet{2}), p0, 1e-7);
  EXPECT_NEAR(rho.entry(0, 0).real(), std::pow(p0, 4), 1e-12);
}

TEST(ThermalMixture, SqueezeWithoutMixerHasEvenSupportInOuterModes) {
  const auto rho = make_thermal_mixture(1.0, {0.3, 0.0}, 10);
  const auto& basis = rho.basis();
  const Eigen::VectorXd diag = rho.diagonal();
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto& occ = basis.occupation(i);
    if (occ[0] % 2 || occ[3] % 2 || occ[1] || occ[2]) {
      EXPECT_LT(diag(static_cast<Eigen::Index>(i)), 1e-30);
    }
  }
  // Each outer mode holds a squeezed vacuum: P(empty) = 1 / cosh r, less whatever the
  // cutoff removed.
  const double p0 = prob_vacuum_in_modes(rho, ModeSet{0});
  EXPECT_LE(p0, 1.0 / std::cosh(0.3) + 1e-14);
  EXPECT_GE(p0 + rho.norm_deficit() + 1e-14, 1.0 / std::cosh(0.3));
  EXPECT_NEAR(rho.mean_occupation(ModeIndex(3)), std::pow(std::sinh(0.3), 2), 1e-5);
}

TEST(ThermalMixture, TooSmallCutoffThrows) {
  EXPECT_THROW(make_thermal_mixture(0.75, {}, 3), TruncationTooSevere);
  EXPECT_THROW(make_thermal_mixture(1.0, {1.5, 1.5}, 4), TruncationTooSevere);
  EXPECT_THROW(make_thermal_mixture(0.0, {}, 4), PreconditionViolated);
  EXPECT_THROW(make_thermal_mixture(1.5, {}, 4), PreconditionViolated);
}

}  // namespace
}  // namespace photobell
